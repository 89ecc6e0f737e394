import pytest
from hypothesis import given, strategies as st

from permstat.families import family
from permstat.perm import Permutation, statistics
from permstat.signed import (
    SignedPermutation, anexc_b_set, exc_b_set, insert, negate_all, restrict, sign_class, stats_b,
    swap_positions,
)
from math import factorial


@st.composite
def signed_perms(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    w = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return SignedPermutation(tuple(s * v for s, v in zip(signs, w)))


def test_worked_example_cycles():
    sigma = SignedPermutation.parse("-6,2,4,-3,1,5,8,-7")
    st_ = stats_b(sigma)
    # |sigma| = 6 2 4 3 1 5 8 7 has four cycles; 2 is a fixed point
    assert st_.cyc_b == 4
    assert sigma.cycle_string() == "(1,-6,5)(2)(-3,4)(-7,8)"
    assert (st_.neg, st_.nsum) == (3, 16)
    assert st_.klass == "mixed"


def test_size_one():
    s = stats_b(SignedPermutation((1,)))
    assert (s.exc_b, s.anexc_b, s.rlm_b, s.neg, s.nsum) == (frozenset(), {1}, {1}, 0, 0)
    s = stats_b(SignedPermutation((-1,)))
    assert (s.exc_b, s.rlm_b, s.neg, s.nsum) == ({1}, frozenset(), 1, 1)


def test_parse_and_render():
    sigma = SignedPermutation.parse("-3,2,1")
    assert str(sigma) == "-3,2,1"
    assert sigma.pretty() == "3\u03042" + "1"
    assert sigma(-1) == 3
    assert SignedPermutation.parse(str(sigma)) == sigma
    with pytest.raises(ValueError):
        SignedPermutation((1, -1))


def test_negate_all():
    assert negate_all(SignedPermutation((1, 2))) == SignedPermutation((-1, -2))
    for sigma in family("Bn", 3):
        assert negate_all(negate_all(sigma)) == sigma
        assert stats_b(negate_all(sigma)).cyc_b == stats_b(sigma).cyc_b


@pytest.mark.parametrize("n", range(1, 6))
def test_anti_excedances_become_excedances(n):
    for sigma in family("Bn_plus", n):
        assert anexc_b_set(sigma.window) == exc_b_set(negate_all(sigma).window)


def test_insert_examples():
    tau = SignedPermutation((-1, 2))
    assert insert(-3, 3, tau) == SignedPermutation((-1, 2, -3))
    assert insert(-3, 1, tau) == SignedPermutation((-3, 2, -1))


@pytest.mark.parametrize("n", range(1, 5))
def test_insert_is_bijective(n):
    images = [insert(a, k, tau) for tau in family("Bn", n - 1)
              for a in (n, -n) for k in range(1, n + 1)]
    assert len(set(images)) == len(images) == 2 ** n * factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_partition_into_sign_classes(n):
    full = family("Bn", n)
    plus, minus, mixed = (family(k, n) for k in ("Bn_plus", "Bn_minus", "Bn_mixed"))
    assert (len(plus), len(minus)) == (factorial(n), factorial(n))
    assert len(mixed) == 2 ** n * factorial(n) - 2 * factorial(n)
    assert set(plus) | set(minus) | set(mixed) == set(full)
    for sigma in full:
        s = stats_b(sigma)
        assert s.exc_b | s.anexc_b == set(range(1, n + 1))
        assert not s.exc_b & s.anexc_b


@pytest.mark.parametrize("n", range(1, 6))
def test_positive_part_matches_type_a(n):
    for sigma in family("Bn_plus", n):
        assert stats_b(sigma).rlm_b == statistics(Permutation(sigma.window)).rlm_v


@given(signed_perms())
def test_swap_and_restrict(sigma):
    n = sigma.n
    if n >= 2:
        assert swap_positions(swap_positions(sigma, 1, 2), 1, 2) == sigma
    pos = next(i for i in range(1, n + 1) if abs(sigma(i)) == n)
    smaller = restrict(sigma, pos)
    assert smaller.n == n - 1
    signs = {v > 0 for v in sigma.window}
    expected = {frozenset({True}): "all-positive", frozenset({False}): "all-negative"}
    assert sign_class(sigma.window) == expected.get(frozenset(signs), "mixed")
