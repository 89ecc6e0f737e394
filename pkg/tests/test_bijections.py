import pytest

from permstat import bijections as bj
from permstat.families import WEIGHTS, family
from permstat.perm import Permutation
from permstat.poly import S, T, MultiPoly, var
from permstat.signed import SignedPermutation, insert

P = Permutation.parse


@pytest.mark.parametrize("word,i", [("24153", 2), ("45123", 1), ("4312", 1)])
def test_i_sigma(word, i):
    assert bj.i_sigma(P(word)) == i


@pytest.mark.parametrize("word,image", [("25413", "24513"), ("54213", "45213"),
                                        ("24153", "21453")])
def test_wpsr_examples(word, image):
    assert bj.wpsr_phi(P(word)) == P(image)
    assert bj.wpsr_phi(P(image)) == P(word)


@pytest.mark.parametrize("word,image", [("51423", "4312"), ("41523", "3412"), ("3142", "231")])
def test_psi_examples(word, image):
    assert bj.psi_reduce(P(word)) == P(image)


@pytest.mark.parametrize("n", range(3, 7))
def test_type_a_maps(n):
    for j in range(1, n):
        assert bj.wpsr_report(n, j).ok
        assert bj.flip_report(n, j).ok
        if j >= 2:
            assert bj.psi_report(n, j).ok
            assert bj.psi_sum_law(n, j)


def test_pointwise_xj_law_fails():
    # the x_j factor only appears after summing; element-wise the factor is x_1
    bad = bj.psi_xj_pointwise_failures(5, 4)
    assert P("31254") in bad
    assert bj.psi_sum_law(5, 4)


def test_n2_mixed_pairs():
    w = WEIGHTS["b_exc"]
    a, b = SignedPermutation((-1, 2)), SignedPermutation((2, -1))
    st = MultiPoly.from_var(S) * MultiPoly.from_var(T)
    assert w(a) == MultiPoly.from_var(var("x", 1)) * st
    assert (w(a) + w(b)).is_zero()
    pairs = {frozenset(p) for case in bj.mixed_matching(2).values() for p in case}
    assert frozenset({a, b}) in pairs
    assert frozenset({SignedPermutation((1, -2)), SignedPermutation((-2, 1))}) in pairs


def test_n3_inserted_pair_cancels():
    w = WEIGHTS["b_exc"]
    a = insert(-3, 3, SignedPermutation((-1, 2)))
    b = insert(-3, 3, SignedPermutation((2, -1)))
    assert w(a) == -w(b)
    assert w(a) != 0


def test_n1_mixed_matching_empty():
    assert all(not v for v in bj.mixed_matching(1).values())


@pytest.mark.parametrize("n", range(1, 6))
def test_type_b_excedance_reports(n):
    for name, rep in bj.typeb_matchings(n).items():
        assert rep.ok, rep.summary()


@pytest.mark.parametrize("n", range(2, 6))
def test_type_b_rlm_reports(n):
    for rep in bj.rlmb_reports(n):
        assert rep.ok, rep.summary()
    if n % 2:
        assert bj.rlmb_leftover(n).is_zero()


def test_rlm_recursion_n2():
    w = WEIGHTS["b_rlm"]
    y1, y2 = MultiPoly.from_var(var("y", 1)), MultiPoly.from_var(var("y", 2))
    assert w(SignedPermutation((1, 2))) == y1 * y2
    assert w(SignedPermutation((1,))) == -y1


def test_checker_detects_broken_involution():
    dom = family("Dn", 3)
    rep = bj.check_involution("identity", dom, lambda s: s, WEIGHTS["sign_exc"])
    assert not rep.ok
    assert "FAIL" in rep.summary()
