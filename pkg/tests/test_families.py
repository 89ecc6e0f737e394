from math import factorial

import pytest

from permstat.families import FamilySpec, WEIGHTS, family, get_weight, iterate, weighted_sum
from permstat.perm import Permutation
from permstat.poly import LAMBDA, XV, YV, MultiPoly, format_poly
from permstat.sequences import derangement_d


def words(kind, n, j=None):
    return {str(s) for s in family(kind, n, j)}


def test_listed_slices():
    assert words("Enj", 5, 3) == {"24153", "21453", "25413", "24513",
                                  "45123", "54123", "54213", "45213"}
    assert words("Unj", 5, 3) == {"41523", "41253", "51423"}
    assert words("Dnj", 2, 1) == {"21"}


@pytest.mark.parametrize("n", range(0, 9))
def test_derangement_counts(n):
    assert len(family("Dn", n)) == derangement_d(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_type_b_counts(n):
    assert len(family("Bn", n)) == 2 ** n * factorial(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_slices_partition_derangements(n):
    d = set(family("Dn", n))
    by_last = [set(family("Dnj", n, j)) for j in range(1, n)]
    assert set().union(*by_last) == d
    assert sum(map(len, by_last)) == len(d)
    for j in range(1, n):
        assert set(family("Enj", n, j)) | set(family("Unj", n, j)) == set(family("Dnj", n, j))
        assert all(s(n + 1 - j) == 1 for s in family("Dtilde_nj", n, j))
        assert all(s(j) == n for s in family("Dbar_nj", n, j))


def test_lexicographic_order():
    d4 = family("Dn", 4)
    assert d4 == sorted(d4)
    assert str(d4[0]) == "2143"


def test_weighted_sums():
    assert format_poly(weighted_sum(FamilySpec("Dnj", 5, 3), "sign_rlmv_excv")) == "-x1*x2*x3*y4*y5"
    lam, x, y = (MultiPoly.from_var(v) for v in (LAMBDA, XV, YV))
    assert weighted_sum(FamilySpec("Dn", 2), "lambda_rlm_exc") == lam * x * y
    for name, w in WEIGHTS.items():
        kind = "Bn" if w.signed else "Dn"
        if not w.signed:
            assert weighted_sum(FamilySpec(kind, 1), name).is_zero()


def test_weight_family_mismatch():
    with pytest.raises(ValueError):
        weighted_sum(FamilySpec("Bn", 2), "sign_exc")
    with pytest.raises(ValueError):
        weighted_sum(FamilySpec("Dn", 2), "b_exc")
    with pytest.raises(ValueError):
        get_weight("nope")


@pytest.mark.parametrize("kind,n,j", [("Dnj", 4, None), ("Dn", 4, 2), ("Dnj", 4, 4),
                                      ("Cnk", 4, 2), ("Sx", 3, None), ("Dn", -1, None)])
def test_invalid_specs(kind, n, j):
    with pytest.raises(ValueError):
        FamilySpec(kind, n, j)


def test_iterate_is_lazy_and_typed():
    it = iterate(FamilySpec("Sn", 3))
    first = next(it)
    assert isinstance(first, Permutation)
    assert str(first) == "123"


@pytest.mark.parametrize("n", range(2, 6))
def test_c_cases_cover_mixed(n):
    mixed = set(family("Bn_mixed", n))
    cases = [set(family(k, n)) for k in ("Cn_1", "Cn_1prime", "Cn_2", "Cn_2prime")]
    assert set().union(*cases) == mixed
    assert sum(map(len, cases)) == len(mixed)
