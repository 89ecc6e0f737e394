import pytest

from permstat import identities as ids
from permstat.poly import S, T, MultiPoly, format_poly, parse_poly, var


@pytest.mark.parametrize("ident", list(ids.CATALOG))
def test_catalog_identity_small(ident):
    entry = ids.lookup(ident)
    hi = 4 if entry.signed else 5
    lo = 1 if entry.signed else 2
    for n, j in ids.cases(ident, lo, hi):
        case = ids.verify(ident, n, j)
        assert case.passed, (ident, n, j, format_poly(case.lhs), format_poly(case.rhs))


def test_rhs_examples():
    assert format_poly(ids.rhs("PZ1", 5, 3)) == "-x1*x2*x3*y4*y5"
    st = MultiPoly.from_var(S) * MultiPoly.from_var(T)
    assert ids.rhs("BN-EXC", 1) == -(1 + MultiPoly.from_var(var("x", 1)) * st)
    for n in range(1, 6):
        assert ids.rhs("BMIXED", n).is_zero()


def test_small_brute_force_cases():
    case = ids.verify("KZ03", 3, 1)
    assert format_poly(case.lhs) == "-x^2" and case.passed
    case = ids.verify("SN-EXC-A", 2)
    assert case.lhs == parse_poly("1 - x1")
    case = ids.verify("QBN-RLM", 1)
    assert case.lhs == parse_poly("-y1 - s*t") and case.passed


def test_aliases_and_errors():
    assert ids.lookup("SPEC-LAMBDA-M1").id == "SPEC-λ−1"
    with pytest.raises(ValueError):
        ids.lookup("NOPE")
    with pytest.raises(ValueError):
        ids.verify("PZ1", 4)
    with pytest.raises(ValueError):
        ids.verify("PZ1", 4, 4)
    with pytest.raises(ValueError):
        ids.verify("AG1", 4, 2)


def test_catalog_order_and_size():
    assert list(ids.CATALOG)[:3] == ["KZ03", "CYC-EXC", "INV-EXC"]
    assert len(ids.CATALOG) == 20


@pytest.mark.parametrize("n", range(2, 7))
def test_consistency_ladder(n):
    for j in range(1, n):
        assert ids.pz1_specializes_to_kz03(n, j)
    assert ids.pz1_sums_to_ag1(n)
    assert ids.inv_sign_bridge(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_type_b_ladder(n):
    assert ids.zhao_from_bn_exc(n)
    assert ids.bw_q_at_minus_one(n)
