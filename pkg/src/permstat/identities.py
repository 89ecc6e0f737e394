"""Catalog of closed-form identities, each checked against a brute-force sum.

``verify(id, n, j)`` builds the left side by exhaustive enumeration
(:func:`permstat.families.weighted_sum`) and the right side from the closed
form, and compares them as exact polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from .families import FamilySpec, weighted_sum
from .poly import LAMBDA, Q, S, T, XV, YV, MultiPoly, Var, const, prod, total, var, x, y

# type-A ids are checked for 2 <= n <= 7, type-B ids for 1 <= n <= 5
DEFAULT_RANGE_A = (2, 7)
DEFAULT_RANGE_B = (1, 5)


def _sgn(k: int) -> int:
    return -1 if k % 2 else 1


def _xpow(k: int) -> MultiPoly:
    return MultiPoly.from_var(XV, k)


def _s_t(n: int) -> MultiPoly:
    return MultiPoly.from_var(S, n) * MultiPoly.from_var(T, n * (n + 1) // 2)


def _prod_xm1(n: int) -> MultiPoly:
    """prod_{j=1}^{n-1} (x_j - 1)."""
    return prod(x(j) - 1 for j in range(1, n))


def _staircase(n: int, first, second) -> MultiPoly:
    """sum_{j=1}^{n-1} first_1..first_j * second_(j+1)..second_n."""
    return total(prod(first(i) for i in range(1, j + 1)) * prod(second(i) for i in range(j + 1, n + 1))
                 for j in range(1, n))


def _geometric(n: int) -> MultiPoly:
    """x + x^2 + ... + x^(n-1)."""
    return total(_xpow(k) for k in range(1, n))


def rhs_kz03(n, j):
    return -_xpow(n - j)


def rhs_cyc_exc(n, j):
    return -_geometric(n)


def rhs_inv_exc(n, j):
    return _geometric(n).scale(_sgn(n - 1))


def rhs_pz1(n, j):
    return -(prod(x(i) for i in range(1, j + 1)) * prod(y(i) for i in range(j + 1, n + 1)))


def rhs_pz2(n, j):
    return -(prod(y(i) for i in range(1, n - j + 1)) * prod(x(i) for i in range(n + 1 - j, n + 1)))


def rhs_ag1(n, j):
    return -_staircase(n, x, y)


def rhs_ag2(n, j):
    return -_staircase(n, y, x)


def rhs_ag1_inv(n, j):
    return _staircase(n, x, y).scale(_sgn(n - 1))


def rhs_ag2_inv(n, j):
    return _staircase(n, y, x).scale(_sgn(n - 1))


def rhs_conj1(n, j):
    return -prod(x(i) for i in range(1, j + 1))


def rhs_spec_lambda(n, j):
    return -total(_xpow(k) * MultiPoly.from_var(YV, n - k) for k in range(1, n))


def rhs_sn_exc_a(n, j):
    return -_prod_xm1(n)


def rhs_zhao(n, j):
    xx = MultiPoly.from_var(XV)
    if n % 2:
        return -(xx + 1) * (xx - 1) ** (n - 1)
    return (xx - 1) ** n


def rhs_bn_exc(n, j):
    return -(1 + (x(n) * _s_t(n)).scale(_sgn(n - 1))) * _prod_xm1(n)


def rhs_bplus(n, j):
    return -_prod_xm1(n)


def rhs_bminus(n, j):
    return (_s_t(n) * x(n) * _prod_xm1(n)).scale(_sgn(n))


def rhs_bmixed(n, j):
    return MultiPoly()


def rhs_rlmv_a_signed(n, j):
    odd = prod(y(i) for i in range(1, n + 1, 2))
    even = prod(y(i) - 1 for i in range(2, n + 1, 2))
    return (odd * even).scale(_sgn(n))


def rhs_bw_q(n, j):
    q = MultiPoly.from_var(Q)
    return prod(y(i) + total(q ** k for k in range(1, i)) for i in range(1, n + 1))


def rhs_qbn_rlm(n, j):
    s, t = MultiPoly.from_var(S), MultiPoly.from_var(T)
    even = prod(y(i) - 1 for i in range(2, n + 1, 2))
    odd = prod(y(i) + s * t ** i for i in range(1, n + 1, 2))
    return (even * odd).scale(_sgn(n))


def _to_univariate_x(n: int) -> Dict[Var, MultiPoly]:
    xx = MultiPoly.from_var(XV)
    return {var("x", i): xx for i in range(1, n + 1)}


def _zhao_bindings(n: int) -> Dict[Var, MultiPoly]:
    b = _to_univariate_x(n)
    b[S] = const(1)
    b[T] = const(1)
    return b


@dataclass(frozen=True)
class Identity:
    id: str
    family: str
    weight: str
    rhs: Callable[[int, Optional[int]], MultiPoly]
    signed: bool = False
    sliced: bool = False
    bindings: Optional[Callable[[int], Mapping[Var, MultiPoly]]] = None
    statement: str = ""

    def n_range(self) -> Tuple[int, int]:
        return DEFAULT_RANGE_B if self.signed else DEFAULT_RANGE_A


CATALOG: Dict[str, Identity] = {
    e.id: e
    for e in [
        Identity("KZ03", "Dnj", "sign_exc", rhs_kz03, sliced=True,
                 statement="sum_{D_n, sigma(n)=j} (-1)^cyc x^exc = -x^(n-j)"),
        Identity("CYC-EXC", "Dn", "sign_exc", rhs_cyc_exc,
                 statement="sum_{D_n} (-1)^cyc x^exc = -(x + ... + x^(n-1))"),
        Identity("INV-EXC", "Dn", "inv_exc", rhs_inv_exc,
                 statement="sum_{D_n} (-1)^inv x^exc = (-1)^(n-1) (x + ... + x^(n-1))"),
        Identity("PZ1", "Dnj", "sign_rlmv_excv", rhs_pz1, sliced=True,
                 statement="sum_{D_n,j} (-1)^cyc prod_RLMv x prod_EXCv y = -x1..xj y(j+1)..yn"),
        Identity("PZ2", "Dtilde_nj", "sign_rlmi_exci", rhs_pz2, sliced=True,
                 statement="sum_{sigma(n+1-j)=1} (-1)^cyc prod_RLMi x prod_EXCi y"
                           " = -y1..y(n-j) x(n+1-j)..xn"),
        Identity("AG1", "Dn", "sign_rlmv_excv", rhs_ag1,
                 statement="sum_{D_n} (-1)^cyc prod_RLMv x prod_EXCv y"
                           " = -sum_j x1..xj y(j+1)..yn"),
        Identity("AG2", "Dn", "sign_rlmi_exci", rhs_ag2,
                 statement="sum_{D_n} (-1)^cyc prod_RLMi x prod_EXCi y"
                           " = -sum_j y1..yj x(j+1)..xn"),
        Identity("AG1-INV", "Dn", "inv_rlmv_excv", rhs_ag1_inv,
                 statement="sum_{D_n} (-1)^inv prod_RLMv x prod_EXCv y"
                           " = (-1)^(n-1) sum_j x1..xj y(j+1)..yn"),
        Identity("AG2-INV", "Dn", "inv_rlmi_exci", rhs_ag2_inv,
                 statement="sum_{D_n} (-1)^inv prod_RLMi x prod_EXCi y"
                           " = (-1)^(n-1) sum_j y1..yj x(j+1)..xn"),
        Identity("CONJ1", "Dbar_nj", "sign_exci", rhs_conj1, sliced=True,
                 statement="sum_{D_n, sigma(j)=n} (-1)^cyc prod_EXCi x = -x1..xj"),
        Identity("SPEC-λ−1", "Dn", "lambda_rlm_exc", rhs_spec_lambda,
                 bindings=lambda n: {LAMBDA: const(-1)},
                 statement="D_n(x, y, -1) = -sum_{j=1}^{n-1} x^j y^(n-j)"),
        Identity("SN-EXC-A", "Sn", "sign_exci", rhs_sn_exc_a,
                 statement="sum_{S_n} (-1)^cyc prod_EXCi x = -prod_{j<n} (x_j - 1)"),
        Identity("ZHAO", "Bn", "b_exc", rhs_zhao, signed=True, bindings=_zhao_bindings,
                 statement="P_Bn(x,1,1) = -(x+1)(x-1)^(n-1) (n odd), (x-1)^n (n even)"),
        Identity("BPLUS", "Bn_plus", "b_exc", rhs_bplus, signed=True,
                 statement="P_Bn+ = -prod_{j<n} (x_j - 1)"),
        Identity("BMINUS", "Bn_minus", "b_exc", rhs_bminus, signed=True,
                 statement="P_Bn- = (-1)^n s^n t^(n(n+1)/2) x_n prod_{j<n} (x_j - 1)"),
        Identity("BMIXED", "Bn_mixed", "b_exc", rhs_bmixed, signed=True,
                 statement="P_Bn+- = 0"),
        Identity("BN-EXC", "Bn", "b_exc", rhs_bn_exc, signed=True,
                 statement="P_Bn = -(1 + (-1)^(n-1) x_n s^n t^(n(n+1)/2)) prod_{j<n} (x_j - 1)"),
        Identity("RLMV-A-SIGNED", "Sn", "sign_rlmv", rhs_rlmv_a_signed,
                 statement="sum_{S_n} (-1)^cyc prod_RLMv y = (-1)^n prod_odd y_j prod_even (y_j - 1)"),
        Identity("BW-Q", "Sn", "qinv_rlmv", rhs_bw_q,
                 statement="sum_{S_n} q^inv prod_RLMv y = prod_i (y_i + q + ... + q^(i-1))"),
        Identity("QBN-RLM", "Bn", "b_rlm", rhs_qbn_rlm, signed=True,
                 statement="Q_Bn = (-1)^n prod_even (y_i - 1) prod_odd (y_i + s t^i)"),
    ]
}

ALIASES = {"SPEC-LAMBDA-M1": "SPEC-λ−1", "SPEC-λ-1": "SPEC-λ−1"}


def lookup(identity_id: str) -> Identity:
    key = ALIASES.get(identity_id, identity_id)
    try:
        return CATALOG[key]
    except KeyError:
        raise ValueError(f"unknown identity {identity_id!r}") from None


@dataclass(frozen=True)
class IdentityCase:
    id: str
    n: int
    j: Optional[int]
    lhs: MultiPoly
    rhs: MultiPoly

    @property
    def passed(self) -> bool:
        return (self.lhs - self.rhs).is_zero()


def _check_params(ident: Identity, n: int, j: Optional[int]) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if ident.sliced:
        if j is None or not 1 <= j <= n - 1:
            raise ValueError(f"{ident.id} needs 1 <= j <= n-1, got j={j} for n={n}")
    elif j is not None:
        raise ValueError(f"{ident.id} takes no slice parameter")


def rhs(identity_id: str, n: int, j: Optional[int] = None) -> MultiPoly:
    ident = lookup(identity_id)
    _check_params(ident, n, j)
    return ident.rhs(n, j)


def lhs(identity_id: str, n: int, j: Optional[int] = None) -> MultiPoly:
    ident = lookup(identity_id)
    _check_params(ident, n, j)
    value = weighted_sum(FamilySpec(ident.family, n, j if ident.sliced else None), ident.weight)
    if ident.bindings is not None:
        value = value.substitute(ident.bindings(n))
    return value


def verify(identity_id: str, n: int, j: Optional[int] = None) -> IdentityCase:
    ident = lookup(identity_id)
    return IdentityCase(ident.id, n, j, lhs(ident.id, n, j), rhs(ident.id, n, j))


def cases(identity_id: str, n_min: int, n_max: int) -> Iterator[Tuple[int, Optional[int]]]:
    ident = lookup(identity_id)
    for n in range(n_min, n_max + 1):
        if ident.sliced:
            for j in range(1, n):
                yield n, j
        else:
            yield n, None


def verify_all(max_n_a: int = DEFAULT_RANGE_A[1], max_n_b: int = DEFAULT_RANGE_B[1],
               ids: Optional[List[str]] = None) -> List[IdentityCase]:
    """Run every catalog identity over its default range (catalog order)."""
    out = []
    for ident_id in ids or list(CATALOG):
        ident = lookup(ident_id)
        lo = DEFAULT_RANGE_B[0] if ident.signed else DEFAULT_RANGE_A[0]
        hi = max_n_b if ident.signed else max_n_a
        for n, j in cases(ident.id, lo, hi):
            out.append(verify(ident.id, n, j))
    return out


# -- consistency ladder ------------------------------------------------------

def pz1_specializes_to_kz03(n: int, j: int) -> bool:
    """PZ1 with x_i -> 1, y_i -> x is KZ03 (y tracks the excedance values)."""
    binding = {var("x", i): const(1) for i in range(1, n + 1)}
    binding.update({var("y", i): MultiPoly.from_var(XV) for i in range(1, n + 1)})
    return lhs("PZ1", n, j).substitute(binding) == lhs("KZ03", n, j)


def pz1_sums_to_ag1(n: int) -> bool:
    return total(lhs("PZ1", n, j) for j in range(1, n)) == lhs("AG1", n)


def inv_sign_bridge(n: int) -> bool:
    """(-1)^inv = (-1)^n (-1)^cyc, so AG*-INV = (-1)^n AG*."""
    return (lhs("AG1-INV", n) == lhs("AG1", n).scale(_sgn(n))
            and lhs("AG2-INV", n) == lhs("AG2", n).scale(_sgn(n)))


def zhao_from_bn_exc(n: int) -> bool:
    return lhs("BN-EXC", n).substitute(_zhao_bindings(n)) == lhs("ZHAO", n)


def bw_q_at_minus_one(n: int) -> bool:
    """q = -1 turns q^inv into (-1)^n (-1)^cyc, recovering RLMV-A-SIGNED."""
    at = lhs("BW-Q", n).substitute({Q: const(-1)}).scale(_sgn(n))
    return at == lhs("RLMV-A-SIGNED", n) and rhs("BW-Q", n).substitute({Q: const(-1)}).scale(_sgn(n)) == rhs("RLMV-A-SIGNED", n)
