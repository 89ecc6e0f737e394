"""Three-term recurrences: monic Laguerre, associated Laguerre, co-recursive sequences,
and the moment-functional check that D_n(a) are their moments.

Polynomials live in :class:`~permstat.poly.MultiPoly` with the reserved
indeterminate ``X``; parameters are numbers or polynomials in ``a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Union

from .poly import A, X, XV, MultiPoly, const

Param = Union[int, Fraction, MultiPoly]


def _p(c: Param) -> MultiPoly:
    return MultiPoly.coerce(c)


def xvar() -> MultiPoly:
    return MultiPoly.from_var(X)


def avar() -> MultiPoly:
    return MultiPoly.from_var(A)


@dataclass(frozen=True)
class ThreeTermSeq:
    """P_(n+1) = (X - b(n)) P_n - lam(n) P_(n-1), started from the seeds P0, P1."""

    b: Callable[[int], Param]
    lam: Callable[[int], Param]
    p0: MultiPoly
    p1: MultiPoly

    @classmethod
    def standard(cls, b, lam) -> "ThreeTermSeq":
        """Seeds P0 = 1, P1 = X - b(0)."""
        return cls(b, lam, const(1), xvar() - _p(b(0)))

    def terms(self, n_max: int) -> List[MultiPoly]:
        out = [self.p0, self.p1][: n_max + 1]
        X_ = xvar()
        for n in range(1, n_max):
            out.append((X_ - _p(self.b(n))) * out[n] - _p(self.lam(n)) * out[n - 1])
        return out

    def __getitem__(self, n: int) -> MultiPoly:
        if n < 0:
            return MultiPoly()
        return self.terms(n)[n]

    def associated(self) -> "ThreeTermSeq":
        """Indices shifted by one: b(n) -> b(n+1), lam(n) -> lam(n+1)."""
        b, lam = self.b, self.lam
        return ThreeTermSeq.standard(lambda n: b(n + 1), lambda n: lam(n + 1))


def laguerre_seq(alpha: Param) -> ThreeTermSeq:
    alpha = _p(alpha)
    return ThreeTermSeq.standard(lambda n: alpha + (2 * n + 1), lambda n: alpha.scale(n) + n * n)


def assoc_laguerre_seq(alpha: Param, c: Param) -> ThreeTermSeq:
    alpha, c = _p(alpha), _p(c)
    return ThreeTermSeq.standard(
        lambda n: alpha + c.scale(2) + (2 * n + 1),
        lambda n: (c + n) * (c + n + alpha),
    )


def laguerre(n: int, alpha: Param) -> MultiPoly:
    """Monic Laguerre L_n^(alpha)(X); L_(-1) = 0, L_0 = 1."""
    return laguerre_seq(alpha)[n]


def assoc_laguerre(n: int, alpha: Param, c: Param) -> MultiPoly:
    return assoc_laguerre_seq(alpha, c)[n]


def chihara_star(seq: ThreeTermSeq, c: Param) -> ThreeTermSeq:
    """Same recurrence, P*_0 = 1, P*_1 = P_1 - c."""
    return ThreeTermSeq(seq.b, seq.lam, seq.p0, seq.p1 - _p(c))


def chihara_identity(seq: ThreeTermSeq, c: Param, n_max: int) -> bool:
    """P*_n == P_n - c Q_(n-1) for 1 <= n <= n_max, Q the associated sequence."""
    star = chihara_star(seq, c).terms(n_max)
    base = seq.terms(n_max)
    assoc = seq.associated().terms(n_max)
    c = _p(c)
    return all(star[n] == base[n] - c * assoc[n - 1] for n in range(1, n_max + 1))


def shift(p: MultiPoly, by: Param = 1) -> MultiPoly:
    """p(X) -> p(X + by)."""
    return p.substitute({X: xvar() + _p(by)})


def corecursive_P(n: int, a: Param = None) -> MultiPoly:
    """L_n^(a-1)(X+1) + (a-1) L_(n-1)^(a-1)(X+1; 1)."""
    a = avar() if a is None else _p(a)
    if n < 0:
        return MultiPoly()
    alpha = a - 1
    lead = shift(laguerre(n, alpha))
    if n == 0:
        return lead
    return lead + alpha * shift(assoc_laguerre(n - 1, alpha, 1))


def recurrence_P(n_max: int, a: Param = None) -> List[MultiPoly]:
    """P*_0 = 1, P*_1 = X, P*_(n+1) = (X - (a + 2n - 1)) P*_n - n (n + a - 1) P*_(n-1)."""
    a = avar() if a is None else _p(a)
    seq = ThreeTermSeq(lambda n: a + (2 * n - 1), lambda n: (a + (n - 1)).scale(n), const(1), xvar())
    return seq.terms(n_max)


# -- moment functional -------------------------------------------------------

@dataclass(frozen=True)
class MomentFunctional:
    moments: Sequence[MultiPoly]

    def __post_init__(self):
        if not self.moments or self.moments[0] != const(1):
            raise ValueError("moment sequence must start with mu_0 = 1")

    def apply(self, p: MultiPoly) -> MultiPoly:
        """Linear map X^k -> mu_k; coefficients in the other variables pass through."""
        out = MultiPoly()
        for k, coeff in p.coefficients_in(X).items():
            if k >= len(self.moments):
                raise ValueError(f"need moment {k}, only {len(self.moments) - 1} available")
            out = out + coeff * self.moments[k]
        return out


def moment_apply(L: MomentFunctional, p: MultiPoly) -> MultiPoly:
    return L.apply(p)


def derangement_moments_brute(n_max: int) -> List[MultiPoly]:
    """D_n(a) by enumeration, x renamed to a."""
    from .families import FamilySpec, weighted_sum

    return [weighted_sum(FamilySpec("Dn", n), "rlm").substitute({XV: avar()})
            for n in range(n_max + 1)]


def derangement_moments_cf(n_max: int) -> List[MultiPoly]:
    from .series import dnx_spec, jf_moments

    return [m.substitute({XV: avar()}) for m in jf_moments(dnx_spec(), n_max)]


def orthogonality_matrix(n_max: int, moments: Sequence[MultiPoly]) -> List[List[MultiPoly]]:
    """rows n = 1..n_max, entries L[X^k P_n] for k = 0..n-1."""
    L = MomentFunctional(moments)
    polys = recurrence_P(n_max)
    X_ = xvar()
    return [[L.apply(X_ ** k * polys[n]) for k in range(n)] for n in range(1, n_max + 1)]


# D_n is enumerated only up to this size; higher moments come from the J-fraction
BRUTE_MOMENT_LIMIT = 8


def moments(n_max: int) -> List[MultiPoly]:
    """mu_0..mu_n_max = D_n(a): continued-fraction values, checked against
    enumeration wherever enumeration is affordable."""
    cf = derangement_moments_cf(n_max)
    brute = derangement_moments_brute(min(n_max, BRUTE_MOMENT_LIMIT))
    if cf[:len(brute)] != brute:
        raise ArithmeticError("enumerated and continued-fraction moments disagree")
    return cf


def orthogonality_check(n_max: int) -> bool:
    """L[X^k P_n] == 0 for 1 <= n <= n_max and k < n, exactly in a.

    Also requires the two constructions of P_n to agree.
    """
    mu = moments(2 * n_max - 1 if n_max else 0)
    if any(corecursive_P(n) != p for n, p in enumerate(recurrence_P(n_max))):
        return False
    return all(v.is_zero() for row in orthogonality_matrix(n_max, mu) for v in row)


def hankel_det(moments: Sequence[Fraction], m: int) -> Fraction:
    """det(mu_(i+j))_(0 <= i, j <= m) by fraction-exact elimination."""
    size = m + 1
    mat = [[Fraction(moments[i + j]) for j in range(size)] for i in range(size)]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        for r in range(col + 1, size):
            f = mat[r][col] / mat[col][col]
            for c in range(col, size):
                mat[r][c] -= f * mat[col][c]
    return det
