"""Truncated power series with exact polynomial coefficients, and J-fraction moments.

A :class:`PowerSeries` holds coefficients ``c[0..N]`` (each a
:class:`~permstat.poly.MultiPoly`, rational scalars allowed).  For the
ordinary flavor the series is ``sum c[n] t^n``; for the exponential flavor it
is ``sum c[n] t^n / n!``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, List, Sequence, Union

from .poly import LAMBDA, XV, YV, MultiPoly, const

log = logging.getLogger(__name__)

OGF = "ogf"
EGF = "egf"

Scalar = Union[int, Fraction, MultiPoly]


def _p(c: Scalar) -> MultiPoly:
    return MultiPoly.coerce(c)


class PowerSeries:
    __slots__ = ("coeffs", "flavor", "truncated")

    def __init__(self, coeffs: Sequence[Scalar], flavor: str = OGF, truncated: bool = False):
        if flavor not in (OGF, EGF):
            raise ValueError(f"unknown flavor {flavor!r}")
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: List[MultiPoly] = [_p(c) for c in coeffs]
        self.flavor = flavor
        # set when an operation had to cut a longer operand down to a shorter one
        self.truncated = truncated

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> MultiPoly:
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coefficient(n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.flavor == other.flavor and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"PowerSeries([{body}], {self.flavor})"

    # -- flavor conversion --------------------------------------------------

    def to_ogf(self) -> "PowerSeries":
        if self.flavor == OGF:
            return self
        return PowerSeries([c / factorial(n) for n, c in enumerate(self.coeffs)], OGF, self.truncated)

    def to_egf(self) -> "PowerSeries":
        if self.flavor == EGF:
            return self
        return PowerSeries([c.scale(factorial(n)) for n, c in enumerate(self.coeffs)], EGF,
                           self.truncated)

    def _as(self, flavor: str) -> "PowerSeries":
        return self.to_ogf() if flavor == OGF else self.to_egf()

    def _align(self, other: "PowerSeries"):
        if not isinstance(other, PowerSeries):
            other = PowerSeries([other], self.flavor)
            other = PowerSeries(other.coeffs + [MultiPoly()] * self.order, self.flavor)
            return self.coeffs, other.coeffs, self.truncated
        if other.flavor != self.flavor:
            raise ValueError("cannot combine ordinary and exponential series; convert first")
        n = min(self.order, other.order)
        cut = self.order != other.order
        if cut:
            log.debug("truncating series from orders %d/%d to %d", self.order, other.order, n)
        return self.coeffs[:n + 1], other.coeffs[:n + 1], cut or self.truncated or other.truncated

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "PowerSeries":
        a, b, cut = self._align(other)
        return PowerSeries([u + v for u, v in zip(a, b)], self.flavor, cut)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs], self.flavor, self.truncated)

    def __sub__(self, other) -> "PowerSeries":
        a, b, cut = self._align(other)
        return PowerSeries([u - v for u, v in zip(a, b)], self.flavor, cut)

    def __rsub__(self, other) -> "PowerSeries":
        return (-self) + other

    def __mul__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            c = _p(other)
            return PowerSeries([v * c for v in self.coeffs], self.flavor, self.truncated)
        if other.flavor != self.flavor:
            raise ValueError("cannot combine ordinary and exponential series; convert first")
        flavor = self.flavor
        a, b, cut = self.to_ogf()._align(other.to_ogf())
        n = len(a) - 1
        out = [sum((a[i] * b[k - i] for i in range(k + 1)), MultiPoly()) for k in range(n + 1)]
        return PowerSeries(out, OGF, cut)._as(flavor)

    __rmul__ = __mul__

    def invert(self) -> "PowerSeries":
        """1/f; the constant term must be a nonzero scalar."""
        f = self.to_ogf()
        c0 = f.coeffs[0]
        if c0.is_zero() or not c0.is_constant():
            raise ZeroDivisionError("series inverse needs a nonzero scalar constant term")
        inv0 = Fraction(1) / Fraction(c0.constant_term())
        out = [const(inv0)]
        for k in range(1, f.order + 1):
            acc = sum((f.coeffs[i] * out[k - i] for i in range(1, k + 1)), MultiPoly())
            out.append(-acc.scale(inv0))
        return PowerSeries(out, OGF, f.truncated)._as(self.flavor)

    def __truediv__(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return self * other.invert()
        return self * const(Fraction(1) / Fraction(other))

    def derivative(self) -> "PowerSeries":
        """Formal derivative; the result is one order shorter (order 0 stays 0)."""
        if self.flavor == EGF:
            out = self.coeffs[1:] or [MultiPoly()]
        else:
            out = [c.scale(n) for n, c in enumerate(self.coeffs)][1:] or [MultiPoly()]
        return PowerSeries(out, self.flavor, self.truncated)

    def integral(self) -> "PowerSeries":
        """Antiderivative with zero constant term; one order longer."""
        if self.flavor == EGF:
            return PowerSeries([MultiPoly()] + self.coeffs, EGF, self.truncated)
        out = [MultiPoly()] + [c / (n + 1) for n, c in enumerate(self.coeffs)]
        return PowerSeries(out, OGF, self.truncated)

    def scale_argument(self, c: Scalar) -> "PowerSeries":
        """f(c t)."""
        c = _p(c)
        out = []
        power = const(1)
        for coeff in self.coeffs:
            out.append(coeff * power)
            power = power * c
        return PowerSeries(out, self.flavor, self.truncated)

    def exp(self) -> "PowerSeries":
        """exp(f) for f with zero constant term (f' E = E' recurrence)."""
        f = self.to_ogf()
        if not f.coeffs[0].is_zero():
            raise ValueError("exp needs a zero constant term")
        n = f.order
        df = [f.coeffs[k].scale(k) for k in range(n + 1)]
        out = [const(1)]
        for k in range(1, n + 1):
            acc = sum((df[i] * out[k - i] for i in range(1, k + 1)), MultiPoly())
            out.append(acc / k)
        return PowerSeries(out, OGF, f.truncated)._as(self.flavor)

    def log(self) -> "PowerSeries":
        """log(f) for f with constant term 1."""
        f = self.to_ogf()
        if f.coeffs[0] != const(1):
            raise ValueError("log needs constant term 1")
        if f.order == 0:
            return PowerSeries([MultiPoly()], self.flavor, f.truncated)
        g = (f.derivative() * PowerSeries(f.coeffs[:f.order], OGF).invert()).integral()
        return PowerSeries(g.coeffs[:f.order + 1], OGF, f.truncated)._as(self.flavor)

    def power(self, alpha: Scalar) -> "PowerSeries":
        """f ** alpha for f with constant term 1; alpha may be symbolic."""
        return (self.log() * _p(alpha)).exp()


def series_from_function(fn: Callable[[int], Scalar], order: int, flavor: str = OGF) -> PowerSeries:
    return PowerSeries([fn(n) for n in range(order + 1)], flavor)


def monomial_series(order: int, degree: int = 1, coeff: Scalar = 1, flavor: str = OGF) -> PowerSeries:
    """coeff * t^degree as a series of the given order (ordinary coefficients)."""
    out = [MultiPoly()] * (order + 1)
    if degree <= order:
        out[degree] = _p(coeff)
    s = PowerSeries(out, OGF)
    return s._as(flavor)


def one(order: int, flavor: str = OGF) -> PowerSeries:
    return monomial_series(order, 0, 1, flavor)


# -- J-fractions -------------------------------------------------------------

@dataclass(frozen=True)
class JFractionSpec:
    """gamma(h): level-step weight at height h; beta(h): down-step weight from h (h >= 1)."""

    gamma: Callable[[int], Scalar]
    beta: Callable[[int], Scalar]
    name: str = ""


def jf_moments(spec: JFractionSpec, order: int) -> List[MultiPoly]:
    """Moments mu_0..mu_order as weighted Motzkin path sums.

    Transfer over path prefixes: state[h] is the total weight of prefixes ending
    at height h.  A path of length n that must return to 0 never climbs above
    min(k, n - k) after k steps, which bounds the state vector.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    gammas = [_p(spec.gamma(h)) for h in range(order + 1)]
    betas = [MultiPoly()] + [_p(spec.beta(h)) for h in range(1, order + 2)]
    top = order // 2 + 1
    state = [const(1)] + [MultiPoly()] * top
    moments = [const(1)]
    for _ in range(order):
        nxt = [MultiPoly()] * (top + 1)
        for h, w in enumerate(state):
            if w.is_zero():
                continue
            if h < top:
                nxt[h + 1] = nxt[h + 1] + w
            nxt[h] = nxt[h] + w * gammas[h]
            if h > 0:
                nxt[h - 1] = nxt[h - 1] + w * betas[h]
        state = nxt
        moments.append(state[0])
    return moments


def _xp() -> MultiPoly:
    return MultiPoly.from_var(XV)


def _yp() -> MultiPoly:
    return MultiPoly.from_var(YV)


def _lp() -> MultiPoly:
    return MultiPoly.from_var(LAMBDA)


def full_spec() -> JFractionSpec:
    """D_n(x, y, lambda): gamma_0 = 0, gamma_n = x + n y + n - 1, beta_n = (lambda + n - 1)(x + n - 1) y."""
    return JFractionSpec(
        gamma=lambda h: MultiPoly() if h == 0 else _xp() + _yp().scale(h) + (h - 1),
        beta=lambda h: (_lp() + (h - 1)) * (_xp() + (h - 1)) * _yp(),
        name="full",
    )


def dnx_spec() -> JFractionSpec:
    """D_n(x) = D_n(x, 1, 1): gamma_0 = 0, gamma_n = x + 2n - 1, beta_n = n (x + n - 1)."""
    return JFractionSpec(
        gamma=lambda h: MultiPoly() if h == 0 else _xp() + (2 * h - 1),
        beta=lambda h: (_xp() + (h - 1)).scale(h),
        name="dnx",
    )


def dn1_spec() -> JFractionSpec:
    """d_(n+2,1): gamma_0 = 1, gamma_n = 2n + 1, beta_n = n (n + 1)."""
    return JFractionSpec(gamma=lambda h: 2 * h + 1, beta=lambda h: h * (h + 1), name="dn1")


PRESETS = {"full": full_spec, "dnx": dnx_spec, "dn1": dn1_spec}


def verify_jfraction_theorem(order: int) -> bool:
    """Moments of the three-variable fraction equal the brute-force D_n(x, y, lambda)."""
    from .families import FamilySpec, weighted_sum

    moments = jf_moments(full_spec(), order)
    return all(moments[n] == weighted_sum(FamilySpec("Dn", n), "lambda_rlm_exc")
               for n in range(order + 1))


def lambda_minus1_series(order: int) -> PowerSeries:
    """(1 - (x+y) t) / ((1 - x t)(1 - y t)) expanded in t."""
    num = one(order) - monomial_series(order, 1, _xp() + _yp())
    den = (one(order) - monomial_series(order, 1, _xp())) * (one(order) - monomial_series(order, 1, _yp()))
    return num * den.invert()


def verify_lambda_minus1(order: int) -> bool:
    """D_n(x, y, -1) = -sum_{j=1}^{n-1} x^j y^(n-j) for 2 <= n <= order, by brute force
    and by expanding the rational generating function."""
    from .families import FamilySpec, weighted_sum

    if order < 2:
        raise ValueError("order must be at least 2")
    series = lambda_minus1_series(order)
    x, y = _xp(), _yp()
    for n in range(2, order + 1):
        expected = -sum((x ** j * y ** (n - j) for j in range(1, n)), MultiPoly())
        brute = weighted_sum(FamilySpec("Dn", n), "lambda_rlm_exc").substitute({LAMBDA: const(-1)})
        if brute != expected or series[n] != expected:
            return False
    return series[0] == const(1) and series[1].is_zero()


# -- named series used by the CLI and the sequence checks ----------------------

def exp_neg(order: int) -> PowerSeries:
    """e^(-t) as an ordinary series."""
    return monomial_series(order, 1, -1).exp()


def geometric(order: int) -> PowerSeries:
    """1 / (1 - t)."""
    return (one(order) - monomial_series(order, 1)).invert()


def derangement_egf(order: int) -> PowerSeries:
    """e^(-t) / (1 - t) with exponential coefficients (d_n)."""
    return (exp_neg(order) * geometric(order)).to_egf()


def dn1_egf(order: int) -> PowerSeries:
    """e^(-t) / (1 - t)^2 with exponential coefficients (d_(n+2,1))."""
    g = geometric(order)
    return (exp_neg(order) * g * g).to_egf()


def dsub2_ogf(order: int) -> PowerSeries:
    """(1 + 2t - t^2) / (1 - t)^3."""
    t = monomial_series(order, 1)
    num = one(order) + t * 2 - t * t
    g = geometric(order)
    return num * g * g * g


SERIES_PRESETS = {
    "derangement-egf": derangement_egf,
    "dn1-egf": dn1_egf,
    "dsub2-ogf": dsub2_ogf,
    "lambda-minus1": lambda_minus1_series,
}
