"""Sparse multivariate polynomials with exact coefficients.

Every weighted enumeration in the package lands in :class:`MultiPoly`.
Variables belong to a closed set of families::

    x, y      indexed (x1, x2, ...) or bare (x, y) for univariate specializations
    s, t, lambda, q, a
    X         reserved indeterminate for orthogonal polynomials

Coefficients are Python ints.  ``Fraction`` coefficients are accepted (the
series engine needs them) and collapse back to ``int`` whenever the
denominator is 1.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple, Union

FAMILIES = ("x", "y", "s", "t", "lambda", "q", "a", "X")
INDEXED = frozenset({"x", "y"})
_RANK = {name: i for i, name in enumerate(FAMILIES)}


class Var(NamedTuple):
    """A variable; ordering follows family order then index.

    ``index`` is 0 for indexless variables.
    """

    rank: int
    index: int = 0

    @property
    def family(self) -> str:
        return FAMILIES[self.rank]

    def __str__(self) -> str:
        if self.index:
            return f"{self.family}{self.index}"
        return self.family


def var(family: str, index: int = 0) -> Var:
    if family not in _RANK:
        raise ValueError(f"unknown variable family {family!r}")
    if index < 0:
        raise ValueError("variable index must be non-negative")
    if index and family not in INDEXED:
        raise ValueError(f"family {family!r} takes no index")
    return Var(_RANK[family], index)


# Monomial: tuple of (Var, exponent) pairs sorted by Var, exponents > 0.
Monomial = Tuple[Tuple[Var, int], ...]
ONE: Monomial = ()
Coeff = Union[int, Fraction]


def monomial(*factors: Union[Var, Tuple[Var, int]]) -> Monomial:
    """Build a canonical monomial from variables or (variable, exponent) pairs."""
    exps: Dict[Var, int] = {}
    for f in factors:
        if isinstance(f, Var):
            v, e = f, 1
        else:
            v, e = f
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def monomial_from_counts(counts: Mapping[Var, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in counts.items() if e))


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _normalize_coeff(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _normalize_coeff(Fraction(c.numerator, c.denominator))
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _grlex_key(m: Monomial):
    return (-mono_degree(m), tuple((v, -e) for v, e in m))


class MultiPoly:
    """Immutable sparse polynomial: a map from monomials to nonzero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, Coeff], Iterable[Tuple[Monomial, Coeff]], None] = None):
        acc: Dict[Monomial, Coeff] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for m, c in items:
                c = _normalize_coeff(c)
                if c:
                    acc[m] = acc.get(m, 0) + c
        self._terms = {m: _normalize_coeff(c) for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coeff]) -> "MultiPoly":
        # caller guarantees canonical, zero-free terms
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: Coeff) -> "MultiPoly":
        return cls({ONE: c})

    @classmethod
    def from_var(cls, v: Var, exp: int = 1) -> "MultiPoly":
        return cls({monomial((v, exp)) if exp else ONE: 1})

    @classmethod
    def coerce(cls, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, Var):
            return cls.from_var(other)
        return cls.const(other)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Coeff]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {ONE}

    def constant_term(self) -> Coeff:
        return self._terms.get(ONE, 0)

    def coeff(self, m: Monomial) -> Coeff:
        return self._terms.get(m, 0)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    def degree_in(self, v: Var) -> int:
        if not self._terms:
            return -1
        return max(dict(m).get(v, 0) for m in self._terms)

    def coefficients_in(self, v: Var) -> Dict[int, "MultiPoly"]:
        """Split into {k: coefficient of v**k} with the coefficients free of ``v``."""
        out: Dict[int, Dict[Monomial, Coeff]] = {}
        for m, c in self._terms.items():
            k = 0
            rest = []
            for w, e in m:
                if w == v:
                    k = e
                else:
                    rest.append((w, e))
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: MultiPoly._raw(t) for k, t in out.items()}

    def leading_in(self, v: Var) -> "MultiPoly":
        d = self.degree_in(v)
        return self.coefficients_in(v).get(d, MultiPoly())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        other = MultiPoly.coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normalize_coeff(s)
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return MultiPoly.coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = MultiPoly.coerce(other)
        out: Dict[Monomial, Coeff] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly._raw({m: _normalize_coeff(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Coeff) -> "MultiPoly":
        c = _normalize_coeff(c)
        if not c:
            return MultiPoly()
        return MultiPoly._raw({m: _normalize_coeff(v * c) for m, v in self._terms.items()})

    def __truediv__(self, c) -> "MultiPoly":
        """Division by a nonzero rational scalar only."""
        if isinstance(c, MultiPoly):
            if not c.is_constant() or c.is_zero():
                raise ZeroDivisionError("division only by a nonzero constant")
            c = c.constant_term()
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(Fraction(1) / Fraction(c))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution / evaluation -----------------------------------------

    def substitute(self, bindings: Mapping[Var, object]) -> "MultiPoly":
        """Replace bound variables by polynomials; unbound variables stay put."""
        if not bindings:
            return self
        subs = {v: MultiPoly.coerce(p) for v, p in bindings.items()}
        powers: Dict[Tuple[Var, int], MultiPoly] = {}

        def power(v: Var, e: int) -> MultiPoly:
            key = (v, e)
            if key not in powers:
                powers[key] = subs[v] ** e
            return powers[key]

        result: Dict[Monomial, Coeff] = {}
        for m, c in self._terms.items():
            kept = tuple((v, e) for v, e in m if v not in subs)
            term = MultiPoly._raw({kept: c})
            for v, e in m:
                if v in subs:
                    term = term * power(v, e)
            for tm, tc in term._terms.items():
                result[tm] = result.get(tm, 0) + tc
        return MultiPoly._raw({m: _normalize_coeff(c) for m, c in result.items() if c})

    def eval(self, point: Mapping[Var, Coeff]) -> Fraction:
        """Exact rational evaluation; every variable of ``self`` must be bound."""
        total = Fraction(0)
        for m, c in self._terms.items():
            val = Fraction(c)
            for v, e in m:
                if v not in point:
                    raise KeyError(f"no value for variable {v}")
                val *= Fraction(point[v]) ** e
            total += val
        return total

    # -- text form ----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: _grlex_key(mc[0]))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)!r})"


def _format_monomial(m: Monomial) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


def format_poly(p: MultiPoly) -> str:
    """Canonical text: graded-lex order, e.g. ``-x1*x2*y3 + x1``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(m)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(lambda|[xy]\d*|[stqaX])(?:\^(\d+))?|([-+*]))")


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical text form (and a little more: spacing is free)."""
    pos = 0
    text = text.strip()
    if text == "0":
        return MultiPoly()
    terms: Dict[Monomial, Coeff] = {}
    sign = 1
    coef: Coeff = 1
    factors = []
    expect_factor = True
    seen_any = False

    def flush():
        if seen_any:
            m = monomial(*factors)
            terms[m] = terms.get(m, 0) + sign * coef

    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = mt.end()
        num, name, exp, op = mt.groups()
        if op is not None and op in "+-":
            if expect_factor and not seen_any:
                sign = -sign if op == "-" else sign
                continue
            if expect_factor:
                raise ValueError(f"dangling operator in {text!r}")
            flush()
            sign, coef, factors, seen_any = (-1 if op == "-" else 1), 1, [], False
            expect_factor = True
        elif op == "*":
            if expect_factor:
                raise ValueError(f"dangling '*' in {text!r}")
            expect_factor = True
        elif num is not None:
            if not expect_factor:
                raise ValueError(f"missing operator in {text!r}")
            coef = coef * _normalize_coeff(Fraction(num))
            seen_any, expect_factor = True, False
        else:
            if not expect_factor:
                raise ValueError(f"missing operator in {text!r}")
            fam = name.rstrip("0123456789")
            idx = int(name[len(fam):]) if name[len(fam):] else 0
            factors.append((var(fam, idx), int(exp) if exp else 1))
            seen_any, expect_factor = True, False
    if expect_factor:
        raise ValueError(f"incomplete polynomial {text!r}")
    flush()
    return MultiPoly(terms)


# -- convenience handles ----------------------------------------------------

def x(i: int = 0) -> MultiPoly:
    return MultiPoly.from_var(var("x", i))


def y(i: int = 0) -> MultiPoly:
    return MultiPoly.from_var(var("y", i))


S = var("s")
T = var("t")
LAMBDA = var("lambda")
Q = var("q")
A = var("a")
X = var("X")
XV = var("x")
YV = var("y")


def const(c: Coeff) -> MultiPoly:
    return MultiPoly.const(c)


def prod(polys: Iterable[MultiPoly]) -> MultiPoly:
    out = MultiPoly.const(1)
    for p in polys:
        out = out * p
    return out


def total(polys: Iterable[MultiPoly]) -> MultiPoly:
    out = MultiPoly()
    for p in polys:
        out = out + p
    return out
