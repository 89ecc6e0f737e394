"""Exhaustive generators for the permutation families, and weighted sums over them.

Every generator yields its members in lexicographic order of the word
(window, for signed permutations), exactly once each.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterator, Mapping, Optional, Tuple, Union

from .perm import Permutation, count_cycles, inversions, rlm_positions
from .poly import LAMBDA, Q, S, T, XV, YV, Monomial, MultiPoly, Var, var
from .signed import SignedPermutation, exc_b_set, insert, rlm_b_set

SLICED = frozenset({"Dnj", "Dtilde_nj", "Dbar_nj", "Unj", "Enj", "Cnk"})
TYPE_A = frozenset({"Sn", "Dn", "Dnj", "Dtilde_nj", "Dbar_nj", "Unj", "Enj"})
TYPE_B = frozenset({"Bn", "Bn_plus", "Bn_minus", "Bn_mixed",
                    "Cn_1", "Cn_1prime", "Cn_2", "Cn_2prime", "Cnk"})
KINDS = TYPE_A | TYPE_B


@dataclass(frozen=True)
class FamilySpec:
    """A family of permutations.

    Type A kinds::

        Sn          all of S_n
        Dn          derangements
        Dnj         derangements with sigma(n) = j
        Dtilde_nj   derangements with sigma(n+1-j) = 1
        Dbar_nj     derangements with sigma(j) = n
        Unj         the special subset of Dnj left over by the sign-reversing involution
        Enj         Dnj minus Unj

    Type B kinds::

        Bn, Bn_plus, Bn_minus, Bn_mixed
        Cn_1        insert -n into an all-positive element of B_{n-1}
        Cn_1prime   insert  n into an all-negative element of B_{n-1}
        Cn_2        insert -n into a mixed element of B_{n-1}
        Cn_2prime   insert  n into a mixed element of B_{n-1}
        Cnk         |sigma(n)| != n and the letter n sits at position 2k-1 or 2k
                    (k passed as ``j``)
    """

    kind: str
    n: int
    j: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.kind in SLICED:
            if self.j is None:
                raise ValueError(f"family {self.kind} needs a slice parameter j")
            if self.kind == "Cnk":
                if not (1 <= self.j and 2 * self.j < self.n):
                    raise ValueError(f"k={self.j} out of range for C_n^k with n={self.n}")
            elif not 1 <= self.j <= self.n - 1:
                raise ValueError(f"j={self.j} outside [1, {self.n - 1}]")
        elif self.j is not None:
            raise ValueError(f"family {self.kind} takes no slice parameter")

    @property
    def is_signed(self) -> bool:
        return self.kind in TYPE_B

    def label(self) -> str:
        return f"{self.kind}(n={self.n}" + (f", j={self.j})" if self.j is not None else ")")


def _words(n: int, fixed: Mapping[int, int], derange: bool) -> Iterator[Tuple[int, ...]]:
    """Lexicographic backtracking over words with some positions pinned."""
    word = [0] * n
    used = [False] * (n + 2)
    for v in fixed.values():
        used[v] = True

    def rec(i: int):
        if i == n:
            yield tuple(word)
            return
        pos = i + 1
        if pos in fixed:
            word[i] = fixed[pos]
            yield from rec(i + 1)
            return
        for v in range(1, n + 1):
            if used[v] or (derange and v == pos):
                continue
            used[v] = True
            word[i] = v
            yield from rec(i + 1)
            used[v] = False

    if derange and any(p == v for p, v in fixed.items()):
        return
    yield from rec(0)


def _u_member(word: Tuple[int, ...], j: int) -> bool:
    n = len(word)
    if j == 1:
        return word == tuple(range(2, n + 1)) + (1,)
    return word[1] == 1 and word[0] != 2


def _signed_windows(n: int) -> Iterator[Tuple[int, ...]]:
    word = [0] * n
    used = [False] * (n + 1)
    letters = list(range(-n, 0)) + list(range(1, n + 1))

    def rec(i: int):
        if i == n:
            yield tuple(word)
            return
        for v in letters:
            if used[abs(v)]:
                continue
            used[abs(v)] = True
            word[i] = v
            yield from rec(i + 1)
            used[abs(v)] = False

    yield from rec(0)


def _type_a(spec: FamilySpec) -> Iterator[Tuple[int, ...]]:
    n, j, kind = spec.n, spec.j, spec.kind
    if kind == "Sn":
        yield from _words(n, {}, False)
    elif kind == "Dn":
        yield from _words(n, {}, True)
    elif kind == "Dnj":
        yield from _words(n, {n: j}, True)
    elif kind == "Dtilde_nj":
        yield from _words(n, {n + 1 - j: 1}, True)
    elif kind == "Dbar_nj":
        yield from _words(n, {j: n}, True)
    elif kind == "Unj":
        if j == 1:
            yield tuple(range(2, n + 1)) + (1,)
        elif n >= 3:
            # sigma(2) = 1 pinned; sigma(1) != 2 filtered
            for w in _words(n, {n: j, 2: 1}, True):
                if w[0] != 2:
                    yield w
    elif kind == "Enj":
        for w in _words(n, {n: j}, True):
            if not _u_member(w, j):
                yield w


def _type_b(spec: FamilySpec) -> Iterator[Tuple[int, ...]]:
    n, kind = spec.n, spec.kind
    if kind in ("Bn", "Bn_plus", "Bn_minus", "Bn_mixed"):
        for w in _signed_windows(n):
            if kind == "Bn":
                yield w
            elif kind == "Bn_plus":
                if all(v > 0 for v in w):
                    yield w
            elif kind == "Bn_minus":
                if all(v < 0 for v in w):
                    yield w
            elif any(v > 0 for v in w) and any(v < 0 for v in w):
                yield w
        return
    if kind == "Cnk":
        k = spec.j
        for w in _signed_windows(n):
            if abs(w[n - 1]) != n and n in (abs(w[2 * k - 2]), abs(w[2 * k - 1])):
                yield w
        return
    if n < 1:
        return
    a, base = {
        "Cn_1": (-n, "Bn_plus"),
        "Cn_1prime": (n, "Bn_minus"),
        "Cn_2": (-n, "Bn_mixed"),
        "Cn_2prime": (n, "Bn_mixed"),
    }[kind]
    found = []
    for tw in _type_b(FamilySpec(base, n - 1)):
        tau = SignedPermutation(tw, check=False)
        for k in range(1, n + 1):
            found.append(insert(a, k, tau).window)
    yield from sorted(found)


def iterate(spec: FamilySpec) -> Iterator[Union[Permutation, SignedPermutation]]:
    if spec.is_signed:
        for w in _type_b(spec):
            yield SignedPermutation(w, check=False)
    else:
        for w in _type_a(spec):
            yield Permutation(w, check=False)


def family(kind: str, n: int, j: Optional[int] = None) -> list:
    return list(iterate(FamilySpec(kind, n, j)))


# -- weights -----------------------------------------------------------------
#
# A weight maps a word to (coefficient, monomial).  Variables are cached per
# index so the hot loop only touches tuples and dicts.

_X = {}
_Y = {}


def _xv(i: int) -> Var:
    v = _X.get(i)
    if v is None:
        v = _X[i] = var("x", i)
    return v


def _yv(i: int) -> Var:
    v = _Y.get(i)
    if v is None:
        v = _Y[i] = var("y", i)
    return v


def _mono(counts: Dict[Var, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in counts.items() if e))


def _exc_i(w):
    return [i for i, v in enumerate(w, 1) if v > i]


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


def _w_sign_rlmv_excv(w):
    counts = {_xv(w[i - 1]): 1 for i in rlm_positions(w)}
    for i in _exc_i(w):
        counts[_yv(w[i - 1])] = 1
    return _sign(count_cycles(w)), _mono(counts)


def _w_lambda_rlmv_excv(w):
    counts = {_xv(w[i - 1]): 1 for i in rlm_positions(w)}
    for i in _exc_i(w):
        counts[_yv(w[i - 1])] = 1
    counts[LAMBDA] = count_cycles(w)
    return 1, _mono(counts)


def _w_sign_rlmi_exci(w):
    counts = {_xv(i): 1 for i in rlm_positions(w)}
    for i in _exc_i(w):
        counts[_yv(i)] = 1
    return _sign(count_cycles(w)), _mono(counts)


def _w_inv_rlmv_excv(w):
    c, m = _w_sign_rlmv_excv(w)
    return _sign(inversions(w)), m


def _w_inv_rlmi_exci(w):
    c, m = _w_sign_rlmi_exci(w)
    return _sign(inversions(w)), m


def _w_lambda_rlm_exc(w):
    counts = {LAMBDA: count_cycles(w), XV: len(rlm_positions(w)), YV: len(_exc_i(w))}
    return 1, _mono(counts)


def _w_rlm(w):
    return 1, _mono({XV: len(rlm_positions(w))})


def _w_sign_exc(w):
    return _sign(count_cycles(w)), _mono({XV: len(_exc_i(w))})


def _w_inv_exc(w):
    return _sign(inversions(w)), _mono({XV: len(_exc_i(w))})


def _w_sign_exci(w):
    return _sign(count_cycles(w)), _mono({_xv(i): 1 for i in _exc_i(w)})


def _w_sign_rlmv_y(w):
    return _sign(count_cycles(w)), _mono({_yv(w[i - 1]): 1 for i in rlm_positions(w)})


def _w_qinv_rlmv(w):
    counts = {_yv(w[i - 1]): 1 for i in rlm_positions(w)}
    counts[Q] = inversions(w)
    return 1, _mono(counts)


def _b_common(w):
    negs = [v for v in w if v < 0]
    cyc = count_cycles(tuple(abs(v) for v in w))
    return _sign(cyc), {S: len(negs), T: -sum(negs)}


def _w_b_exc(w):
    sign, counts = _b_common(w)
    for i in exc_b_set(w):
        counts[_xv(i)] = 1
    return sign, _mono(counts)


def _w_b_rlm(w):
    sign, counts = _b_common(w)
    for v in rlm_b_set(w):
        counts[_yv(v)] = 1
    return sign, _mono(counts)


@dataclass(frozen=True)
class WeightSpec:
    name: str
    signed: bool
    fn: Callable[[Tuple[int, ...]], Tuple[int, Monomial]]
    doc: str

    def __call__(self, sigma) -> MultiPoly:
        word = sigma.window if isinstance(sigma, SignedPermutation) else sigma.word
        c, m = self.fn(word)
        return MultiPoly({m: c})


WEIGHTS: Dict[str, WeightSpec] = {
    w.name: w
    for w in [
        WeightSpec("sign_rlmv_excv", False, _w_sign_rlmv_excv,
                   "(-1)^cyc * prod_{RLMv} x_i * prod_{EXCv} y_i"),
        WeightSpec("lambda_rlmv_excv", False, _w_lambda_rlmv_excv,
                   "lambda^cyc * prod_{RLMv} x_i * prod_{EXCv} y_i"),
        WeightSpec("sign_rlmi_exci", False, _w_sign_rlmi_exci,
                   "(-1)^cyc * prod_{RLMi} x_i * prod_{EXCi} y_i"),
        WeightSpec("inv_rlmv_excv", False, _w_inv_rlmv_excv,
                   "(-1)^inv * prod_{RLMv} x_i * prod_{EXCv} y_i"),
        WeightSpec("inv_rlmi_exci", False, _w_inv_rlmi_exci,
                   "(-1)^inv * prod_{RLMi} x_i * prod_{EXCi} y_i"),
        WeightSpec("lambda_rlm_exc", False, _w_lambda_rlm_exc,
                   "lambda^cyc * x^rlm * y^exc"),
        WeightSpec("rlm", False, _w_rlm, "x^rlm"),
        WeightSpec("sign_exc", False, _w_sign_exc, "(-1)^cyc * x^exc"),
        WeightSpec("inv_exc", False, _w_inv_exc, "(-1)^inv * x^exc"),
        WeightSpec("sign_exci", False, _w_sign_exci, "(-1)^cyc * prod_{EXCi} x_i"),
        WeightSpec("sign_rlmv", False, _w_sign_rlmv_y, "(-1)^cyc * prod_{RLMv} y_i"),
        WeightSpec("qinv_rlmv", False, _w_qinv_rlmv, "q^inv * prod_{RLMv} y_i"),
        WeightSpec("b_exc", True, _w_b_exc,
                   "(-1)^cyc * s^neg * t^nsum * prod_{EXC_B} x_i"),
        WeightSpec("b_rlm", True, _w_b_rlm,
                   "(-1)^cyc * s^neg * t^nsum * prod_{RLM_B} y_i"),
    ]
}


def get_weight(weight: Union[str, WeightSpec]) -> WeightSpec:
    if isinstance(weight, WeightSpec):
        return weight
    try:
        return WEIGHTS[weight]
    except KeyError:
        raise ValueError(f"unknown weight {weight!r}") from None


def weighted_sum(spec: FamilySpec, weight: Union[str, WeightSpec]) -> MultiPoly:
    """Sum of ``weight`` over every member of the family, as an exact polynomial."""
    w = get_weight(weight)
    if w.signed != spec.is_signed:
        kind = "signed" if w.signed else "ordinary"
        raise ValueError(f"weight {w.name} is for {kind} permutations; family is {spec.kind}")
    words = _type_b(spec) if spec.is_signed else _type_a(spec)
    acc: Dict[Monomial, int] = {}
    fn = w.fn
    for word in words:
        c, m = fn(word)
        acc[m] = acc.get(m, 0) + c
    return MultiPoly(acc)
