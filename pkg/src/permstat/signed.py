"""Signed permutations (elements of B_n) in window notation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from .perm import count_cycles

ALL_POSITIVE = "all-positive"
ALL_NEGATIVE = "all-negative"
MIXED = "mixed"


class SignedPermutation:
    """Window sigma(1) ... sigma(n); sigma(-i) = -sigma(i) is implied."""

    __slots__ = ("window",)

    def __init__(self, window: Iterable[int], check: bool = True):
        w = tuple(int(v) for v in window)
        if check and (0 in w or sorted(abs(v) for v in w) != list(range(1, len(w) + 1))):
            raise ValueError(f"{w} is not a signed permutation of [{len(w)}]")
        self.window = w

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(t) for t in text.split(","))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i < 0:
            return -self.window[-i - 1]
        return self.window[i - 1]

    def __len__(self) -> int:
        return len(self.window)

    def __eq__(self, other) -> bool:
        if isinstance(other, SignedPermutation):
            return self.window == other.window
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("B", self.window))

    def __lt__(self, other: "SignedPermutation") -> bool:
        return self.window < other.window

    def __str__(self) -> str:
        return ",".join(map(str, self.window))

    def __repr__(self) -> str:
        return f"SignedPermutation({str(self)!r})"

    def pretty(self) -> str:
        """Human form with combining overbars, e.g. ``6̄24``."""
        return "".join(f"{-v}̄" if v < 0 else str(v) for v in self.window)

    def absolute(self) -> Tuple[int, ...]:
        return tuple(abs(v) for v in self.window)

    def image(self) -> FrozenSet[int]:
        return frozenset(self.window)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Cycles of |sigma| led by their minimum, entries carrying sigma's signs."""
        w = self.window
        n = len(w)
        seen = [False] * (n + 1)
        out = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                # the entry i of |sigma| is written as sigma(j) where |sigma(j)| = i
                cyc.append(i)
                i = abs(w[i - 1])
            out.append(tuple(cyc))
        signed = {abs(v): v for v in w}
        return [tuple(signed[i] for i in c) for c in out]

    def cycle_string(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())


@dataclass(frozen=True)
class TypeBStats:
    exc_b: FrozenSet[int]
    anexc_b: FrozenSet[int]
    rlm_b: FrozenSet[int]
    neg: int
    nsum: int
    cyc_b: int
    klass: str


def exc_b_set(w: Tuple[int, ...]) -> FrozenSet[int]:
    out = set()
    for v in w:
        j = abs(v)
        target = w[j - 1]
        if target == -j or target > v:
            out.add(j)
    return frozenset(out)


def anexc_b_set(w: Tuple[int, ...]) -> FrozenSet[int]:
    out = set()
    for v in w:
        j = abs(v)
        target = w[j - 1]
        if target == j or target < v:
            out.add(j)
    return frozenset(out)


def rlm_b_set(w: Tuple[int, ...]) -> FrozenSet[int]:
    """Values sigma(i) with 0 < sigma(i) < |sigma(j)| for all j > i."""
    out = set()
    smallest = len(w) + 1
    for v in reversed(w):
        if 0 < v < smallest:
            out.add(v)
        smallest = min(smallest, abs(v))
    return frozenset(out)


def sign_class(w: Tuple[int, ...]) -> str:
    if all(v > 0 for v in w):
        return ALL_POSITIVE
    if all(v < 0 for v in w):
        return ALL_NEGATIVE
    return MIXED


def stats_b(sigma: SignedPermutation) -> TypeBStats:
    w = sigma.window
    negs = [v for v in w if v < 0]
    return TypeBStats(
        exc_b=exc_b_set(w),
        anexc_b=anexc_b_set(w),
        rlm_b=rlm_b_set(w),
        neg=len(negs),
        nsum=-sum(negs),
        cyc_b=count_cycles(tuple(abs(v) for v in w)),
        klass=sign_class(w),
    )


def negate_all(sigma: SignedPermutation) -> SignedPermutation:
    return SignedPermutation((-v for v in sigma.window), check=False)


def insert(a: int, k: int, tau: SignedPermutation) -> SignedPermutation:
    """Inserting operation: sigma'(k) = a, sigma'(n) = tau(k), other entries kept.

    With ``k == n`` this appends the one-cycle (a).
    """
    n = tau.n + 1
    if abs(a) != n:
        raise ValueError(f"inserted letter must be {n} or -{n}, got {a}")
    if not 1 <= k <= n:
        raise ValueError(f"position {k} outside [1, {n}]")
    w = list(tau.window) + [a]
    if k < n:
        w[n - 1] = w[k - 1]
        w[k - 1] = a
    return SignedPermutation(w, check=False)


def swap_positions(sigma: SignedPermutation, i: int, j: int) -> SignedPermutation:
    """``(sigma(i), sigma(j)) o sigma``: the window entries at i and j trade places."""
    w = list(sigma.window)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return SignedPermutation(w, check=False)


def restrict(sigma: SignedPermutation, drop: int) -> SignedPermutation:
    """Delete position ``drop`` from the window (its entry must have |value| = n)."""
    w = list(sigma.window)
    if abs(w[drop - 1]) != len(w):
        raise ValueError("restriction only removes the letter n or -n")
    del w[drop - 1]
    return SignedPermutation(w, check=False)
