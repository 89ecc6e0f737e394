"""Permutations of [n] in one-line notation and their classical statistics."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple


class Permutation:
    """A permutation of {1, ..., n} stored as its one-line word.

    Values are 1-based.  ``p(i)`` gives the image of ``i``.
    """

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int], check: bool = True):
        w = tuple(int(v) for v in word)
        if check and sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a permutation of [{len(w)}]")
        self.word = w

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1), check=False)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Accept ``"4153627"`` (n <= 9) or a comma separated list."""
        text = text.strip()
        if "," in text:
            return cls(int(t) for t in text.split(",") if t.strip())
        if not text:
            return cls(())
        if not text.isdigit():
            raise ValueError(f"bad permutation text {text!r}")
        return cls(int(ch) for ch in text)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self.word == other.word
        return NotImplemented

    def __lt__(self, other: "Permutation") -> bool:
        return self.word < other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    # -- structure ----------------------------------------------------------

    def cycles(self) -> "CycleDecomposition":
        return CycleDecomposition.of(self)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.word, 1):
            inv[v - 1] = i
        return Permutation(inv, check=False)

    def is_derangement(self) -> bool:
        return all(v != i for i, v in enumerate(self.word, 1))


def _cycle_list(word: Sequence[int]) -> List[Tuple[int, ...]]:
    n = len(word)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = word[i - 1]
        out.append(tuple(cyc))
    return out


def count_cycles(word: Sequence[int]) -> int:
    n = len(word)
    seen = [False] * (n + 1)
    c = 0
    for start in range(1, n + 1):
        if not seen[start]:
            c += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = word[i - 1]
    return c


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles led by their minimum, sorted by leader."""

    cycles: Tuple[Tuple[int, ...], ...]
    canonical: bool = True

    @classmethod
    def of(cls, sigma: Permutation) -> "CycleDecomposition":
        # scanning starts in increasing order, so each cycle already begins at its minimum
        return cls(tuple(_cycle_list(sigma.word)))

    def __len__(self) -> int:
        return len(self.cycles)

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles)


@dataclass(frozen=True)
class StatProfile:
    exc_i: FrozenSet[int]
    exc_v: FrozenSet[int]
    rlm_i: FrozenSet[int]
    rlm_v: FrozenSet[int]
    fix: FrozenSet[int]
    cyc: int
    inv: int

    @property
    def exc(self) -> int:
        return len(self.exc_i)

    @property
    def rlm(self) -> int:
        return len(self.rlm_i)


def rlm_positions(word: Sequence[int]) -> List[int]:
    """Indices i with word[i] smaller than everything to its right (1-based)."""
    out = []
    current = len(word) + 1
    for i in range(len(word), 0, -1):
        if word[i - 1] < current:
            current = word[i - 1]
            out.append(i)
    out.reverse()
    return out


def inversions(word: Sequence[int]) -> int:
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def statistics(sigma: Permutation) -> StatProfile:
    w = sigma.word
    exc_i = [i for i, v in enumerate(w, 1) if v > i]
    rlm_i = rlm_positions(w)
    return StatProfile(
        exc_i=frozenset(exc_i),
        exc_v=frozenset(w[i - 1] for i in exc_i),
        rlm_i=frozenset(rlm_i),
        rlm_v=frozenset(w[i - 1] for i in rlm_i),
        fix=frozenset(i for i, v in enumerate(w, 1) if v == i),
        cyc=count_cycles(w),
        inv=inversions(w),
    )


def compose(tau: Permutation, sigma: Permutation) -> Permutation:
    """``(tau o sigma)(i) = tau(sigma(i))``."""
    if tau.n != sigma.n:
        raise ValueError(f"size mismatch: {tau.n} vs {sigma.n}")
    return Permutation((tau.word[v - 1] for v in sigma.word), check=False)


def inverse(sigma: Permutation) -> Permutation:
    return sigma.inverse()


def apply_transposition(a: int, b: int, sigma: Permutation) -> Permutation:
    """Return ``(a, b) o sigma``: the values a and b trade places in the word."""
    n = sigma.n
    if a == b:
        raise ValueError("transposition needs two distinct values")
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"transposition ({a},{b}) out of range for n={n}")
    swap = {a: b, b: a}
    return Permutation((swap.get(v, v) for v in sigma.word), check=False)


def reversal(n: int) -> Permutation:
    return Permutation(range(n, 0, -1), check=False)


def flip(sigma: Permutation) -> Permutation:
    """``R o sigma^-1 o R`` with ``R(i) = n + 1 - i``."""
    n = sigma.n
    inv = sigma.inverse().word
    return Permutation((n + 1 - inv[n - i] for i in range(1, n + 1)), check=False)
