"""Derangement numbers, the right-to-left-minimum triangle d_(n,k) and their
recurrences, each checked against enumeration.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, List

from .families import FamilySpec, family, weighted_sum
from .poly import XV
from .series import derangement_egf, dn1_egf, dn1_spec, dnx_spec, dsub2_ogf, jf_moments

# enumeration is cheap up to here; past it only the recurrence routes are used
ENUM_LIMIT = 10


@lru_cache(maxsize=None)
def derangement_d(n: int) -> int:
    """d_n = (n-1)(d_(n-1) + d_(n-2)), d_0 = 1, d_1 = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < 2:
        return 1 - n
    return (n - 1) * (derangement_d(n - 1) + derangement_d(n - 2))


# column k = 1 of the triangle is OEIS A000255 shifted by two
@lru_cache(maxsize=None)
def dbar(n: int) -> int:
    """Derangements of [n] ending in 1, via d_n = (n-2) d_(n-1) + (n-3) d_(n-2), seeds 1, 1."""
    if n < 2:
        raise ValueError("dbar needs n >= 2")
    if n <= 3:
        return 1
    return (n - 2) * dbar(n - 1) + (n - 3) * dbar(n - 2)


def dbar_enumerated(n: int) -> int:
    return sum(1 for s in family("Dn", n) if s.word[-1] == 1)


def dbar_relations(n: int) -> Dict[str, bool]:
    """The three d-bar relations at n (eq3 needs n >= 3)."""
    out = {
        "eq1": dbar(n) == derangement_d(n - 1) + derangement_d(n - 2),
        "eq2": derangement_d(n) == (n - 1) * dbar(n),
    }
    if n >= 3:
        prev2 = dbar(n - 2) if n >= 4 else 0
        out["eq3"] = dbar(n) == (n - 2) * dbar(n - 1) + (n - 3) * prev2
    return out


# -- the triangle ------------------------------------------------------------

def _row_from_poly(p, n: int) -> List[int]:
    coeffs = p.coefficients_in(XV)
    if n == 0:
        return [int(coeffs.get(0, 0).constant_term())]
    return [int(coeffs[k].constant_term()) if k in coeffs else 0 for k in range(1, n + 1)]


def rlm_rows_enumerated(n_max: int) -> Dict[int, List[int]]:
    if n_max > ENUM_LIMIT:
        raise ValueError(f"enumeration route is capped at n = {ENUM_LIMIT}")
    return {n: _row_from_poly(weighted_sum(FamilySpec("Dn", n), "rlm"), n)
            for n in range(n_max + 1)}


def rlm_rows_cf(n_max: int) -> Dict[int, List[int]]:
    moments = jf_moments(dnx_spec(), n_max)
    return {n: _row_from_poly(moments[n], n) for n in range(n_max + 1)}


def rlm_table(n_max: int) -> Dict[int, List[int]]:
    """Rows n = 2..n_max of d_(n,k), k = 1..n-1 (d_(n,n) is always 0).

    Both routes are computed when enumeration is affordable and must agree.
    """
    cf = rlm_rows_cf(n_max)
    if n_max <= ENUM_LIMIT and rlm_rows_enumerated(n_max) != cf:
        raise ArithmeticError("enumeration and continued fraction disagree")
    return {n: cf[n][: n - 1] for n in range(2, n_max + 1)}


def table_csv(n_max: int) -> str:
    """Header n,1..n_max-1; short rows padded with empty cells."""
    table = rlm_table(n_max)
    width = max(n_max - 1, 1)
    lines = [",".join(["n"] + [str(k) for k in range(1, width + 1)])]
    for n, row in table.items():
        cells = [str(v) for v in row] + [""] * (width - len(row))
        lines.append(",".join([str(n)] + cells))
    return "\n".join(lines) + "\n"


# -- d_(n, n-2) ---------------------------------------------------------------

def d_sub2(n: int) -> int:
    """d_(n,n-2) = (n-3) + (n-2)^2 (OEIS A028387 shifted)."""
    if n < 3:
        raise ValueError("d_sub2 needs n >= 3")
    return (n - 3) + (n - 2) ** 2


def d_sub2_recurrence(table: Dict[int, List[int]], n: int) -> bool:
    """d_(n+2,n) = d_(n+1,n-1) + 2n, read off the triangle (n >= 2)."""
    return table[n + 2][n - 1] == table[n + 1][n - 2] + 2 * n


# -- bundled checks ------------------------------------------------------------

def number_checks(n_max: int = 8) -> Dict[str, bool]:
    """Every sequence relation up to n_max; keys name the relation."""
    table = rlm_table(n_max)
    enum_sizes = {n: len(family("Dn", n)) for n in range(min(n_max, ENUM_LIMIT) + 1)}
    res: Dict[str, bool] = {}
    res["d_recurrence"] = all(derangement_d(n) == c for n, c in enum_sizes.items())
    res["dbar_relations"] = all(all(dbar_relations(n).values()) for n in range(2, n_max + 1))
    res["dbar_enumerated"] = all(dbar(n) == dbar_enumerated(n)
                                 for n in range(2, min(n_max, ENUM_LIMIT) + 1))
    res["dbar_is_column1"] = all(dbar(n) == table[n][0] for n in range(2, n_max + 1))
    res["row_sums"] = all(sum(table[n]) == derangement_d(n) for n in range(2, n_max + 1))
    res["last_entry_one"] = all(table[n][-1] == 1 for n in range(2, n_max + 1))
    res["d_sub2_closed"] = all(d_sub2(n) == table[n][n - 3] for n in range(3, n_max + 1))
    res["d_sub2_recurrence"] = all(d_sub2_recurrence(table, n)
                                   for n in range(2, n_max - 1))
    # OGF sum_(n>=0) d_(n+3,n+1) t^n
    ogf = dsub2_ogf(n_max - 2)
    res["d_sub2_ogf"] = all(ogf.coefficient(n) == d_sub2(n + 3) for n in range(n_max - 2))
    # EGF e^(-t)/(1-t)^2 lists d_(n+2,1); and e^(-t)/(1-t) lists d_n
    egf1 = dn1_egf(n_max - 1)
    res["dn1_egf"] = all(egf1.coefficient(n) == table[n + 2][0] for n in range(n_max - 1))
    egf = derangement_egf(n_max + 1)
    res["d_egf"] = all(egf.coefficient(n) == derangement_d(n) for n in range(n_max + 1))
    cf1 = jf_moments(dn1_spec(), n_max - 1)
    res["dn1_jfraction"] = all(cf1[n] == table[n + 2][0] for n in range(n_max - 1))
    return res
