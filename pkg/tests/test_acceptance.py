"""One test per acceptance criterion; each records a single pass/fail line that is
printed in the terminal summary."""
import io
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE
from permstat import bijections as bj
from permstat import identities, orthopoly, sequences, series
from permstat.cli import run
from permstat.poly import const

GOLDEN = Path(__file__).parent / "golden"

TABLE1 = {
    2: [1],
    3: [1, 1],
    4: [3, 5, 1],
    5: [11, 21, 11, 1],
    6: [53, 113, 79, 19, 1],
    7: [309, 715, 589, 211, 29, 1],
    8: [2119, 5235, 4835, 2141, 461, 41, 1],
}


def record(key, label, ok, elapsed=None):
    suffix = "" if elapsed is None else f" ({elapsed:.2f}s)"
    ACCEPTANCE[key] = (ok, label + suffix)
    print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {label}{suffix}")
    assert ok


def test_1_identity_suite():
    t0 = time.perf_counter()
    cases = identities.verify_all(7, 5)
    elapsed = time.perf_counter() - t0
    covered = {c.id for c in cases}
    ok = (all(c.passed for c in cases) and covered == set(identities.CATALOG)
          and elapsed < 60)
    for c in cases:
        entry = identities.lookup(c.id)
        assert (1 if entry.signed else 2) <= c.n <= (5 if entry.signed else 7)
    record(1, f"identity catalog, {len(cases)} cases exact", ok, elapsed)


def test_2_rlm_table():
    t0 = time.perf_counter()
    enum = sequences.rlm_rows_enumerated(8)
    cf = sequences.rlm_rows_cf(8)
    table = sequences.rlm_table(8)
    elapsed = time.perf_counter() - t0
    nonzero = sum(v != 0 for row in table.values() for v in row)
    ok = (table == TABLE1 and enum == cf and nonzero == 28
          and table[8][0] == 2119 and table[8][3] == 2141 and elapsed < 10)
    record(2, f"d(n,k) triangle n<=8 by enumeration and continued fraction, {nonzero} entries",
           ok, elapsed)


def test_3_jfraction_moments():
    t0 = time.perf_counter()
    ok = series.verify_jfraction_theorem(7)
    elapsed = time.perf_counter() - t0
    record(3, "continued-fraction moments equal D_n(x,y,lambda) for n<=7", ok and elapsed < 30,
           elapsed)


def test_4_bijections():
    t0 = time.perf_counter()
    ok = True
    for n in range(3, 8):
        for j in range(1, n):
            ok &= bj.wpsr_report(n, j).ok
            if j >= 2:
                ok &= bj.psi_report(n, j).ok and bj.psi_sum_law(n, j)
    for n in range(1, 6):
        ok &= all(r.ok for r in bj.typeb_matchings(n).values())
    elapsed = time.perf_counter() - t0
    record(4, "sign-reversing involution, reduction map and signed matchings", ok and elapsed < 60,
           elapsed)


def test_5_orthogonality():
    t0 = time.perf_counter()
    brute = orthopoly.derangement_moments_brute(orthopoly.BRUTE_MOMENT_LIMIT)
    cf = orthopoly.derangement_moments_cf(11)
    a = orthopoly.avar()
    displayed = cf[2] - (a + 1) * cf[1] - a
    ok = (orthopoly.orthogonality_check(6) and cf[:len(brute)] == brute
          and displayed.is_zero())
    elapsed = time.perf_counter() - t0
    record(5, "L[X^k P_n] = 0 in a for n<=6", ok and elapsed < 10, elapsed)


def test_6_number_layer():
    t0 = time.perf_counter()
    checks = sequences.number_checks(8)
    egf = series.dn1_egf(6)
    col = [egf.coefficient(n) for n in range(7)]
    ok = all(checks.values()) and col == [const(v) for v in (1, 1, 3, 11, 53, 309, 2119)]
    elapsed = time.perf_counter() - t0
    record(6, f"{len(checks)} sequence relations for n<=8", ok and elapsed < 5, elapsed)


def _cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out, err=io.StringIO())
    return code, out.getvalue()


def test_7_golden_outputs():
    code_t, table = _cli("table", "--max-n", "8", "--format", "csv")
    code_v, report = _cli("verify", "--all", "--format", "json", "--deterministic")
    ok = (code_t == 0 and code_v == 0
          and table == (GOLDEN / "table8.csv").read_text(encoding="utf-8")
          and report == (GOLDEN / "verify_all.json").read_text(encoding="utf-8"))
    record(7, "CLI table and verify reports match golden files byte for byte", ok)
