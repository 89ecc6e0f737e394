"""Command-line front end.

Every subcommand renders one report in ``text``, ``json`` or ``csv`` form.
Exit status: 0 when every check passes, 1 when any check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Any, Dict, List, Optional, Sequence, TextIO

from . import bijections, identities, orthopoly, sequences, series
from .families import FamilySpec, KINDS, WEIGHTS, get_weight, iterate, weighted_sum
from .perm import CycleDecomposition, Permutation, statistics
from .poly import MultiPoly, format_poly
from .signed import SignedPermutation, stats_b

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def _set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _text(p) -> str:
    return format_poly(MultiPoly.coerce(p))


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def _json(obj: Dict[str, Any]) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


class Report:
    """Collected output of one command; rendered once at the end."""

    def __init__(self, command: str, params: Dict[str, Any], deterministic: bool):
        self.command = command
        self.params = params
        self.deterministic = deterministic
        self.cases: List[Dict[str, Any]] = []
        self.lines: List[str] = []
        self.extra: Dict[str, Any] = {}
        self.table: Optional[List[List[Any]]] = None
        self.csv_text: Optional[str] = None
        self._start = time.perf_counter()

    def case(self, cid: str, n: Optional[int], j: Optional[int], ok: bool,
             lhs: str = "", rhs: str = "") -> None:
        self.cases.append({"id": cid, "n": n, "j": j, "pass": bool(ok), "lhs": lhs, "rhs": rhs})

    @property
    def all_pass(self) -> bool:
        return all(c["pass"] for c in self.cases)

    def render(self, fmt: str) -> str:
        wall = round(time.perf_counter() - self._start, 3)
        if fmt == "json":
            obj: Dict[str, Any] = {"command": self.command, "params": self.params}
            obj.update(self.extra)
            obj["cases"] = self.cases
            obj["all_pass"] = self.all_pass
            if not self.deterministic:
                obj["wall_time"] = wall
            return _json(obj)
        if fmt == "csv":
            if self.csv_text is not None:
                return self.csv_text
            if self.table is not None:
                return _csv(self.table)
            return _csv([["id", "n", "j", "pass", "lhs", "rhs"]]
                        + [[c["id"], c["n"], c["j"], "pass" if c["pass"] else "FAIL",
                            c["lhs"], c["rhs"]] for c in self.cases])
        out = list(self.lines)
        if self.cases:
            out.append(f"{sum(c['pass'] for c in self.cases)}/{len(self.cases)} passed; "
                       f"all_pass={'true' if self.all_pass else 'false'}")
        if not self.deterministic:
            out.append(f"wall_time: {wall:.3f}s")
        return "".join(line + "\n" for line in out)


# -- subcommands ---------------------------------------------------------------

def cmd_stats(args, rep: Report) -> None:
    text = args.perm
    if args.signed or "-" in text:
        sigma = SignedPermutation.parse(text)
        st = stats_b(sigma)
        fields = [("sigma", str(sigma)), ("EXC_B", _set(st.exc_b)),
                  ("AnEXC_B", _set(st.anexc_b)), ("RLM_B", _set(st.rlm_b)),
                  ("neg", st.neg), ("nsum", st.nsum), ("cyc", st.cyc_b),
                  ("class", st.klass), ("cycles", sigma.cycle_string())]
    else:
        sigma = Permutation.parse(text)
        st = statistics(sigma)
        fields = [("sigma", str(sigma)), ("EXCi", _set(st.exc_i)), ("EXCv", _set(st.exc_v)),
                  ("RLMi", _set(st.rlm_i)), ("RLMv", _set(st.rlm_v)), ("FIX", _set(st.fix)),
                  ("exc", st.exc), ("rlm", st.rlm), ("cyc", st.cyc), ("inv", st.inv),
                  ("cycles", str(CycleDecomposition.of(sigma)))]
    rep.lines = [f"{k} = {v}" for k, v in fields]
    rep.extra["stats"] = {k: v for k, v in fields}
    rep.table = [["stat", "value"]] + [[k, v] for k, v in fields]


def cmd_enumerate(args, rep: Report) -> None:
    spec = FamilySpec(args.family, args.n, args.j)
    weight = get_weight(args.weight) if args.weight else None
    if weight is not None and weight.signed != spec.is_signed:
        raise UsageError(f"weight {weight.name} does not apply to family {spec.kind}")
    rows, total = [], MultiPoly()
    for sigma in iterate(spec):
        if weight is None:
            rows.append([str(sigma)])
        else:
            w = weight(sigma)
            total = total + w
            rows.append([str(sigma), _text(w)])
    rep.extra["count"] = len(rows)
    rep.extra["elements"] = [r[0] for r in rows]
    header = ["sigma"] + (["weight"] if weight else [])
    rep.table = [header] + rows
    rep.lines = ["  ".join(r) for r in rows] + [f"count = {len(rows)}"]
    if weight is not None:
        rep.extra["weights"] = [r[1] for r in rows]
        rep.extra["total"] = _text(total)
        rep.lines.append(f"total = {_text(total)}")


def _identity_case(rep: Report, case: identities.IdentityCase) -> None:
    rep.case(case.id, case.n, case.j, case.passed, _text(case.lhs), _text(case.rhs))
    j = "" if case.j is None else f" j={case.j}"
    rep.lines.append(f"{'pass' if case.passed else 'FAIL'} {case.id} n={case.n}{j} "
                     f"rhs={_text(case.rhs)}")


def cmd_verify(args, rep: Report) -> None:
    if args.target == "bijections":
        if args.n is None:
            raise UsageError("verify bijections needs --n")
        return _bijection_cases(args.n, rep, typeb=True)
    if args.all == (args.id is not None):
        raise UsageError("give exactly one of --all or --id")
    max_a = args.max_n if args.max_n is not None else identities.DEFAULT_RANGE_A[1]
    max_b = args.max_n_b if args.max_n_b is not None else min(max_a, identities.DEFAULT_RANGE_B[1])
    if args.all:
        for case in identities.verify_all(max_a, max_b):
            _identity_case(rep, case)
        return
    ident = identities.lookup(args.id)
    if args.n is not None:
        if args.j is None and ident.sliced:
            pairs = [(args.n, j) for j in range(1, args.n)]
        else:
            pairs = [(args.n, args.j)]
    else:
        lo = identities.DEFAULT_RANGE_B[0] if ident.signed else identities.DEFAULT_RANGE_A[0]
        hi = max_b if ident.signed else max_a
        pairs = list(identities.cases(ident.id, lo, hi))
    for n, j in pairs:
        _identity_case(rep, identities.verify(ident.id, n, j))


def cmd_table(args, rep: Report) -> None:
    n_max = args.max_n if args.max_n is not None else 8
    if n_max < 2:
        raise UsageError("table needs --max-n >= 2")
    table = sequences.rlm_table(n_max)
    rep.extra["rows"] = [{"n": n, "d": row} for n, row in table.items()]
    rep.lines = [f"{n}: " + " ".join(str(v) for v in row) for n, row in table.items()]
    rep.csv_text = sequences.table_csv(n_max)


def cmd_jfraction(args, rep: Report) -> None:
    spec = series.PRESETS[args.preset]()
    moments = series.jf_moments(spec, args.order)
    rep.extra["moments"] = [_text(m) for m in moments]
    rep.table = [["n", "mu"]] + [[n, _text(m)] for n, m in enumerate(moments)]
    rep.lines = [f"mu_{n} = {_text(m)}" for n, m in enumerate(moments)]
    if args.check:
        for n, m in enumerate(moments):
            if args.preset == "dn1":
                truth = MultiPoly.const(sequences.dbar(n + 2))
            else:
                weight = "lambda_rlm_exc" if args.preset == "full" else "rlm"
                truth = weighted_sum(FamilySpec("Dn", n), weight)
            rep.case(f"jfraction-{args.preset}", n, None, m == truth, _text(m), _text(truth))


def cmd_series(args, rep: Report) -> None:
    s = series.SERIES_PRESETS[args.expr](args.order)
    coeffs = [s.coefficient(n) for n in range(s.order + 1)]
    rep.extra["flavor"] = s.flavor
    rep.extra["coefficients"] = [_text(c) for c in coeffs]
    rep.table = [["n", "a_n"]] + [[n, _text(c)] for n, c in enumerate(coeffs)]
    rep.lines = [f"{args.expr} ({s.flavor})"] + [f"a_{n} = {_text(c)}"
                                                for n, c in enumerate(coeffs)]


def cmd_ortho(args, rep: Report) -> None:
    n_max = args.max_n if args.max_n is not None else 6
    if n_max < 1:
        raise UsageError("ortho needs --max-n >= 1")
    polys = orthopoly.recurrence_P(n_max)
    mu = orthopoly.moments(2 * n_max - 1)
    matrix = orthopoly.orthogonality_matrix(n_max, mu)
    rep.extra["P"] = [_text(p) for p in polys]
    rep.lines = [f"P_{n} = {_text(p)}" for n, p in enumerate(polys)]
    rows = [["n", "k", "L[X^k P_n]"]]
    for n, row in enumerate(matrix, start=1):
        rep.case("corecursive", n, None, orthopoly.corecursive_P(n) == polys[n],
                 _text(orthopoly.corecursive_P(n)), _text(polys[n]))
        for k, v in enumerate(row):
            rep.case("orthogonality", n, k, v.is_zero(), _text(v), "0")
            rows.append([n, k, _text(v)])
        rep.lines.append(f"L[X^k P_{n}], k<{n}: " + " ".join(_text(v) for v in row))
    rep.table = rows


def _bijection_cases(n: int, rep: Report, typeb: bool) -> None:
    for r in bijections.all_reports(n, typeb=typeb):
        rep.case(r.name, n, None, r.ok)
        rep.lines.append(r.summary())


def cmd_bijections(args, rep: Report) -> None:
    _bijection_cases(args.n, rep, typeb=not args.type_a_only)


COMMANDS = {
    "stats": cmd_stats, "enumerate": cmd_enumerate, "verify": cmd_verify, "table": cmd_table,
    "jfraction": cmd_jfraction, "series": cmd_series, "ortho": cmd_ortho,
    "bijections": cmd_bijections,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--deterministic", action="store_true",
                        help="omit wall-clock timing from the output")

    p = _Parser(prog="permstat", description="Permutation statistics and signed derangements.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("stats", parents=[common], help="statistics of one permutation")
    s.add_argument("perm", help="one-line word, e.g. 4153627 or -6,2,4,-3,1,5,8,-7")
    s.add_argument("--signed", action="store_true")

    s = sub.add_parser("enumerate", parents=[common], help="list a family")
    s.add_argument("--family", required=True, choices=sorted(KINDS))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--j", type=int)
    s.add_argument("--weight", choices=sorted(WEIGHTS))

    s = sub.add_parser("verify", parents=[common], help="check catalog identities")
    s.add_argument("target", nargs="?", choices=["bijections"])
    s.add_argument("--id")
    s.add_argument("--all", action="store_true")
    s.add_argument("--n", type=int)
    s.add_argument("--j", type=int)
    s.add_argument("--max-n", type=int, help="largest n for type-A families (default 7)")
    s.add_argument("--max-n-b", type=int, help="largest n for type-B families (default 5)")

    s = sub.add_parser("table", parents=[common], help="triangle d_(n,k)")
    s.add_argument("--max-n", type=int)

    s = sub.add_parser("jfraction", parents=[common], help="continued-fraction moments")
    s.add_argument("--preset", choices=sorted(series.PRESETS), default="full")
    s.add_argument("--order", type=int, default=7)
    s.add_argument("--check", action="store_true", help="compare with enumeration")

    s = sub.add_parser("series", parents=[common], help="named generating functions")
    s.add_argument("--expr", choices=sorted(series.SERIES_PRESETS), required=True)
    s.add_argument("--order", type=int, default=9)

    s = sub.add_parser("ortho", parents=[common], help="co-recursive Laguerre check")
    s.add_argument("--max-n", type=int)

    s = sub.add_parser("bijections", parents=[common], help="bijection and matching reports")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--type-a-only", action="store_true")
    return p


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        params = {k: v for k, v in vars(args).items()
                  if k not in ("command", "format", "deterministic")}
        rep = Report(args.command, params, args.deterministic)
        COMMANDS[args.command](args, rep)
    except (UsageError, ValueError) as exc:
        err.write(f"permstat: error: {exc}\n")
        return 2
    out.write(rep.render(args.format))
    return 0 if rep.all_pass else 1


def main() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.exit(run())


if __name__ == "__main__":
    main()
