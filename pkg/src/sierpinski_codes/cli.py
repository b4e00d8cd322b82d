"""Command-line entry point: ``sierpinski-codes <command> ...``.

Exit codes: 0 success, 1 invalid code / bound not attained, 2 bad
parameters or input, 3 solver budget exhausted, 4 infeasible.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from .codes import ALL_KINDS, CodeKind, format_code, parse_code_text, verify
from .constructions import CONSTRUCTIONS, construct, predicted_size
from .graph import EXPORT_FORMATS, CapacityError, ParameterError, export, new_graph
from .solver import SolveOptions, Status, certify_paper_value, min_code

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET, EXIT_INFEASIBLE = 0, 1, 2, 3, 4
CLI_NODE_BUDGET = 10**8
KIND_CHOICES = [k.value for k in ALL_KINDS]


class UsageError(Exception):
    pass


def parse_int_set(text: str) -> list[int]:
    """``"2,3"``, ``"2-4"`` or ``"2..4"`` (combinable) -> sorted ints."""
    out: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            for sep in ("..", "-"):
                if sep in part:
                    lo, hi = (int(x) for x in part.split(sep, 1))
                    if hi < lo:
                        raise UsageError(f"empty range {part!r}")
                    out.update(range(lo, hi + 1))
                    break
            else:
                out.add(int(part))
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}") from None
    if not out:
        raise UsageError(f"empty range {text!r}")
    return sorted(out)


def _graph(args):
    return new_graph(args.n, args.k)


def cmd_gen(args, out) -> int:
    out.write(export(_graph(args), args.format))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = _graph(args)
    if args.code_file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.code_file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    try:
        code = parse_code_text(g, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify(g, code, args.kind)
    if report.valid:
        out.write("VALID\n")
        return EXIT_OK
    out.write(report.to_json(g) + "\n")
    return EXIT_INVALID


def cmd_construct(args, out) -> int:
    kind = CodeKind.parse(args.kind)
    if kind not in CONSTRUCTIONS:
        raise UsageError(f"no explicit construction for {kind.value} codes")
    g = _graph(args)
    code = construct(kind, args.n, args.k)
    ok = verify(g, code, kind).valid
    out.write(format_code(g, code))
    out.write(f"# size={len(code)} predicted={predicted_size(kind, args.n, args.k)} "
              f"verified={str(ok).lower()}\n")
    return EXIT_OK


def _solve_options(args, kind) -> SolveOptions:
    return SolveOptions(kind, node_budget=args.node_budget, time_budget=args.timeout,
                        deterministic=args.deterministic, jobs=args.jobs,
                        use_structural_bound=not args.no_structural)


def cmd_solve(args, out) -> int:
    g = _graph(args)
    result = min_code(g, _solve_options(args, args.kind))
    out.write(result.to_json(g) + "\n")
    return {Status.PROVED_OPTIMAL: EXIT_OK, Status.BUDGET_EXHAUSTED: EXIT_BUDGET,
            Status.INFEASIBLE: EXIT_INFEASIBLE}[result.status]


TABLE_FIELDS = ["n", "k", "kind", "predicted", "constructed", "solved", "status"]


def table_rows(ns, ks, kinds, solve=False, solve_cap=100, opts_factory=None) -> list[dict]:
    rows = []
    for n in ns:
        for k in ks:
            for kind in kinds:
                kind = CodeKind.parse(kind)
                predicted = predicted_size(kind, n, k)
                constructed = len(construct(kind, n, k)) if kind in CONSTRUCTIONS else None
                solved, status = None, "predicted"
                if constructed is not None and constructed != predicted:
                    status = "MISMATCH"
                elif solve and k**n <= solve_cap:
                    opts = opts_factory(kind) if opts_factory else None
                    cert = certify_paper_value(n, k, kind, opts)
                    solved = cert.value
                    if cert.status is not Status.PROVED_OPTIMAL:
                        status = cert.status.value
                    elif solved != predicted:
                        status = "MISMATCH"
                    else:
                        status = cert.method
                rows.append({"n": n, "k": k, "kind": kind.value, "predicted": predicted,
                             "constructed": constructed, "solved": solved, "status": status})
    return rows


def format_table(rows, fmt: str) -> str:
    cell = lambda v: "" if v is None else str(v)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, TABLE_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({f: cell(r[f]) for f in TABLE_FIELDS})
        return buf.getvalue()
    lines = ["| " + " | ".join(TABLE_FIELDS) + " |",
             "|" + "|".join("---" for _ in TABLE_FIELDS) + "|"]
    lines += ["| " + " | ".join(cell(r[f]) for f in TABLE_FIELDS) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_table(args, out) -> int:
    ns = parse_int_set(args.n)
    ks = parse_int_set(args.k)
    if min(ns) < 2 or min(ks) < 3:
        raise UsageError("table needs n >= 2 and k >= 3")
    kinds = [CodeKind.parse(s) for s in args.kinds.split(",")] if args.kinds else list(ALL_KINDS)
    rows = table_rows(ns, ks, kinds, solve=args.solve, solve_cap=args.solve_cap,
                      opts_factory=lambda kind: _solve_options(args, kind))
    out.write(format_table(rows, args.format))
    return EXIT_OK


def conjecture_report(n: int, k: int, solve_cap: int = 10**4) -> dict:
    """Compare ceil(|V| - |V|/max_degree) with the identifying minimum."""
    g = new_graph(n, k)
    V, delta = g.vertex_count, g.max_degree()
    bound = math.ceil(Fraction(V) - Fraction(V, delta))
    id_min = predicted_size(CodeKind.IDENTIFYING, n, k)
    method = "predicted"
    if V <= solve_cap:
        cert = certify_paper_value(n, k, CodeKind.IDENTIFYING)
        if cert.status is Status.PROVED_OPTIMAL:
            id_min, method = cert.value, cert.method
    return {"n": n, "k": k, "vertices": V, "max_degree": delta, "bound": bound,
            "id_min": id_min, "method": method, "attained": bound == id_min}


def cmd_conjecture(args, out) -> int:
    if args.n < 2:
        raise UsageError("conjecture needs n >= 2")
    rep = conjecture_report(args.n, args.k, args.solve_cap)
    if args.format == "json":
        out.write(json.dumps(rep, sort_keys=True) + "\n")
    else:
        verdict = "ATTAINED" if rep["attained"] else "NOT ATTAINED"
        out.write(f"S({args.n},{args.k}): bound {rep['bound']}, id-min {rep['id_min']} "
                  f"({rep['method']}), {verdict}\n")
    return EXIT_OK if rep["attained"] else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sierpinski-codes",
                                description="Covering codes in Sierpinski graphs S(n,k).")
    sub = p.add_subparsers(dest="command", required=True)

    def nk(sp, n_type=int):
        sp.add_argument("--n", type=n_type, required=True)
        sp.add_argument("--k", type=n_type, required=True)

    def solver_flags(sp):
        sp.add_argument("--timeout", type=float, default=None, help="seconds")
        sp.add_argument("--node-budget", type=int, default=CLI_NODE_BUDGET)
        sp.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True)
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--no-structural", action="store_true",
                        help="search with generic bounds only")

    sp = sub.add_parser("gen", help="export S(n,k)")
    nk(sp)
    sp.add_argument("--format", choices=EXPORT_FORMATS, default="edgelist")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="check a code file")
    nk(sp)
    sp.add_argument("--kind", choices=KIND_CHOICES, required=True)
    sp.add_argument("--code-file", required=True, help="path, or - for stdin")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("construct", help="print an explicit minimum code")
    nk(sp)
    sp.add_argument("--kind", choices=KIND_CHOICES, required=True)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("solve", help="exact minimum by branch and bound")
    nk(sp)
    sp.add_argument("--kind", choices=KIND_CHOICES, required=True)
    solver_flags(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("table", help="predicted/constructed/solved sizes")
    nk(sp, str)
    sp.add_argument("--kinds", default=None, help="comma list of dom,td,id,ld")
    sp.add_argument("--format", choices=("csv", "markdown"), default="markdown")
    sp.add_argument("--solve", action="store_true")
    sp.add_argument("--solve-cap", type=int, default=100, help="max vertices to solve")
    solver_flags(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("conjecture", help="identifying-code degree bound check")
    nk(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--solve-cap", type=int, default=10**4)
    sp.set_defaults(func=cmd_conjecture)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ParameterError, CapacityError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
