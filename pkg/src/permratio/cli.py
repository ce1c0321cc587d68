"""Command-line front end: ``permratio {ratio,permanent,verify,extremal,table}``.

Exit codes: 0 success, 1 a verification instance failed, 2 bad input
(parse error, unknown lemma tag, invalid range), 3 an order cap was
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .enumeration import DEFAULT_ENUM_CAP, extremal_search, permanent_extremal_search
from .errors import InvalidEdge, InvalidSpec, NotATree, ParseError, TooLarge, ZeroDegree
from .exact import format_decimal, format_rational
from .families import broom_pd, broom_permanent, broom_ratio, build, parse_family, theorem_bound
from .graph import Graph, parse_edge_list
from .permanent import default_cap, permanent_ryser
from .graph import laplacian
from .treedp import graph_ratio
from .verify import TAGS, UnknownTag, run_suite, write_counterexamples

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load_graph(args) -> Graph:
    spec = args.family or getattr(args, "spec", None)
    if args.edges and spec:
        raise UsageError("give either --edges or a family spec, not both")
    if args.edges:
        try:
            text = Path(args.edges).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.edges}: {exc}") from exc
        return parse_edge_list(text)
    if spec:
        return build(parse_family(spec))
    raise UsageError("an input is required: --edges FILE or --family SPEC")


def cmd_ratio(args, out) -> int:
    g = _load_graph(args)
    per, pd, pi = graph_ratio(g, args.cap)
    if args.format == "json":
        out.write(_dump({"n": g.n, "per": per, "pd": pd, "pi": format_rational(pi)}))
    elif args.format == "csv":
        out.write("per,pd,pi,pi_decimal\n")
        out.write(f"{per},{pd},{format_rational(pi)},{format_decimal(pi)}\n")
    else:
        out.write(f"per={per} PD={pd} pi={format_rational(pi)} (~{format_decimal(pi)})\n")
    return 0


def cmd_permanent(args, out) -> int:
    g = _load_graph(args)
    per = permanent_ryser(laplacian(g), args.cap)
    if args.format == "json":
        out.write(_dump({"n": g.n, "per": per}))
    else:
        out.write(f"per={per}\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.lemma not in TAGS:
        raise UnknownTag(f"unknown lemma tag {args.lemma!r}; choose from {', '.join(TAGS)}")
    result = run_suite(
        args.lemma,
        seed=args.seed,
        instances=args.instances,
        n_max=args.n_max,
        jobs=args.jobs,
        progress=not args.quiet,
    )
    files = []
    if result.counterexamples:
        files = [str(p) for p in write_counterexamples(result, Path(args.out_dir))]
    if args.format == "json":
        payload = result.to_json()
        payload["counterexample_files"] = files
        out.write(_dump(payload))
    else:
        out.write(result.summary() + "\n")
        for f in files:
            out.write(f"counterexample written: {f}\n")
    return 0 if result.ok else EXIT_FAIL


def cmd_extremal(args, out) -> int:
    if args.n is None or args.k is None:
        raise UsageError("--n and --k are required")
    search = extremal_search if args.objective == "ratio" else permanent_extremal_search
    rep = search(args.n, args.k, jobs=args.jobs, cap=args.enum_cap, progress=not args.quiet)
    if args.format == "json":
        out.write(_dump(rep.to_json()))
    else:
        out.write(f"n={rep.n} k={rep.k} objective={rep.objective} examined={rep.examined}\n")
        out.write(f"minimum={format_rational(rep.minimum)} (~{format_decimal(rep.minimum)})\n")
        out.write(f"expected={format_rational(rep.expected)} broom={rep.broom_code}\n")
        for code in rep.minimizers:
            tag = " (broom)" if code == rep.broom_code else ""
            out.write(f"minimizer {code}{tag}\n")
        out.write(f"agreement={'yes' if rep.agreement else 'no'}\n")
    return 0


TABLE_COLUMNS = ("n", "k", "perm", "pd", "pi", "pi_decimal")


def _table_rows(args) -> list[dict]:
    if args.n is not None:
        n_lo = n_hi = args.n
    else:
        n_lo, n_hi = args.n_min, args.n_max if args.n_max is not None else 10
    if n_lo < 3 or n_hi < n_lo:
        raise UsageError(f"invalid n range {n_lo}..{n_hi}")
    k_lo = args.k if args.k is not None else 2
    if k_lo < 2:
        raise UsageError("k must be at least 2")
    rows = []
    for n in range(n_lo, n_hi + 1):
        k_hi = n - 1 if args.k_max is None else min(args.k_max, n - 1)
        if args.k is not None:
            k_hi = min(args.k, n - 1)
        for k in range(k_lo, k_hi + 1):
            bound = theorem_bound(n, k)
            pi = broom_ratio(n, k)
            if pi != bound:  # pragma: no cover - closed forms disagree only on a bug
                raise AssertionError(f"broom ratio and bound differ at ({n},{k})")
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "perm": broom_permanent(n, k),
                    "pd": broom_pd(n, k),
                    "pi": format_rational(pi),
                    "pi_decimal": format_decimal(bound),
                }
            )
    if not rows:
        raise UsageError("the requested (n, k) range is empty")
    return rows


def cmd_table(args, out) -> int:
    rows = _table_rows(args)
    if args.format == "json":
        out.write(_dump({"columns": list(TABLE_COLUMNS), "rows": rows}))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in TABLE_COLUMNS}
        out.write("  ".join(c.rjust(widths[c]) for c in TABLE_COLUMNS) + "\n")
        for r in rows:
            out.write("  ".join(str(r[c]).rjust(widths[c]) for c in TABLE_COLUMNS) + "\n")
    return 0


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--cap", type=int, default=None, help="Ryser order cap (env PERMRATIO_CAP)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--quiet", action="store_true", help="no progress on stderr")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("spec", nargs="?", help="family spec, e.g. broom:5,3")
    graph_in.add_argument("--edges", metavar="FILE")
    graph_in.add_argument("--family", metavar="SPEC")

    p = argparse.ArgumentParser(prog="permratio", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("ratio", parents=[common, graph_in], help="per L, PD and the ratio")
    r.set_defaults(func=cmd_ratio)
    pm = sub.add_parser("permanent", parents=[common, graph_in], help="per L by Ryser")
    pm.set_defaults(func=cmd_permanent)

    v = sub.add_parser("verify", parents=[common], help="run a claim's verification suite")
    v.add_argument("--lemma", required=True, metavar="TAG", help=", ".join(TAGS))
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--instances", type=int, default=None)
    v.add_argument("--seed", type=_u64, default=42)
    v.add_argument("--out-dir", default="counterexamples")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("extremal", parents=[common], help="exhaustive minimum over trees")
    e.add_argument("--n", type=int)
    e.add_argument("--k", type=int)
    e.add_argument("--objective", choices=("ratio", "permanent"), default="ratio")
    e.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    e.set_defaults(func=cmd_extremal)

    t = sub.add_parser("table", parents=[common], help="broom data and the bound per (n, k)")
    t.add_argument("--n", type=int)
    t.add_argument("--k", type=int)
    t.add_argument("--n-min", type=int, default=3)
    t.add_argument("--n-max", type=int)
    t.add_argument("--k-max", type=int)
    t.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    if args.cap is None:
        args.cap = default_cap()
    try:
        return args.func(args, out)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (
        ParseError,
        InvalidEdge,
        InvalidSpec,
        NotATree,
        ZeroDegree,
        UnknownTag,
        UsageError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
