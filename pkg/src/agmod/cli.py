"""Command-line interface.

    agmod table 3 2 1
    agmod classify 8 6 4 --format json
    agmod classify --from-file table.csv
    agmod enumerate 5 --class zstarstar --ag
    agmod verify --theorem all --max-n 30

Exit codes: 0 success, 1 verification found violations, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import properties as P
from .classes import ClassVariant, ag_group_members, ag_members, enumerate_class
from .core import CayleyTable, make_groupoid
from .theorems import TheoremId, VerifyConfig, falsify_converse, verify

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


# -- table ------------------------------------------------------------------

def render_text_table(T: CayleyTable, symbol: str = "*") -> str:
    """Header row and column of elements, row index = left operand."""
    n = T.n
    w = len(str(n - 1))
    head_w = max(w, len(symbol))
    fmt = lambda v: str(v).rjust(w)
    lines = [symbol.ljust(head_w) + " | " + " ".join(fmt(v) for v in range(n))]
    lines.append("-" * (head_w + 1) + "+" + "-" * (n * (w + 1)))
    for a, row in enumerate(T.rows()):
        lines.append(str(a).ljust(head_w) + " | " + " ".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def render_csv_rows(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def read_table_csv(path) -> CayleyTable:
    """Read ``n`` lines of ``n`` comma-separated residues (no header)."""
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    rows = []
    for i, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        try:
            rows.append([int(f) for f in line.split(",")])
        except ValueError as exc:
            raise InputError(f"line {i + 1}: not a list of integers") from exc
    try:
        return CayleyTable.from_rows(rows)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_table(args) -> int:
    T = make_groupoid(args.n, args.t, args.u).table()
    if args.format == "json":
        out = json.dumps({"n": T.n, "t": T.source.t, "u": T.source.u, "table": T.rows()}) + "\n"
    elif args.format == "csv":
        out = render_csv_rows(T.rows())
    else:
        out = render_text_table(T)
    sys.stdout.write(out)
    return EXIT_OK


# -- classify ---------------------------------------------------------------

def profile_to_dict(profile: P.PropertyProfile, n, t=None, u=None) -> dict:
    return {
        "n": n,
        "t": t,
        "u": u,
        "properties": dict(sorted(profile.flags().items())),
        "witnesses": {k: list(w) for k, w in sorted(profile.witnesses.items())},
        "left_identity": profile.left_identity,
    }


def cmd_classify(args) -> int:
    if args.from_file is not None:
        if args.params:
            raise InputError("give either n t u or --from-file, not both")
        T = read_table_csv(args.from_file)
        t = u = None
    else:
        if len(args.params) != 3:
            raise InputError("classify needs n t u or --from-file")
        G = make_groupoid(*args.params)
        T, t, u = G.table(), G.t, G.u
    doc = profile_to_dict(P.classify(T), T.n, t, u)
    if args.format == "json":
        sys.stdout.write(json.dumps(doc) + "\n")
    elif args.format == "csv":
        rows = [["property", "value", "witness"]]
        for name, v in doc["properties"].items():
            w = doc["witnesses"].get(name)
            rows.append([name, str(v).lower(), " ".join(map(str, w)) if w is not None else ""])
        li = doc["left_identity"]
        rows.append(["left_identity", "" if li is None else li, ""])
        sys.stdout.write(render_csv_rows(rows))
    else:
        label = f"Z_{T.n}({t},{u})" if t is not None else f"table of order {T.n}"
        lines = [label]
        for name, v in doc["properties"].items():
            w = doc["witnesses"].get(name)
            tag = "witness" if v else "counterexample"
            extra = f"  {tag} {tuple(w)}" if w is not None else ""
            lines.append(f"  {name:<26}{str(v).lower()}{extra}")
        li = doc["left_identity"]
        lines.append(f"  {'left_identity':<26}{'none' if li is None else li}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


# -- enumerate --------------------------------------------------------------

def cmd_enumerate(args) -> int:
    if args.ag_group:
        listing = ag_group_members(args.n)
    elif args.ag:
        listing = ag_members(args.n, ClassVariant(args.variant), args.include_zero)
    else:
        listing = enumerate_class(args.n, ClassVariant(args.variant), args.include_zero)
    if args.format == "json":
        doc = {
            "n": listing.n,
            "class": listing.variant.value,
            "ag": listing.ag_filtered,
            "ag_group": bool(args.ag_group),
            "pairs": [list(p) for p in listing.pairs],
        }
        sys.stdout.write(json.dumps(doc) + "\n")
    elif args.format == "csv":
        sys.stdout.write(render_csv_rows([["t", "u"], *listing.pairs]))
    else:
        sys.stdout.write("".join(f"({t},{u})\n" for t, u in listing.pairs))
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def report_to_dict(r) -> dict:
    return {
        "id": r.id.value,
        "n_range": list(r.n_range),
        "converse": r.converse,
        "instances_checked": r.instances_checked,
        "sampled_instances": r.sampled_instances,
        "result": r.result,
        "violations": [
            {"n": v.n, "t": v.t, "u": v.u, "law": v.law, "witness": list(v.witness)}
            for v in r.violations
        ],
    }


def cmd_verify(args) -> int:
    if args.max_n < 3 or args.min_n > args.max_n:
        raise InputError(f"invalid range [{args.min_n}, {args.max_n}]")
    if args.theorem == "all":
        ids = list(TheoremId)
    else:
        try:
            ids = [TheoremId(args.theorem.lower())]
        except ValueError:
            raise InputError(f"unknown theorem {args.theorem!r}") from None
    cfg = VerifyConfig(
        exhaustive_cap=args.cap,
        samples=args.samples,
        seed=args.seed,
        max_violations=args.max_violations,
    )
    run = falsify_converse if args.converse else verify
    n_range = (args.min_n, args.max_n)
    reports = []
    for tid in ids:
        try:
            reports.append(run(tid, n_range, cfg, workers=args.workers))
        except ValueError as exc:
            if args.theorem == "all" and args.converse:
                continue  # theorems without a converse probe
            raise InputError(str(exc)) from exc
    docs = [report_to_dict(r) for r in reports]
    if args.format == "json":
        sys.stdout.write(json.dumps(docs) + "\n")
    elif args.format == "csv":
        rows = [["id", "n_min", "n_max", "converse", "instances_checked", "result", "violations"]]
        rows += [[d["id"], *d["n_range"], str(d["converse"]).lower(), d["instances_checked"],
                  d["result"], len(d["violations"])] for d in docs]
        sys.stdout.write(render_csv_rows(rows))
    else:
        lines = []
        for d in docs:
            kind = "converse " if d["converse"] else ""
            lo, hi = d["n_range"]
            lines.append(f"{kind}{d['id']:<24} n in [{lo},{hi}]  instances={d['instances_checked']:<6} "
                         f"{d['result'].upper()}")
            for v in d["violations"]:
                lines.append(f"    Z_{v['n']}({v['t']},{v['u']})  {v['law']}  {tuple(v['witness'])}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATIONS


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agmod", description="AG-groupoids Z_n(t,u) mod n")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("table", parents=[fmt], help="print the Cayley table of Z_n(t,u)")
    p.add_argument("n", type=int)
    p.add_argument("t", type=int)
    p.add_argument("u", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("classify", parents=[fmt], help="property profile of a table")
    p.add_argument("params", nargs="*", type=int, metavar="n t u")
    p.add_argument("--from-file", metavar="PATH")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", parents=[fmt], help="list a parameter class")
    p.add_argument("n", type=int)
    p.add_argument("--class", dest="variant", default="zstarstarstar",
                   choices=[v.value for v in ClassVariant])
    p.add_argument("--ag", action="store_true", help="keep only pairs with t^2 = u (mod n)")
    p.add_argument("--ag-group", action="store_true", help="pairs (t,1) with t^2 = 1 (mod n)")
    p.add_argument("--include-zero", action="store_true", help="keep the pair (0,0) in zstarstarstar")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[fmt], help="brute-force check the theorem registry")
    p.add_argument("--theorem", default="all", help="theorem id or 'all'")
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--converse", action="store_true", help="run the converse probe instead")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=128, help="largest n checked exhaustively")
    p.add_argument("--samples", type=int, default=10**6, help="sampled triples per instance above the cap")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-violations", type=int, default=10)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"agmod: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
