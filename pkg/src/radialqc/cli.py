"""Command-line front end: ``radialqc {bounds,table,verify,scan}``.

Exit codes: 0 on success, 1 when a check or table comparison fails, 2 on
usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from radialqc.bounds import BOUND_SYMBOLS, all_bounds
from radialqc.errors import DomainError
from radialqc.metrics import p_angular
from radialqc.tables import TABLE_IDS, compare_table
from radialqc.verify import check_names, run_all, scan_min_regions, to_csv, to_jsonl

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# options whose values commonly start with a minus sign
_VALUE_OPTS = ("--x", "--y", "--box", "--p")


def parse_vector(text: str) -> np.ndarray:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse vector {text!r}; expected comma-separated reals") from None
    return np.array(vals)


def _fmt(value, precision: int) -> str:
    if value is None:
        return "undefined"
    return f"{value:.{precision}g}"


def _rows_out(rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return "".join(" ".join(str(c) for c in r) + "\n" for r in rows)


def cmd_bounds(args) -> int:
    x, y = parse_vector(args.x), parse_vector(args.y)
    if x.shape != y.shape:
        raise DomainError("x and y must have the same dimension")
    bs = all_bounds(x, y, args.p)
    alpha = p_angular(x, y, args.p)
    pr = args.precision
    rows = [["quantity", "value"]] if args.format == "csv" else []
    rows.append(["alpha_p", _fmt(alpha, pr)])
    for s in BOUND_SYMBOLS:
        v = getattr(bs, s)
        note = "undefined" if v is None else _fmt(v, pr)
        if s == "K" and v is None and 0.0 < args.p < 1.0:
            note = "undefined-at-coincident-points"
        rows.append([s, note])
    rows.append(["minimal", ",".join(sorted(bs.minimal))])
    if args.format == "text":
        sys.stdout.write("".join(f"{k}={v}\n" for k, v in rows))
    else:
        sys.stdout.write(_rows_out(rows, "csv"))
    return EXIT_OK


def cmd_table(args) -> int:
    rep = compare_table(args.id)
    pr = args.precision
    out = [["table", "k", "header", "printed", "recomputed", "match"]]
    for r in rep.rows:
        for h in r.row.headers:
            out.append([rep.table_id, r.row.k, h, r.row.printed[h], _fmt(r.recomputed[h], pr), "yes" if r.header_match[h] else "no"])
    summary = [["table", "k", "multiset", "minimal", "claim", "claim_holds", "claim_holds_under_exchange"]]
    for r in rep.rows:
        summary.append([
            rep.table_id,
            r.row.k,
            "yes" if r.multiset_match else "no",
            "".join(sorted(r.recomputed_minimal)),
            r.row.claim,
            "yes" if r.claim_holds else "no",
            "yes" if r.claim_holds_under(rep.assignment) else "no",
        ])
    exch = ";".join("<->".join(c) for c in rep.exchanges) or "none"
    tail = [["exchange", exch], ["per_header", "pass" if rep.per_header_ok else "fail"],
            ["multiset", "pass" if rep.multiset_ok else "fail"]]
    sep = "" if args.format == "csv" else "\n"
    sys.stdout.write(_rows_out(out, args.format) + sep + _rows_out(summary, args.format) + sep + _rows_out(tail, args.format))
    return EXIT_OK if rep.multiset_ok else EXIT_FAIL


def cmd_verify(args) -> int:
    suite = None if args.suite == "all" else args.suite
    if not check_names(suite):
        raise DomainError(f"no registered check matches suite {args.suite!r}")
    if args.samples < 1:
        raise DomainError("samples must be at least 1")
    reports = run_all(args.samples, args.seed, suite=suite, workers=args.workers)
    sys.stdout.write(to_csv(reports) if args.format == "csv" else to_jsonl(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_scan(args) -> int:
    box = parse_vector(args.box)
    if box.shape != (2,):
        raise DomainError("--box takes two numbers, lo,hi")
    res = scan_min_regions(args.p, (box[0], box[1]), args.samples, args.seed)
    if args.format == "csv":
        rows = [["symbol", "count", "margin", "x", "y"]]
        for s in BOUND_SYMBOLS:
            w = res.witnesses.get(s)
            rows.append([s, res.counts[s], _fmt(res.margins.get(s), args.precision),
                         "" if w is None else ";".join(map(repr, w[0])), "" if w is None else ";".join(map(repr, w[1]))])
        sys.stdout.write(_rows_out(rows, "csv"))
    else:
        record = {"p": res.p, "samples": res.samples, "seed": args.seed, "counts": res.counts,
                  "witnesses": {s: {"x": list(w[0]), "y": list(w[1]), "margin": res.margins[s]} for s, w in res.witnesses.items()}}
        sys.stdout.write(json.dumps(record) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radialqc", description="Bounds for the p-angular distance and numerical checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=6, help="significant digits (default 6)")
    common.add_argument("--format", choices=("text", "csv"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", parents=[common], help="all bounds for one pair")
    b.add_argument("--x", required=True, help="comma-separated coordinates")
    b.add_argument("--y", required=True)
    b.add_argument("--p", type=float, required=True)
    b.set_defaults(func=cmd_bounds)

    t = sub.add_parser("table", parents=[common], help="recompute a shipped comparison table")
    t.add_argument("--id", type=int, required=True, choices=TABLE_IDS)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run registered checks")
    v.add_argument("--suite", default="all", help="name prefix, or 'all'")
    v.add_argument("--samples", type=int, default=10_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--workers", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", parents=[common], help="count which bound is minimal on random pairs")
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--box", default="-3,3", help="lo,hi for every coordinate")
    s.add_argument("--samples", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_scan)
    return parser


def _join_values(argv: list[str]) -> list[str]:
    """Turn ``--x -1,2`` into ``--x=-1,2`` so argparse does not read it as an option."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_join_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"radialqc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
