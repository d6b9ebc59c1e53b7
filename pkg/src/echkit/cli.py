"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 internal consistency
error.  Text output prints 6 fractional digits (``ECHKIT_PRECISION``
overrides); JSON carries full precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import capacity, ctd, rkp, tree
from .errors import EchkitError, UsageError
from .report import ReportRow, emit_csv, emit_table, emit_text, fmt, load_reference_table

TABLE_KMAX = 20


def _floats(text: str, n: int | None = None) -> list[float]:
    try:
        vals = [float(Fraction(x.strip())) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse number list {text!r}") from None
    if n is not None and len(vals) != n:
        raise UsageError(f"expected {n} comma-separated numbers, got {text!r}")
    return vals


def _frac_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _json(obj) -> str:
    return json.dumps(obj, indent=2)


def _sequence_out(seq, fmt_name: str, exact: bool = False) -> str:
    if fmt_name == "json":
        rows = []
        for k, v in enumerate(seq):
            row = {"k": k, "value": float(v)}
            if exact:
                row["exact"] = _frac_str(v)
            rows.append(row)
        return _json(rows)
    if fmt_name == "csv":
        return emit_csv(["k", "value"], [[k, repr(float(v))] for k, v in enumerate(seq)])
    return emit_text(["k", "value"], [[k, _frac_str(v) if exact else fmt(v)] for k, v in enumerate(seq)])


# -- subcommands -----------------------------------------------------------

def cmd_tree(args) -> str:
    rows = tree.tree_nodes(args.depth)
    if args.format == "json":
        return _json(rows)
    if args.format == "csv":
        return emit_csv(["index", "sb", "slope"], [[r["index"], r["sb"], r["slope"]] for r in rows])
    return emit_text(["index", "sb", "slope"], [[r["index"], r["sb"], r["slope"]] for r in rows])


def cmd_capacities(args) -> str:
    seq = capacity.union_capacities(_floats(args.weights), args.kmax)
    return _sequence_out(seq, args.format)


def cmd_embed(args) -> str:
    a, b = _floats(args.source, 2)
    a2, b2 = _floats(args.target, 2)
    verdict = capacity.embed_ellipsoid_check(a, b, a2, b2, args.kmax)
    src = capacity.ellipsoid_sequence(a, b, args.kmax)
    tgt = capacity.ellipsoid_sequence(a2, b2, args.kmax)
    if args.format == "json":
        rows = [{"k": k, "source": x, "target": y} for k, (x, y) in enumerate(zip(src, tgt))]
        return _json({"rows": rows, "verdict": verdict.to_dict()})
    if args.format == "csv":
        return emit_csv(["k", "source", "target"], [[k, repr(x), repr(y)] for k, (x, y) in enumerate(zip(src, tgt))])
    body = emit_text(["k", "source", "target"], [[k, fmt(x), fmt(y)] for k, (x, y) in enumerate(zip(src, tgt))])
    return body + "\n" + verdict.note


def cmd_ctd_weights(args) -> str:
    d = ctd.ConcaveDomain.parse(args.vertices)
    ws = ctd.order_weights(ctd.weight_expansion(d))
    if args.format == "json":
        return _json({
            "vertices": str(d),
            "area": _frac_str(ctd.domain_area(d)),
            "weights": [{"index": p.index, "value": float(p.value), "exact": _frac_str(p.value)} for p in ws],
        })
    rows = [[p.index, _frac_str(p.value)] for p in ws]
    if args.format == "csv":
        return emit_csv(["index", "value"], rows)
    return emit_text(["index", "weight"], rows)


def cmd_ctd_capacities(args) -> str:
    d = ctd.ConcaveDomain.parse(args.vertices)
    return _sequence_out(ctd.ctd_capacities(d, args.kmax), args.format, exact=True)


def cmd_rkp_weights(args) -> str:
    w, ordered = rkp.weights_all(args.energy)
    diag = rkp.area_diagnostic(args.energy)
    if args.format == "json":
        return _json({
            "energy": w.energy,
            "weights": w.as_dict(),
            "cases": w.cases,
            "order": [label for label, _ in ordered],
            "area_diagnostic": diag,
        })
    rows = [[label, repr(v) if args.format == "csv" else fmt(v), w.cases[label], rkp.PORTIONS[label]]
            for label, v in zip(rkp.WEIGHT_LABELS, w.values)]
    if args.format == "csv":
        return emit_csv(["weight", "value", "case", "portion"], rows)
    text = emit_text(["weight", "value", "case", "portion"], rows)
    order = " > ".join(label for label, _ in ordered)
    return (f"{text}\norder: {order}\n"
            f"sum(W^2)/2 = {fmt(diag['sum_w2_half'])}  domain area = {fmt(diag['domain_area'])}")


def cmd_rkp_capacities(args) -> str:
    seq = rkp.rkp_capacities(args.energy, args.kmax)
    if not args.verify_oracle:
        return _sequence_out(seq, args.format)
    oracle = rkp.oracle_weights(args.energy, args.samples)
    oseq = capacity.union_capacities(oracle, args.kmax)
    rows = [ReportRow(k, v, oracle_value=o) for k, (v, o) in enumerate(zip(seq, oseq))]
    if args.format == "json":
        return _json({
            "energy": args.energy,
            "samples": args.samples,
            "rows": [{"k": r.k, "value": r.value, "oracle_value": r.oracle_value,
                      "delta": r.value - r.oracle_value} for r in rows],
            "oracle_top_weights": oracle[:8],
        })
    body = [[r.k, fmt(r.value), fmt(r.oracle_value), fmt(r.value - r.oracle_value)] for r in rows]
    if args.format == "csv":
        return emit_csv(["k", "value", "oracle_value", "delta"],
                        [[r.k, repr(r.value), repr(r.oracle_value), repr(r.value - r.oracle_value)] for r in rows])
    return emit_text(["k", "closed-form", "oracle", "delta"], body)


def table_rows() -> list[ReportRow]:
    """Recompute the reference table at c = -3/2 next to the stored figures."""
    ref = load_reference_table()
    _, ordered = rkp.weights_all(ref["energy"])
    values = [v for _, v in ordered]
    dp = capacity.union_capacities(values, TABLE_KMAX)
    brute = capacity.brute_force_union(values, TABLE_KMAX, max_k=TABLE_KMAX)
    return [ReportRow(r["k"], dp[r["k"]], r["value"], r["expression"], brute[r["k"]]) for r in ref["rows"]]


def cmd_rkp_table(args) -> str:
    return emit_table(table_rows(), args.format)


def cmd_rkp_thresholds(args) -> str:
    rows = []
    for idx in tree.indices(args.depth):
        s = tree.new_tree_slope(idx)
        if s == tree.INFINITY or s > 0:
            continue
        p, q = -s.numerator, s.denominator
        rows.append({"index": idx, "sb": "{}/{}".format(*tree.sb_pair(idx)), "slope": tree.format_slope(s),
                     "entry_energy": tree.entry_energy(s), "critical_energy": tree.critical_energy(p, q)})
    if args.format == "json":
        return _json(rows)
    keys = ["index", "sb", "slope", "entry_energy", "critical_energy"]
    if args.format == "csv":
        return emit_csv(keys, [[r[k] if isinstance(r[k], str) else repr(r[k]) for k in keys] for r in rows])
    return emit_text(keys, [[r[k] if isinstance(r[k], str) else fmt(r[k]) for k in keys] for r in rows])


# -- parser ----------------------------------------------------------------

def _format_parent(default: str) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv", "text"), default=default)
    p.add_argument("--json", dest="format", action="store_const", const="json", default=argparse.SUPPRESS, help="same as --format json")
    p.add_argument("--csv", dest="format", action="store_const", const="csv", default=argparse.SUPPRESS, help="same as --format csv")
    return p


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _pos_int(text):
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _energy(text):
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="echkit", description="ECH capacities of concave toric domains")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    text, js = _format_parent("text"), _format_parent("json")

    p = sub.add_parser("tree", parents=[js], help="Stern-Brocot tree and slope tree")
    p.add_argument("--depth", type=_pos_int, required=True)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("capacities", parents=[text], help="capacities of a disjoint union of balls")
    p.add_argument("--weights", required=True, help="comma-separated ball sizes")
    p.add_argument("--kmax", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_capacities)

    p = sub.add_parser("embed", parents=[text], help="ellipsoid embedding obstruction check")
    p.add_argument("--source", required=True, help="a,b")
    p.add_argument("--target", required=True, help="a,b")
    p.add_argument("--kmax", type=_pos_int, required=True)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("ctd-weights", parents=[text], help="weight expansion of a rational domain")
    p.add_argument("--vertices", required=True, help='e.g. "0,2;1,1;3,0"')
    p.set_defaults(func=cmd_ctd_weights)

    p = sub.add_parser("ctd-capacities", parents=[text], help="capacities of a rational domain")
    p.add_argument("--vertices", required=True)
    p.add_argument("--kmax", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_ctd_capacities)

    p = sub.add_parser("rkp", help="rotating Kepler problem")
    rsub = p.add_subparsers(dest="rkp_command", metavar="RKP_COMMAND")
    rsub.required = True

    q = rsub.add_parser("weights", parents=[text], help="closed-form weights W1..W5")
    q.add_argument("--energy", type=_energy, required=True)
    q.set_defaults(func=cmd_rkp_weights)

    q = rsub.add_parser("capacities", parents=[text], help="capacities from the closed-form weights")
    q.add_argument("--energy", type=_energy, required=True)
    q.add_argument("--kmax", type=_nonneg_int, required=True)
    q.add_argument("--verify-oracle", action="store_true",
                   help="compare against the weight expansion of a polygonal approximation")
    q.add_argument("--samples", type=_pos_int, default=rkp.DEFAULT_SAMPLES)
    q.set_defaults(func=cmd_rkp_capacities)

    q = rsub.add_parser("table", parents=[text], help="reference table at c = -3/2 with recomputation")
    q.set_defaults(func=cmd_rkp_table)

    q = rsub.add_parser("thresholds", parents=[text], help="entry energies of tree slopes")
    q.add_argument("--depth", type=_pos_int, required=True)
    q.set_defaults(func=cmd_rkp_thresholds)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except EchkitError as exc:
        print(f"echkit: error: {exc}", file=err)
        return exc.exit_code
    print(text, file=out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
