"""Command-line frontend.

Every subcommand prints one record, as JSON (default) or CSV.  Exact
probabilities are "num/den" strings; the 4-place decimals are advisory.
"""
import argparse
import csv
import io
import json
import sys

from . import chains, distributions, montecarlo, partitions
from .geometry import IncompatibleBoxes
from .render import decimal_str, fraction_str, key_str
from .symfunc import OrientationError

__all__ = ["main", "build_parser", "run"]


def dims(text):
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"{text!r} must contain positive integers only")
    return values


def _exact(value):
    return {"exact": fraction_str(value), "decimal": decimal_str(value)}


def _entries(mapping, **extra):
    out = []
    for key in sorted(mapping, reverse=True):
        row = {"key": key_str(key), "outcome": list(key)}
        row.update(_exact(mapping[key]))
        for name, values in extra.items():
            row[name] = values[key]
        out.append(row)
    return out


def _record(kind, inputs, payload):
    return {"kind": kind, "input": inputs, "payload": payload}


def cmd_dist(args, parser):
    _same_length(parser, args.a, args.b)
    if args.model == "box":
        d = distributions.box_distribution(args.a, args.b)
        kind = "box-dist"
    else:
        d = partitions.partition_distribution(args.a, args.b)
        kind = "partition-dist"
    return _record(kind, {"x": list(args.a), "y": list(args.b)},
                   {"total_attachments": d.total_attachments,
                    "entries": _entries(d.entries, count=d.counts)})


def cmd_growth(args, parser):
    _same_length(parser, args.x, args.y)
    x, y = distributions.orient(args.x, args.y)
    inputs = {"x": list(args.x), "y": list(args.y), "oriented": [list(x), list(y)]}
    if args.what == "pmf":
        pmf = distributions.growth_count_pmf(x, y)
        return _record("growth-pmf", inputs,
                       {"entries": _entries({(k,): p for k, p in enumerate(pmf)})})
    if args.p is None or args.p < 0:
        parser.error("argument -p: a non-negative moment order is required")
    inputs["p"] = args.p
    value = distributions.moment(x, y, args.p)
    return _record("moments", inputs, {"entries": _entries({(args.p,): value})})


def cmd_chain(args, parser):
    if args.steps < 0:
        parser.error("argument --steps: must be non-negative")
    if args.mode == "unit":
        if args.z is not None:
            parser.error("argument Z: not accepted by 'chain unit'")
        dist = chains.unit_box_chain(args.x, args.steps)
        inputs = {"x": list(args.x), "steps": args.steps}
    else:
        if args.z is None:
            parser.error("argument Z: required for 'chain nstep'")
        _same_length(parser, args.x, args.z, names=("X", "Z"))
        dist = {args.z: chains.n_step_probability(args.x, args.z, args.steps)}
        inputs = {"x": list(args.x), "z": list(args.z), "steps": args.steps}
    return _record("chain-dist", inputs, {"entries": _entries(dist)})


def cmd_trace(args, parser):
    if args.steps < 1:
        parser.error("argument --steps: must be at least 1")
    tree = chains.most_frequent_trace(args.lam, args.steps, args.expand_limit)
    levels = []
    for n, level in enumerate(tree.levels, 1):
        levels.append({
            "level": n,
            "expanded": level.expanded,
            "tie_count": level.tie_count,
            "states": [list(s) for s in level.states],
            "edges": [dict(parent=list(e.parent), child=list(e.child), **_exact(e.probability))
                      for e in sorted(level.edges, key=lambda e: (e.parent, e.child), reverse=True)],
        })
    return _record("trace", {"lam": list(args.lam), "steps": args.steps,
                             "expand_limit": args.expand_limit},
                   {"root": list(tree.root), "levels": levels})


def cmd_fib(args, parser):
    if args.steps < 1:
        parser.error("argument --steps: must be at least 1")
    try:
        reports = chains.fibonacci_limit_report(args.lam, args.steps)
    except ValueError as exc:
        parser.error(f"argument L: {exc}")
    rows = []
    for r in reports:
        rows.append({
            "step": r.step,
            "state": list(r.state),
            "ratio_exact": fraction_str(r.ratio),
            "ratio_decimal": r.ratio_decimal,
            "exact": None if r.probability is None else fraction_str(r.probability),
            "decimal": r.probability_decimal,
        })
    return _record("ratio-report", {"lam": list(args.lam), "steps": args.steps}, {"rows": rows})


def cmd_mc(args, parser):
    _same_length(parser, args.x, args.y)
    if args.trials < 1:
        parser.error("argument --trials: must be positive")
    if not 0 <= args.seed < 2 ** 64:
        parser.error("argument --seed: must be an unsigned 64-bit integer")
    cfg = montecarlo.SampleConfig(args.trials, args.seed)
    est = montecarlo.estimate_distribution(args.x, args.y, cfg, partition_mode=args.partition)
    if args.partition:
        exact = partitions.partition_distribution(args.x, args.y)
    else:
        exact = distributions.box_distribution(args.x, args.y)
    keys = set(est.counts) | set(exact.entries)
    freqs = {k: est.frequency(k) for k in keys}
    entries = _entries(freqs, count={k: est.counts.get(k, 0) for k in keys})
    for row in entries:
        p = exact[tuple(row["outcome"])]
        row["probability_exact"] = fraction_str(p)
        row["probability_decimal"] = decimal_str(p)
    tv = sum(abs(freqs[k] - exact[k]) for k in keys) / 2
    return _record("mc-estimate",
                   {"x": list(args.x), "y": list(args.y), "trials": args.trials,
                    "seed": args.seed, "mode": "partition" if args.partition else "box"},
                   {"total": est.total, "tv_distance": _exact(tv), "entries": entries})


def _same_length(parser, a, b, names=("X", "Y")):
    if len(a) != len(b):
        parser.error(f"argument {names[1]}: length {len(b)} does not match {names[0]} of length {len(a)}")


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv"), default="json")

    p = argparse.ArgumentParser(prog="latagg", description="Exact lattice aggregation models.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", parents=[fmt], help="aggregation distribution")
    d.add_argument("model", choices=("box", "partition"))
    d.add_argument("a", metavar="X", type=dims)
    d.add_argument("b", metavar="Y", type=dims)
    d.set_defaults(func=cmd_dist)

    g = sub.add_parser("growth", parents=[fmt], help="number of growth directions")
    g.add_argument("what", choices=("pmf", "moment"))
    g.add_argument("x", metavar="X", type=dims)
    g.add_argument("y", metavar="Y", type=dims)
    g.add_argument("-p", type=int, help="moment order (for 'moment')")
    g.set_defaults(func=cmd_growth)

    c = sub.add_parser("chain", parents=[fmt], help="unit-box Markov chain")
    c.add_argument("mode", choices=("unit", "nstep"))
    c.add_argument("x", metavar="X", type=dims)
    c.add_argument("z", metavar="Z", type=dims, nargs="?")
    c.add_argument("--steps", type=int, required=True)
    c.set_defaults(func=cmd_chain)

    t = sub.add_parser("trace", parents=[fmt], help="most frequent self-aggregations")
    t.add_argument("lam", metavar="L", type=dims)
    t.add_argument("--steps", type=int, required=True)
    t.add_argument("--expand-limit", type=int, default=8)
    t.set_defaults(func=cmd_trace)

    f = sub.add_parser("fib", parents=[fmt], help="golden-ratio limit of rectangles")
    f.add_argument("lam", metavar="L", type=dims)
    f.add_argument("--steps", type=int, required=True)
    f.set_defaults(func=cmd_fib)

    m = sub.add_parser("mc", parents=[fmt], help="Monte Carlo estimate")
    m.add_argument("x", metavar="X", type=dims)
    m.add_argument("y", metavar="Y", type=dims)
    m.add_argument("--trials", type=int, required=True)
    m.add_argument("--seed", type=int, required=True)
    m.add_argument("--partition", action="store_true")
    m.set_defaults(func=cmd_mc)
    return p


def csv_rows(record):
    """Flatten a record into (key, num, den, decimal) rows."""
    kind, payload = record["kind"], record["payload"]

    def split(exact):
        if exact is None:
            return "", ""
        num, den = exact.split("/")
        return num, den

    if kind == "trace":
        for level in payload["levels"]:
            for e in level["edges"]:
                key = f"{level['level']}|{key_str(e['parent'])}|{key_str(e['child'])}"
                yield (key, *split(e["exact"]), e["decimal"])
    elif kind == "ratio-report":
        for r in payload["rows"]:
            key = f"{r['step']}|{key_str(r['state'])}"
            yield (key + "|ratio", *split(r["ratio_exact"]), r["ratio_decimal"])
            yield (key + "|probability", *split(r["exact"]), r["decimal"] or "")
    elif kind == "mc-estimate":
        for row in payload["entries"]:
            yield (row["key"], row["count"], payload["total"], row["decimal"])
    else:
        for row in payload["entries"]:
            yield (row["key"], *split(row["exact"]), row["decimal"])


def render(record, fmt):
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("key", "num", "den", "decimal"))
    w.writerows(csv_rows(record))
    return buf.getvalue()


def run(argv):
    """Parse ``argv`` and return (exit code, output text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = args.func(args, parser)
    except (IncompatibleBoxes, OrientationError, ValueError) as exc:
        parser.error(str(exc))
    return 0, render(record, args.format)


def main(argv=None):
    try:
        code, text = run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
