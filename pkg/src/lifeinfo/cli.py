"""Command-line front end.

Exit codes: 0 success, 2 usage, 3 data validation, 4 golden-diff failure,
5 statistical-test failure (only with ``mc --assert``).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import fileio
from .asymptotics import CovMode, sigma_sq
from .distribution import PairedPmfs
from .errors import EstimationError, ResidualAtTerminalError, TooFewDrawsError, ValidationError
from .estimators import deviation_stats, plugin_measure
from .measures import Convention, Measure, evaluate
from .montecarlo import McStudy, run_study, run_trace
from .tables import all_match, compute_tables

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_GOLDEN, EXIT_STAT = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def fmt(v) -> str:
    return "×" if v is None else format(v, ".10g")


def _measure(name) -> Measure:
    try:
        return Measure.parse(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _grid(text) -> list:
    try:
        if ":" in text:
            start, stop, step = (int(t) for t in text.split(":"))
            return list(range(start, stop + 1, step))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}; use start:stop:step or a,b,c") from None


def _add_dist_flags(p, support=False):
    g = p.add_argument_group("distribution")
    g.add_argument("--dist", help="pmf JSON file, or builtin name (weibull6, example2)")
    g.add_argument("--pair", help="paired (p, q) JSON file, or builtin name (example2)")
    if support:
        g.add_argument("--support", help="support JSON (list or {'support': [...]})")


def _add_measure_flags(p):
    p.add_argument("--measure", required=True, type=_measure,
                   help="one of: " + ", ".join(m.value for m in Measure))
    p.add_argument("--j", type=int, help="1-based time index")
    p.add_argument("--convention", choices=[c.value for c in Convention], default="paper")


def _add_output_flags(p, formats=("text", "json", "csv"), default="text"):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lifeinfo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact measure value(s)")
    _add_dist_flags(p)
    _add_measure_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("estimate", help="plug-in estimate from a sample")
    _add_dist_flags(p, support=True)
    p.add_argument("--sample", required=True, help="one observation per line, or counts JSON")
    _add_measure_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("asymptotics", help="a.s. bound constant and asymptotic variance")
    _add_dist_flags(p)
    _add_measure_flags(p)
    p.add_argument("--cov-mode", choices=[c.value for c in CovMode], default="delta")
    _add_output_flags(p, formats=("json",), default="json")

    p = sub.add_parser("mc", help="Monte Carlo normality study")
    _add_dist_flags(p)
    _add_measure_flags(p)
    p.add_argument("--cov-mode", choices=[c.value for c in CovMode], default="delta")
    p.add_argument("--n", type=int, default=10_000)
    p.add_argument("--reps", type=int, default=2000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--assert", dest="assert_ks", action="store_true",
                   help="exit 5 if the KS statistic exceeds its 95%% critical value")
    _add_output_flags(p, formats=("json", "csv"), default="json")

    p = sub.add_parser("trace", help="estimates along one growing sample")
    _add_dist_flags(p)
    _add_measure_flags(p)
    p.add_argument("--grid", type=_grid, default=list(range(100, 30001, 100)),
                   help="start:stop:step or comma list (default 100:30000:100)")
    p.add_argument("--seed", type=int, default=42)
    _add_output_flags(p, formats=("csv", "json"), default="csv")

    p = sub.add_parser("tables", help="reproduce the reference tables and diff against golden values")
    p.add_argument("--convention", choices=[c.value for c in Convention], default="paper")
    _add_output_flags(p, formats=("text", "json"))
    return parser


def _load(args, m: Measure):
    """Return ``(dist, pmf, q)`` from --dist/--pair for measure ``m``."""
    if args.pair:
        pair = fileio.load_pair(args.pair)
        return pair, pair.p, pair.q
    if args.dist:
        if m.paired:
            raise UsageError(f"{m.value} needs --pair")
        pmf = fileio.load_pmf(args.dist)
        return pmf, pmf, None
    raise UsageError("one of --dist or --pair is required")


def _emit(args, text: str, out):
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_exact(args, out) -> int:
    m = args.measure
    dist, pmf, _ = _load(args, m)
    conv = Convention(args.convention)
    js = [args.j] if (m.indexed and args.j is not None) else (range(1, pmf.r + 1) if m.indexed else [None])
    rows = []
    for j in js:
        try:
            rows.append({"measure": m.value, "j": j, "value": evaluate(m, dist, j, conv), "status": "ok"})
        except ResidualAtTerminalError:
            rows.append({"measure": m.value, "j": j, "value": None, "status": "residual-at-terminal"})
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["measure", "j", "value", "status"])
        for r in rows:
            w.writerow([r["measure"], "" if r["j"] is None else r["j"],
                        "" if r["value"] is None else fmt(r["value"]), r["status"]])
        text = buf.getvalue()
    else:
        text = "".join(
            f"{r['measure']}" + ("" if r["j"] is None else f" j={r['j']}") + f": {fmt(r['value'])}\n"
            for r in rows
        )
    _emit(args, text, out)
    # a single explicitly requested inadmissible cell is a data error
    if args.j is not None and rows[0]["status"] != "ok":
        return EXIT_DATA
    return EXIT_OK


def cmd_estimate(args, out) -> int:
    m = args.measure
    conv = Convention(args.convention)
    truth_dist = q = None
    support = None
    if args.pair:
        truth_dist = fileio.load_pair(args.pair)
        q = truth_dist.q
        support = truth_dist.support
    elif args.dist:
        truth_dist = fileio.load_pmf(args.dist)
        support = truth_dist.support
    elif args.support:
        support = fileio.load_support(args.support)
    if m.paired and q is None:
        raise UsageError(f"{m.value} needs --pair (the experimenter distribution q)")
    emp = fileio.load_sample(args.sample, support)
    est = plugin_measure(emp, m, args.j, q, conv)
    report = {"measure": m.value, "j": args.j, "n": emp.n, "estimate": est}
    if truth_dist is not None:
        truth = evaluate(m, truth_dist, args.j, conv)
        pmf = truth_dist.p if isinstance(truth_dist, PairedPmfs) else truth_dist
        dev = deviation_stats(emp, pmf, args.j if m.indexed else None, conv)
        report.update({"truth": truth, "error": est - truth, "deviations": dev.__dict__})
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    elif args.format == "csv":
        keys = [k for k in report if k != "deviations"]
        text = ",".join(keys) + "\n" + ",".join(
            "" if report[k] is None else (fmt(report[k]) if isinstance(report[k], float) else str(report[k]))
            for k in keys) + "\n"
    else:
        lines = [f"{m.value}" + ("" if args.j is None else f" j={args.j}") + f" (n={emp.n}): {fmt(est)}"]
        if "truth" in report:
            lines.append(f"truth: {fmt(report['truth'])}  error: {fmt(report['error'])}")
            lines += [f"  {k}: {fmt(v)}" for k, v in report["deviations"].items()]
        text = "\n".join(lines) + "\n"
    _emit(args, text, out)
    return EXIT_OK


def cmd_asymptotics(args, out) -> int:
    m = args.measure
    _, pmf, q = _load(args, m)
    spec = sigma_sq(m, pmf, q, args.j, CovMode(args.cov_mode), Convention(args.convention))
    _emit(args, json.dumps(spec.to_dict(), indent=2) + "\n", out)
    return EXIT_OK


def cmd_mc(args, out) -> int:
    m = args.measure
    _, pmf, q = _load(args, m)
    try:
        study = McStudy(pmf, m, args.n, args.reps, args.seed, j=args.j, q=q,
                        cov_mode=CovMode(args.cov_mode), conv=Convention(args.convention))
    except (TooFewDrawsError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    report = run_study(study)
    if args.format == "csv":
        _emit(args, report.draws_csv(), out)
        if args.out:
            out.write(report.summary_json())
    else:
        _emit(args, report.summary_json(), out)
    if args.assert_ks and report.ks_stat > report.ks_critical_95:
        return EXIT_STAT
    return EXIT_OK


def cmd_trace(args, out) -> int:
    m = args.measure
    _, pmf, q = _load(args, m)
    try:
        trace = run_trace(pmf, m, args.grid, args.seed, args.j, q, Convention(args.convention))
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = json.dumps({"measure": m.value, "j": args.j, "truth": trace.truth,
                           "n_grid": trace.n_grid, "estimates": trace.estimates}, indent=2) + "\n"
    else:
        text = trace.to_csv()
    _emit(args, text, out)
    return EXIT_OK


def cmd_tables(args, out) -> int:
    cells = compute_tables(Convention(args.convention))
    if args.format == "json":
        text = json.dumps([c.to_dict() for c in cells], indent=2) + "\n"
    else:
        lines = []
        current = None
        for c in cells:
            if c.table != current:
                current = c.table
                lines.append(f"== {c.table} ==")
            label = c.measure + ("" if c.j is None else f"(x_{c.j})")
            line = f"{label:<28} paper={fmt(c.paper):>12} computed={fmt(c.computed):>14}  {c.status}"
            if c.note and c.status != "inadmissible":
                line += f"  [{c.note}]"
            lines.append(line)
        bad = sum(c.counts_as_failure for c in cells)
        lines.append(f"{len(cells) - bad}/{len(cells)} cells ok; {bad} mismatch(es)")
        text = "\n".join(lines) + "\n"
    _emit(args, text, out)
    return EXIT_OK if all_match(cells) else EXIT_GOLDEN


COMMANDS = {"exact": cmd_exact, "estimate": cmd_estimate, "asymptotics": cmd_asymptotics,
            "mc": cmd_mc, "trace": cmd_trace, "tables": cmd_tables}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"lifeinfo: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, EstimationError) as exc:
        print(f"lifeinfo: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
