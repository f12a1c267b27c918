"""``coercive-kit`` command line: run, list and sweep catalog scenarios."""

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

import numpy as np

from .exceptions import CoerciveKitError
from .inequalities import CATALOG, HYPOTHESIS_FAILED, VERIFIED, VIOLATED, list_scenarios, run, sweep
from .space import BoundaryRegion, DomainBox

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATED = 2
EXIT_HYPOTHESIS = 3
VERDICT_EXIT = {VERIFIED: EXIT_OK, VIOLATED: EXIT_VIOLATED, HYPOTHESIS_FAILED: EXIT_HYPOTHESIS}

REPORT_FIELDS = (
    "scenario",
    "parameters",
    "degree",
    "family",
    "constants",
    "residual",
    "alpha",
    "beta",
    "gamma_sharp",
    "bound",
    "kernel_dim",
    "subspace_dim",
    "verdict",
    "notes",
)
CSV_FIELDS = ("scenario", "verdict", "constant", "residual", "gamma_sharp", "bound", "alpha", "beta", "kernel_dim")


class UsageError(Exception):
    """Bad command-line input; the message names the offending flag."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- serialization ---------------------------------------------------------


def format_number(x):
    """17 significant digits; non-finite values become ``null``."""
    if not math.isfinite(x):
        return "null"
    text = format(x, ".17g")
    return text if any(c in text for c in ".en") else text + ".0"


def _plain(obj):
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, tuple):
        return list(obj)
    return obj


def to_json(obj, indent=2, level=0):
    """JSON text with floats written at full precision."""
    obj = _plain(obj)
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_number(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {to_json(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(isinstance(_plain(v), (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(to_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + to_json(v, indent, level + 1) for v in obj) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(x):
    x = _plain(x)
    if x is None:
        return ""
    if isinstance(x, float):
        return format_number(x) if math.isfinite(x) else ""
    return str(x)


def _timestamp():
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()


def result_record(scenario_id, result):
    data = result.to_dict()
    data["scenario"] = scenario_id
    return {k: data.get(k) for k in REPORT_FIELDS}


def render_run(records, results, fmt):
    if fmt == "json":
        body = {"generated": _timestamp()}
        if len(records) == 1:
            body.update(records[0])
        else:
            body["results"] = records
        return to_json(body) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for rec, res in zip(records, results):
        row = dict(rec, constant=res.constant)
        w.writerow([_csv_cell(row[k]) for k in CSV_FIELDS])
    return buf.getvalue()


def render_sweep(scenario_id, rows, fmt):
    if fmt == "json":
        return to_json({"generated": _timestamp(), "scenario": scenario_id, "rows": rows}) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("degree", "constant", "residual"))
    for r in rows:
        w.writerow([_csv_cell(r["degree"]), _csv_cell(r["constant"]), _csv_cell(r["residual"])])
    return buf.getvalue()


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- argument parsing --------------------------------------------------------


def parse_points(text):
    """``"x1,y1;x2,y2"`` -> ``((x1, y1), (x2, y2))``."""
    try:
        return tuple(
            tuple(float(c) for c in chunk.split(",")) for chunk in text.split(";") if chunk.strip()
        )
    except ValueError:
        raise UsageError(f"--points: cannot parse {text!r}") from None


def parse_degrees(text):
    try:
        degrees = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"--degrees: cannot parse {text!r}") from None
    if not degrees:
        raise UsageError("--degrees: empty list")
    if any(b <= a for a, b in zip(degrees, degrees[1:])):
        raise UsageError(f"--degrees: must be strictly ascending, got {degrees}")
    return degrees


def _overrides(args, scenario_id):
    entry = CATALOG[scenario_id]
    box = None
    if args.box is not None:
        try:
            DomainBox.parse(args.box)
        except ValueError as exc:
            raise UsageError(f"--box: {exc}") from None
        box = args.box
    d = DomainBox.parse(box or entry.box).d
    region = None
    if args.gamma_region is not None:
        try:
            region = BoundaryRegion.parse(args.gamma_region, d)
        except ValueError as exc:
            raise UsageError(f"--gamma-region: {exc}") from None
    points = parse_points(args.points) if args.points is not None else None
    return {"box": box, "region": region, "points": points}


def _check_common(args):
    if args.tol <= 0:
        raise UsageError("--tol: must be positive")
    if getattr(args, "jobs", 1) < 1:
        raise UsageError("--jobs: must be at least 1")


def _resolve_ids(text):
    if text == "all":
        return sorted(CATALOG)
    if text not in CATALOG:
        raise UsageError(f"--scenario: unknown scenario {text!r}")
    return [text]


def _run_one(job):
    scenario_id, degree, overrides, tol = job
    return run(scenario_id, degree=degree, tol=tol, **overrides)


def cmd_run(args):
    _check_common(args)
    ids = _resolve_ids(args.scenario)
    if args.degree is not None and args.degree < 0:
        raise UsageError("--degree: must be nonnegative")
    jobs = [(sid, args.degree, _overrides(args, sid), args.tol) for sid in ids]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    records = [result_record(sid, res) for sid, res in zip(ids, results)]
    _emit(render_run(records, results, args.format), args.output)
    for sid, res in zip(ids, results):
        if res.verdict != VERIFIED:
            print(f"{sid}: {res.verdict}: {'; '.join(res.notes)}", file=sys.stderr)
    return max(VERDICT_EXIT[r.verdict] for r in results)


def cmd_list(args):
    entries = list_scenarios(args.filter)
    width = max((len(e.id) for e in entries), default=0)
    for e in entries:
        print(f"{e.id:<{width}}  {e.kind.name:<22}  {e.description}")
    kinds = sorted({e.kind.name for e in entries})
    print(f"{len(entries)} scenarios, {len(kinds)} scenario kinds")
    return EXIT_OK


def cmd_sweep(args):
    _check_common(args)
    (sid,) = _resolve_ids(args.scenario)
    degrees = parse_degrees(args.degrees)
    rows = sweep(sid, degrees, tol=args.tol, **_overrides(args, sid))
    _emit(render_sweep(sid, rows, args.format), args.output)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="coercive-kit", description="Numerical checks of coercivity and Poincare-type inequalities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, default_format):
        p.add_argument("--scenario", required=True, help="catalog id (see `list`)")
        p.add_argument("--box", help="lo:hi[,lo:hi...]")
        p.add_argument("--gamma-region", help="full | face:<id> | face:<id>:<fraction>")
        p.add_argument("--points", help="x1[,y1][;x2[,y2]...]")
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--format", choices=("json", "csv"), default=default_format)
        p.add_argument("--output", help="write the report here instead of stdout")

    p_run = sub.add_parser("run", help="run one scenario or `all`")
    common(p_run, "json")
    p_run.add_argument("--degree", type=int, help="basis degree (Legendre) or mode cutoff (Fourier)")
    p_run.add_argument("--jobs", type=int, default=1)
    p_run.set_defaults(func=cmd_run)

    p_list = sub.add_parser("list", help="list catalog scenarios")
    p_list.add_argument("--filter", help="substring of the scenario id")
    p_list.set_defaults(func=cmd_list)

    p_sweep = sub.add_parser("sweep", help="constant versus degree")
    common(p_sweep, "csv")
    p_sweep.add_argument("--degrees", required=True, help="ascending list, e.g. 4,6,8")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"coercive-kit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CoerciveKitError, ValueError, KeyError) as exc:
        print(f"coercive-kit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
