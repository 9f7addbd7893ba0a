"""Command-line front end.

Subcommands::

    photonbounds report  --nbar 0.2 --eta 0.9
    photonbounds sweep   --vary nbar --eta 0.4 --from 0 --to 2 --steps 201
    photonbounds regions --resolution 40
    photonbounds verify  --seed 42

Exit codes: 0 success, 1 verification failure, 2 bad arguments or parameter
domain, 3 output I/O failure.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from .bounds import BoundReport, report
from .models import MaxMode
from .oracle import VerifyConfig, run_all

__all__ = ["main", "build_parser", "SweepSpec", "CSV_HEADER", "csv_row", "fmt"]

CSV_COLUMNS = (
    "nbar", "eta", "p", "S", "M_delta", "M_delta_tilde",
    "violates_S", "violates_M_delta", "violates_M_delta_tilde", "m_delta_mode",
)
CSV_HEADER = ",".join(CSV_COLUMNS)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """12 significant digits, shortest form."""
    return format(float(x), ".12g")


def csv_row(r: BoundReport) -> str:
    return ",".join([
        fmt(r.nbar), fmt(r.eta), fmt(r.p), fmt(r.s_bound),
        fmt(r.m_delta), fmt(r.m_delta_tilde),
        str(int(r.violates_s)), str(int(r.violates_m_delta)),
        str(int(r.violates_m_delta_tilde)), r.m_delta_mode.value,
    ])


def _table(r: BoundReport) -> str:
    rows = [
        ("nbar", fmt(r.nbar), ""),
        ("eta", fmt(r.eta), ""),
        ("p", fmt(r.p), ""),
        ("S", fmt(r.s_bound), "VIOLATED" if r.violates_s else "holds"),
        (f"M_delta ({r.m_delta_mode.value})", fmt(r.m_delta),
         "VIOLATED" if r.violates_m_delta else "holds"),
        ("M_delta_tilde", fmt(r.m_delta_tilde),
         "VIOLATED" if r.violates_m_delta_tilde else "holds"),
    ]
    width = max(len(name) for name, _, _ in rows)
    return "\n".join(f"{name:<{width}}  {val:<18}  {flag}".rstrip() for name, val, flag in rows)


def _json_line(r: BoundReport) -> str:
    d = r.as_dict()
    return json.dumps({k: (float(fmt(v)) if isinstance(v, float) else v) for k, v in d.items()})


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional sweep: vary ``nbar`` at fixed ``eta`` or the reverse."""

    vary: str
    fixed_value: float
    start: float
    stop: float
    steps: int
    m_delta_mode: MaxMode = MaxMode.PAPER

    def __post_init__(self):
        if self.vary not in ("nbar", "eta"):
            raise UsageError(f"--vary must be nbar or eta, got {self.vary!r}")
        if self.steps < 2:
            raise UsageError("--steps must be >= 2")
        if not self.start < self.stop:
            raise UsageError("--from must be smaller than --to")
        if self.vary == "eta" and self.start <= 0:
            raise UsageError("eta sweep must start above 0: eta must lie in (0, 1]")

    def points(self):
        axis = np.linspace(self.start, self.stop, self.steps)
        if self.vary == "nbar":
            return [(float(x), self.fixed_value) for x in axis]
        return [(self.fixed_value, float(x)) for x in axis]


def _reports(points, mode):
    try:
        return [report(nbar, eta, mode) for nbar, eta in points]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- config file ---------------------------------------------------------------


def _read_config(path):
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    entries = {}
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        entries[key.replace("-", "_")] = value
    return entries


def _apply_config(sub, args, argv_sub):
    """Fill options not given on the command line from ``--config``."""
    entries = _read_config(args.config)
    known = {a.dest: a for a in sub._actions if a.dest not in ("help", "config")}
    unknown = sorted(set(entries) - set(known))
    if unknown:
        raise UsageError(f"unknown config key(s): {', '.join(unknown)}")
    sub.set_defaults(**entries)
    # argparse converts string defaults through type=, so reparsing is enough
    new = sub.parse_args(argv_sub)
    for dest, action in known.items():
        value = getattr(new, dest)
        if action.choices is not None and value is not None and value not in action.choices:
            raise UsageError(f"config {dest}: invalid choice {value!r}")
    return new


# -- commands -------------------------------------------------------------------


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def cmd_report(args, out):
    _require(args, "nbar", "eta")
    (r,) = _reports([(args.nbar, args.eta)], MaxMode(args.m_delta_mode))
    if args.format == "table":
        out.write(_table(r) + "\n")
    elif args.format == "csv":
        out.write(CSV_HEADER + "\n" + csv_row(r) + "\n")
    else:
        out.write(_json_line(r) + "\n")
    return EXIT_OK


def cmd_sweep(args, out):
    _require(args, "vary")
    if args.vary == "nbar":
        fixed = args.eta
        start = 0.0 if args.start is None else args.start
        stop = 2.0 if args.stop is None else args.stop
        steps = 201 if args.steps is None else args.steps
    else:
        fixed = args.nbar
        start = 0.05 if args.start is None else args.start
        stop = 1.0 if args.stop is None else args.stop
        steps = 96 if args.steps is None else args.steps
    if fixed is None:
        other = "eta" if args.vary == "nbar" else "nbar"
        raise UsageError(f"sweep over {args.vary} needs --{other}")
    spec = SweepSpec(args.vary, fixed, start, stop, steps, MaxMode(args.m_delta_mode))
    rows = _reports(spec.points(), spec.m_delta_mode)
    out.write(CSV_HEADER + "\n")
    out.writelines(csv_row(r) + "\n" for r in rows)
    return EXIT_OK


def cmd_regions(args, out):
    if not (args.nbar_from < args.nbar_to and args.eta_from < args.eta_to):
        raise UsageError("ranges need from < to")
    if args.eta_from <= 0:
        raise UsageError("--eta-from must be > 0: eta must lie in (0, 1]")
    if args.resolution < 2:
        raise UsageError("--resolution must be >= 2")
    nbars = np.linspace(args.nbar_from, args.nbar_to, args.resolution)
    etas = np.linspace(args.eta_from, args.eta_to, args.resolution)
    points = [(float(n), float(e)) for n in nbars for e in etas]
    rows = _reports(points, MaxMode(args.m_delta_mode))
    out.write(CSV_HEADER + ",violation_class\n")
    out.writelines(f"{csv_row(r)},{r.violation_class}\n" for r in rows)
    return EXIT_OK


def cmd_verify(args, out):
    try:
        cfg = VerifyConfig(tail_tol=args.tail_tol, match_tol=args.tol, rng_seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = run_all(cfg)
    if args.format == "lines":
        for c in rep.checks:
            out.write(f"check={c.name} max_error={c.max_abs_error:.6e} "
                      f"pass={int(c.passed)}\n")
        out.write(f"overall={int(rep.overall)} seed={rep.seed}\n")
    else:
        width = max(len(c.name) for c in rep.checks)
        out.write(f"{'check':<{width}}  {'max error':>12}  result  detail\n")
        for c in rep.checks:
            result = "PASS" if c.passed else "FAIL"
            out.write(f"{c.name:<{width}}  {c.max_abs_error:12.3e}  {result:<6}  {c.detail}".rstrip() + "\n")
        for note in rep.notes:
            out.write(f"note: {note}\n")
        out.write(f"overall: {'PASS' if rep.overall else 'FAIL'} (seed {rep.seed}, "
                  f"match tol {cfg.match_tol:g}, tail tol {cfg.tail_tol:g})\n")
    if not rep.overall:
        names = ", ".join(f"{c.name} ({c.max_abs_error:.3e})" for c in rep.failures())
        print(f"verification failed: {names}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _common(p):
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--config", default=None, help="key=value file; flags take precedence")


def _mode(p):
    p.add_argument("--m-delta-mode", choices=["paper", "true"], default="paper",
                   help="maximum used for M_delta (default: paper)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="photonbounds",
        description="Classical bounds on single-photon clicks from photon-added thermal light.",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    parser.set_defaults(_subparsers=subs.choices)

    p = subs.add_parser("report", help="p and the three bounds at one point")
    p.add_argument("--nbar", type=float, default=None)
    p.add_argument("--eta", type=float, default=None)
    p.add_argument("--format", choices=["table", "csv", "json-lines"], default="table")
    _mode(p)
    _common(p)
    p.set_defaults(func=cmd_report)

    p = subs.add_parser("sweep", help="one-dimensional CSV sweep")
    p.add_argument("--vary", choices=["nbar", "eta"], default=None)
    p.add_argument("--from", dest="start", type=float, default=None)
    p.add_argument("--to", dest="stop", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--nbar", type=float, default=None, help="fixed nbar for an eta sweep")
    p.add_argument("--eta", type=float, default=None, help="fixed eta for an nbar sweep")
    _mode(p)
    _common(p)
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("regions", help="2-D grid of violation classes")
    p.add_argument("--nbar-from", type=float, default=0.0)
    p.add_argument("--nbar-to", type=float, default=3.0)
    p.add_argument("--eta-from", type=float, default=0.05)
    p.add_argument("--eta-to", type=float, default=1.0)
    p.add_argument("--resolution", type=int, default=20)
    _mode(p)
    _common(p)
    p.set_defaults(func=cmd_regions)

    p = subs.add_parser("verify", help="cross-check closed forms against brute force")
    p.add_argument("--tol", type=float, default=1e-9, help="match tolerance")
    p.add_argument("--tail-tol", type=float, default=1e-12, help="Fock truncation tolerance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["table", "lines"], default="table")
    _common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config:
            sub = args._subparsers[args.command]
            args = _apply_config(sub, args, argv[argv.index(args.command) + 1:])
        buf = io.StringIO()
        code = args.func(args, buf)
    except UsageError as exc:
        print(f"photonbounds: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.out is None:
            sys.stdout.write(buf.getvalue())
            sys.stdout.flush()
        else:
            with open(args.out, "w", newline="\n") as fh:
                fh.write(buf.getvalue())
    except OSError as exc:
        print(f"photonbounds: cannot write {args.out or 'stdout'}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
