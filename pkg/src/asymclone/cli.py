"""Command-line front end.

Subcommands::

    asymclone thresholds
    asymclone report --p 0.8 --alpha-sq 0.5 [--mode two-side]
    asymclone sweep [--mode ...] [--p-min ...] ... [--format csv|json] [--out PATH]
    asymclone verify

Exit codes: 0 success, 1 verification/threshold/output failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import analysis, verify
from .numerics import ConsistencyError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SWEEP_COLUMNS = (
    "mode",
    "p",
    "alpha_sq",
    "kept_min_pt_eig",
    "kept_negativity",
    "kept_separable",
    "other_min_pt_eig",
    "other_negativity",
    "other_separable",
    "fidelity",
    "s_factor",
    "goal_met",
)


def fmt(x: float) -> str:
    """12 significant digits; lowercase scientific notation below 1e-4 in magnitude."""
    x = float(x)
    if x == 0.0:
        return "0.0"
    if abs(x) < 1e-4:
        return f"{x:.11e}"
    s = f"{x:.12g}"
    return s if any(c in s for c in ".en") else s + ".0"


@dataclass(frozen=True)
class RunConfig:
    mode: str = "two-side"
    p_min: float = 0.0
    p_max: float = 1.0
    p_steps: int = 101
    alpha_sq_min: float = 0.0
    alpha_sq_max: float = 1.0
    alpha_sq_steps: int = 21
    output_format: str = "csv"
    output_path: str = "-"
    workers: int = 1

    def problems(self) -> list[str]:
        out = []
        if self.mode not in analysis.MODES:
            out.append(f"unknown mode {self.mode!r}")
        if not 0.0 <= self.p_min <= self.p_max <= 1.0:
            out.append("need 0 <= p-min <= p-max <= 1")
        if not 0.0 <= self.alpha_sq_min <= self.alpha_sq_max <= 1.0:
            out.append("need 0 <= alpha-sq-min <= alpha-sq-max <= 1")
        if self.p_steps < 1 or self.alpha_sq_steps < 1:
            out.append("step counts must be >= 1")
        if self.output_format not in ("csv", "json"):
            out.append(f"unknown format {self.output_format!r}")
        return out

    def p_grid(self) -> np.ndarray:
        return np.linspace(self.p_min, self.p_max, self.p_steps)

    def alpha_grid(self) -> np.ndarray:
        return np.linspace(self.alpha_sq_min, self.alpha_sq_max, self.alpha_sq_steps)


def report_row(r: analysis.RegimeReport) -> dict:
    """Flat record for one sweep cell. ``s_factor`` is the cloned qubit's shrink factor."""
    return {
        "mode": r.mode,
        "p": r.p,
        "alpha_sq": r.alpha_sq,
        "kept_min_pt_eig": r.kept_verdict.min_pt_eigenvalue,
        "kept_negativity": r.kept_verdict.negativity,
        "kept_separable": r.kept_verdict.separable,
        "other_min_pt_eig": r.other_verdict.min_pt_eigenvalue,
        "other_negativity": r.other_verdict.negativity,
        "other_separable": r.other_verdict.separable,
        "fidelity": r.fidelity,
        "s_factor": r.scaling.s_b2,
        "goal_met": r.goal_met,
    }


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt(v)
    return str(v)


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for row in rows:
        w.writerow([_text(row[c]) for c in SWEEP_COLUMNS])
    return buf.getvalue()


def render_json(rows: list[dict]) -> str:
    def clean(v):
        return float(fmt(v)) if isinstance(v, float) else v

    records = [{c: clean(row[c]) for c in SWEEP_COLUMNS} for row in rows]
    return json.dumps(records, indent=1) + "\n"


def run_sweep(config: RunConfig) -> str:
    reports = analysis.sweep(
        config.mode, config.p_grid(), config.alpha_grid(), workers=config.workers
    )
    rows = [report_row(r) for r in reports]
    return render_csv(rows) if config.output_format == "csv" else render_json(rows)


def render_report(r: analysis.RegimeReport) -> str:
    kv, ov = r.kept_verdict, r.other_verdict

    def verdict(v):
        tag = "separable" if v.separable else "entangled"
        return f"{tag:9s}  min PT eig {fmt(v.min_pt_eigenvalue):>16s}  negativity {fmt(v.negativity)}"

    return "\n".join(
        [
            f"mode        {r.mode}",
            f"p           {fmt(r.p)}",
            f"alpha^2     {fmt(r.alpha_sq)}",
            f"copy branch {verdict(kv)}",
            f"other branch {verdict(ov)}",
            f"fidelity    {fmt(r.fidelity)}",
            f"s           {fmt(r.scaling.s_b1)}, {fmt(r.scaling.s_b2)}",
            f"goal_met    {_text(r.goal_met)}",
        ]
    )


def cmd_thresholds(args) -> int:
    try:
        found = {
            "one-side": (analysis.find_threshold_one_side(), analysis.ONE_SIDE_THRESHOLD_EXACT),
            "two-side": (analysis.find_threshold_two_side(), analysis.TWO_SIDE_THRESHOLD_EXACT),
        }
    except ConsistencyError as exc:
        print(f"threshold search failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    ok = True
    for mode, (value, exact) in found.items():
        dev = abs(value - exact)
        ok &= dev < verify.THRESHOLD_TOL
        print(f"{mode}: threshold {value:.12f}  closed form {exact:.12f}  |deviation| {dev:.3e}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_report(args) -> int:
    print(render_report(analysis.classify_regime(args.p, args.alpha_sq, args.mode)))
    return EXIT_OK


def cmd_sweep(args) -> int:
    text = run_sweep(args.config)
    if args.config.output_path == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.config.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.config.output_path}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_all()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:45s} max residual {r.residual:.3e} (tol {r.tol:.0e})")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asymclone",
        description="Asymmetric cloning machine: broadcast and disentangle alpha|00> + beta|11>.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("thresholds", help="bisect both cloner thresholds")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("report", help="classify a single (p, alpha^2) point")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--alpha-sq", type=float, required=True)
    p.add_argument("--mode", choices=analysis.MODES, default="two-side")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("sweep", help="tabulate a (p, alpha^2) grid")
    p.add_argument("--mode", choices=analysis.MODES, default="two-side")
    p.add_argument("--p-min", type=float, default=0.0)
    p.add_argument("--p-max", type=float, default=1.0)
    p.add_argument("--p-steps", type=int, default=101)
    p.add_argument("--alpha-sq-min", type=float, default=0.0)
    p.add_argument("--alpha-sq-max", type=float, default=1.0)
    p.add_argument("--alpha-sq-steps", type=int, default=21)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-", help="output file, '-' for stdout")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the analytic-vs-simulation self checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "report":
        if not 0.0 <= args.p <= 1.0 or not 0.0 <= args.alpha_sq <= 1.0:
            parser.error("--p and --alpha-sq must lie in [0, 1]")
    elif args.command == "sweep":
        args.config = RunConfig(
            mode=args.mode,
            p_min=args.p_min,
            p_max=args.p_max,
            p_steps=args.p_steps,
            alpha_sq_min=args.alpha_sq_min,
            alpha_sq_max=args.alpha_sq_max,
            alpha_sq_steps=args.alpha_sq_steps,
            output_format=args.format,
            output_path=args.out,
            workers=args.workers,
        )
        problems = args.config.problems()
        if problems:
            parser.error("; ".join(problems))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
