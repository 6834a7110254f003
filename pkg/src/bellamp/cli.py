"""Command-line front end: CSV sweeps, verification, and Monte Carlo runs.

Subcommands: ``signal-sweep``, ``sensitivity-curve``, ``verify``,
``estimate``, ``probe-info``.  All angles are radians (no degree option:
silent unit bugs are worse than typing 3.14159).  Commands are
deterministic given their flags and seed; timings go to stderr so stdout
stays byte-stable.

CSV output is UTF-8, comma-delimited, ``.`` decimal point, with ``#``
comment lines carrying units and parameters.  Exit codes: 0 success,
1 physics/invariant failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from typing import Sequence

import numpy as np

from . import verify
from .errors import DomainError
from .estimation import run_experiment
from .metrology import (
    ProbeSpec,
    crb_closed,
    delta_phi_parity_closed,
    heisenberg_limit,
    metrology_report,
    nbar_closed,
    r_from_nbar,
    shot_noise_limit,
    signal_bruteforce_sweep,
    signal_closed,
    signal_branch,
)

# Brute-force simulation refuses above this mean photon number unless
# --allow-long is passed (grids grow quadratically with nbar).
BRUTEFORCE_NBAR_CEILING = 20.0


def _shared_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--epsilon-tail",
        type=float,
        default=1e-10,
        help="truncation tail tolerance for brute-force simulation (default 1e-10)",
    )
    parser.add_argument(
        "--output",
        type=str,
        default=None,
        help="output file path (default: CSV to stdout, reports to stdout)",
    )
    parser.add_argument(
        "--allow-long",
        action="store_true",
        help="permit long-running brute-force simulation above the nbar ceiling",
    )


def _squeezing_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=float, help="squeezing strength r >= 0")
    group.add_argument(
        "--nbar", type=float, help="probe mean photon number (>= 1); alternative to --r"
    )


def _resolve_r(parser: argparse.ArgumentParser, args: argparse.Namespace) -> float:
    try:
        if args.nbar is not None:
            return r_from_nbar(args.nbar)
        if args.r < 0:
            raise DomainError(f"squeezing strength must be >= 0, got {args.r}")
        return args.r
    except DomainError as exc:
        parser.error(str(exc))


def _open_output(path: str | None):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _write_csv(path: str | None, comments: list[str], header: list[str], rows) -> None:
    stream, owned = _open_output(path)
    try:
        for comment in comments:
            stream.write(f"# {comment}\n")
        writer = csv.writer(stream)
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [value if isinstance(value, int) else repr(float(value)) for value in row]
            )
    finally:
        if owned:
            stream.close()


def cmd_signal_sweep(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.steps < 2:
        parser.error(f"--steps must be >= 2, got {args.steps}")
    if not args.phi_max > args.phi_min:
        parser.error(f"phi range is empty: [{args.phi_min}, {args.phi_max}]")
    r = _resolve_r(parser, args)
    nbar = nbar_closed(r)
    if args.mode in ("bruteforce", "both") and nbar > BRUTEFORCE_NBAR_CEILING:
        if not args.allow_long:
            parser.error(
                f"brute-force simulation at nbar={nbar:.3g} exceeds the ceiling "
                f"{BRUTEFORCE_NBAR_CEILING:.3g}; pass --allow-long to run anyway"
            )

    phis = np.linspace(args.phi_min, args.phi_max, args.steps)
    comments = [
        "signal sweep: parity signal S(r, phi) versus phi",
        f"r = {r!r} (nbar = {nbar!r}); angles in radians, signal dimensionless",
        f"mode = {args.mode}; epsilon_tail = {args.epsilon_tail!r}",
    ]
    closed = np.array([signal_closed(r, phi) for phi in phis])
    if args.mode == "closed":
        _write_csv(args.output, comments, ["phi", "signal_closed"], zip(phis, closed))
        return 0

    started = time.perf_counter()
    sim = signal_bruteforce_sweep(r, phis, ProbeSpec(r=r, epsilon_tail=args.epsilon_tail))
    print(
        f"brute-force sweep of {args.steps} points took {time.perf_counter() - started:.1f} s",
        file=sys.stderr,
    )
    if args.mode == "bruteforce":
        _write_csv(args.output, comments, ["phi", "signal_bruteforce"], zip(phis, sim))
        return 0
    diff = np.abs(closed - sim)
    _write_csv(
        args.output,
        comments,
        ["phi", "signal_closed", "signal_bruteforce", "abs_diff"],
        zip(phis, closed, sim, diff),
    )
    print(f"max |signal_closed - signal_bruteforce| = {diff.max():.6e}")
    return 0


def cmd_sensitivity_curve(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.points < 2:
        parser.error(f"--points must be >= 2, got {args.points}")
    if args.nbar_min < 1.0:
        parser.error(f"--nbar-min must be >= 1, got {args.nbar_min}")
    if not args.nbar_max > args.nbar_min:
        parser.error(f"nbar range is empty: [{args.nbar_min}, {args.nbar_max}]")
    if args.linear:
        nbars = np.linspace(args.nbar_min, args.nbar_max, args.points)
    else:
        nbars = np.logspace(
            math.log10(args.nbar_min), math.log10(args.nbar_max), args.points
        )
    rows = [
        (
            nbar,
            crb_closed(nbar),
            delta_phi_parity_closed(nbar),
            shot_noise_limit(nbar),
            heisenberg_limit(nbar),
        )
        for nbar in nbars
    ]
    comments = [
        "phase sensitivity versus mean photon number; all columns in radians",
        "crb: quantum Cramer-Rao bound; parity_delta_phi: parity readout at the "
        "operating point; shot_noise: 1/sqrt(nbar); heisenberg: 1/nbar",
        f"grid: {args.points} points in [{args.nbar_min!r}, {args.nbar_max!r}], "
        + ("linear" if args.linear else "log"),
    ]
    _write_csv(
        args.output,
        comments,
        ["nbar", "crb", "parity_delta_phi", "shot_noise", "heisenberg"],
        rows,
    )
    return 0


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    started = time.perf_counter()
    results = verify.run_checks(args.level)
    report = verify.format_report(results)
    print(f"verify {args.level} took {time.perf_counter() - started:.1f} s", file=sys.stderr)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as stream:
            stream.write(report + "\n")
    else:
        print(report)
    return 0 if all(res.passed for res in results) else 1


def cmd_estimate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    r = _resolve_r(parser, args)
    try:
        run = run_experiment(r, args.phi, args.shots, args.trials, args.seed)
    except DomainError as exc:
        parser.error(str(exc))
    ratio = run.empirical_rmse / run.predicted_rmse
    print(f"r = {r!r}  nbar = {nbar_closed(r)!r}  phi_true = {args.phi!r} rad")
    print(f"shots/trial = {args.shots}  trials = {args.trials}  seed = {args.seed}")
    print(f"empirical_rmse = {run.empirical_rmse!r} rad")
    print(
        f"predicted_rmse = {run.predicted_rmse!r} rad "
        "(single-shot sensitivity / sqrt(shots))"
    )
    print(f"ratio = {ratio!r}")
    if run.clamped_trials:
        print(f"clamped trials: {run.clamped_trials} (mean parity left the branch)")
    if args.output:
        _write_csv(
            args.output,
            [
                "per-trial phase estimates in radians",
                f"r = {r!r}; phi_true = {args.phi!r}; shots = {args.shots}; "
                f"trials = {args.trials}; seed = {args.seed}",
            ],
            ["trial", "phi_estimate"],
            ((i, est) for i, est in enumerate(run.estimates)),
        )
    return 0


def cmd_probe_info(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    r = _resolve_r(parser, args)
    try:
        report = metrology_report(ProbeSpec(r=r, epsilon_tail=args.epsilon_tail))
    except DomainError as exc:
        parser.error(str(exc))
    branch = signal_branch(r)
    lines = [
        f"r = {report.r!r}",
        f"nbar_closed = {report.nbar!r}",
        f"nbar_numeric = {report.nbar_numeric!r}",
        f"resolved_cutoff = {report.resolved_cutoff} photons per mode",
        f"tail_mass = {report.tail_mass!r}",
        f"qfi_variance = {report.qfi!r}",
        f"qfi_finite_difference = {report.qfi_finite_diff!r}",
        f"crb_delta_phi = {report.crb_delta_phi!r} rad",
        f"slope_at_origin = {report.slope_at_origin!r}",
        f"delta_phi_parity = {report.delta_phi_parity!r} rad (at the operating point)",
        f"inversion_branch = (-{branch.phi_max!r}, {branch.phi_max!r}) rad",
    ]
    text = "\n".join(lines)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as stream:
            stream.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellamp",
        description="Simulator and analysis toolkit for phase estimation with "
        "mode-squeezed path-entangled probes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser(
        "signal-sweep", help="parity signal versus phase, closed form and/or simulated"
    )
    _squeezing_flags(sweep)
    sweep.add_argument("--phi-min", type=float, default=-math.pi)
    sweep.add_argument("--phi-max", type=float, default=math.pi)
    sweep.add_argument("--steps", type=int, default=128, help="number of phi samples")
    sweep.add_argument(
        "--mode",
        choices=("closed", "bruteforce", "both"),
        default="closed",
        help="closed form, full state evolution, or both with their difference",
    )
    _shared_flags(sweep)
    sweep.set_defaults(func=cmd_signal_sweep)

    curve = sub.add_parser(
        "sensitivity-curve", help="phase-error bounds versus mean photon number"
    )
    curve.add_argument("--nbar-min", type=float, default=1.0)
    curve.add_argument("--nbar-max", type=float, default=1e4)
    curve.add_argument("--points", type=int, default=200)
    curve.add_argument(
        "--linear", action="store_true", help="linear nbar grid (default: log spacing)"
    )
    _shared_flags(curve)
    curve.set_defaults(func=cmd_sensitivity_curve)

    ver = sub.add_parser("verify", help="run the invariant verification suites")
    ver.add_argument("level", choices=verify.LEVELS, help="verification depth")
    _shared_flags(ver)
    ver.set_defaults(func=cmd_verify)

    est = sub.add_parser("estimate", help="Monte Carlo phase-estimation experiment")
    _squeezing_flags(est)
    est.add_argument("--phi", type=float, default=0.0, help="true phase in radians")
    est.add_argument("--shots", type=int, default=10_000, help="parity samples per trial")
    est.add_argument("--trials", type=int, default=200)
    est.add_argument("--seed", type=int, default=0, help="master RNG seed")
    _shared_flags(est)
    est.set_defaults(func=cmd_estimate)

    info = sub.add_parser("probe-info", help="figures of merit for one probe")
    _squeezing_flags(info)
    _shared_flags(info)
    info.set_defaults(func=cmd_probe_info)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
