"""Command-line front end: sweeps to CSV, critical frequency, LoS point queries.

Exit codes: 0 on success, 2 for config errors, 3 for runtime domain errors,
1 for I/O failures.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .diffraction import fresnel_radius, wavelength
from .geometry import (
    Point2D,
    SceneGeometry,
    bs_position,
    intrusion_distance,
    path_decomposition,
    window_edges,
)
from .los import LOS_CLEARANCE_RATIO, critical_frequency, is_los
from .sweep import ConfigError, SweepRuntimeError, emit_csv, sweep_with_overrides


def _add_scene_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--window-m", type=float, default=2.0)
    parser.add_argument("--room-m", type=float, default=20.0)
    parser.add_argument("--bs-distance-m", type=float, default=5.0)
    parser.add_argument("--theta-deg", type=float, default=0.0)
    parser.add_argument("--frequency-hz", type=float, default=28e9)


def _cmd_sweep(args: argparse.Namespace) -> int:
    try:
        text = Path(args.config).read_text()
    except OSError as err:
        raise ConfigError(f"cannot read config: {err}") from err
    record = sweep_with_overrides(text, seed=args.seed, oracle_n=args.oracle_n)
    if args.out is None:
        emit_csv(record, sys.stdout)
        return 0
    try:
        with open(args.out, "w") as stream:
            emit_csv(record, stream)
    except OSError as err:
        print(f"error: cannot write output: {err}", file=sys.stderr)
        return 1
    return 0


def _cmd_critical_freq(args: argparse.Namespace) -> int:
    try:
        fc = critical_frequency(args.window_m, args.bs_distance_m, args.room_m)
    except ValueError as err:
        raise ConfigError(str(err)) from err
    print(fc)
    return 0


def _cmd_los_point(args: argparse.Namespace) -> int:
    try:
        scene = SceneGeometry(
            room_side=args.room_m,
            window_width=args.window_m,
            bs_distance=args.bs_distance_m,
            bs_angle=math.radians(args.theta_deg),
        )
    except ValueError as err:
        raise ConfigError(str(err)) from err
    ms = Point2D(args.ms_x, args.ms_y)
    verdict = is_los(scene, ms, args.frequency_hz)
    bs = bs_position(scene)
    decomposition = path_decomposition(bs, ms)
    rd = fresnel_radius(decomposition.d1, decomposition.d2, wavelength(args.frequency_hz))
    lower, upper = window_edges(scene)
    print(f"los={'true' if verdict else 'false'}")
    print(f"d1={decomposition.d1}")
    print(f"d2={decomposition.d2}")
    print(f"crossing_y={decomposition.crossing.y}")
    print(f"r_d={rd}")
    print(f"clearance_threshold={LOS_CLEARANCE_RATIO * rd}")
    print(f"clearance_lower={intrusion_distance(bs, ms, lower)}")
    print(f"clearance_upper={intrusion_distance(bs, ms, upper)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="o2i-los",
        description="LoS and coverage probability through a window, closed form vs oracle",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="run a parameter sweep from a config file")
    sweep.add_argument("--config", required=True)
    sweep.add_argument("--out", default=None)
    sweep.add_argument("--seed", type=int, default=None)
    sweep.add_argument("--oracle-n", type=int, default=None)
    sweep.set_defaults(func=_cmd_sweep)

    crit = sub.add_parser("critical-freq", help="print the critical frequency in Hz")
    crit.add_argument("--window-m", type=float, required=True)
    crit.add_argument("--bs-distance-m", type=float, required=True)
    crit.add_argument("--room-m", type=float, required=True)
    crit.set_defaults(func=_cmd_critical_freq)

    point = sub.add_parser("los-point", help="LoS verdict and clearances for one receiver")
    point.add_argument("--ms-x", type=float, required=True)
    point.add_argument("--ms-y", type=float, required=True)
    _add_scene_flags(point)
    point.set_defaults(func=_cmd_los_point)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except SweepRuntimeError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
