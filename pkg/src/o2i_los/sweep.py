"""Parameter sweeps over the LoS, diffraction, and coverage calculators.

Configs are flat ``key=value`` documents: one assignment per line, ``#``
comments, case-sensitive keys with SI units suffixed in the key names.
Unset keys fall back to documented defaults.  Sweep output is CSV with a
``# key=value`` echo of the fully resolved config, so a result file can be
re-parsed into the SweepSpec that produced it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from typing import TextIO

from .coverage import FadingModel, LinkBudget, coverage_probability
from .diffraction import fresnel_radius, total_path_loss_db, wavelength
from .geometry import SceneGeometry
from .los import GridSpec, critical_frequency, p_los_closed, p_los_grid, p_los_optical


class ConfigError(Exception):
    """Invalid configuration document."""


class SweepRuntimeError(Exception):
    """Domain error while evaluating a sweep point."""


_NUMERIC_DEFAULTS = {
    "room_m": 20.0,
    "window_m": 2.0,
    "bs_distance_m": 5.0,
    "theta_deg": 0.0,
    "frequency_hz": 28e9,
    "ms_distance_m": 20.0,
    "tx_power_dbm": 30.0,
    "noise_dbm": -100.0,
    "snr_threshold_db": -5.0,
    "m_los": 10.0,
    "m_nlos": 1.0,
    "n_los": 1.2,
    "n_nlos": 2.9,
    "d1_m": 8.0,
    "d2_m": 20.0,
    "delta_over_rd": 1.0,
}
_RANGE_KEYS = ("start", "stop", "step")
_INT_KEYS = ("oracle_n", "seed")
_ALL_KEYS = (
    {"sweep", "outputs", *_RANGE_KEYS, *_INT_KEYS} | set(_NUMERIC_DEFAULTS)
)

SWEEPABLE = (
    "theta_deg",
    "frequency_hz",
    "window_m",
    "room_m",
    "bs_distance_m",
    "delta_over_rd",
)
OUTPUT_NAMES = (
    "p_los_closed",
    "p_los_grid",
    "p_los_optical",
    "path_loss_db",
    "p_cov",
    "critical_frequency_hz",
)
_SCENE_KEYS = ("room_m", "window_m", "bs_distance_m", "theta_deg")


@dataclass
class SweepSpec:
    """One swept parameter plus the fully resolved fixed values."""

    swept: str
    start: float
    stop: float
    step: float
    fixed: dict[str, float]
    outputs: tuple[str, ...] = ("p_los_closed",)
    oracle_n: int = 500
    seed: int = 0

    def __post_init__(self):
        if self.swept not in SWEEPABLE:
            raise ConfigError(f"cannot sweep '{self.swept}'")
        if not self.step > 0:
            raise ConfigError("step must be positive")
        if not self.start < self.stop:
            raise ConfigError("start must be less than stop")
        if self.swept in self.fixed:
            raise ConfigError(f"swept parameter '{self.swept}' must not also be fixed")
        for name in self.outputs:
            if name not in OUTPUT_NAMES:
                raise ConfigError(f"unknown output '{name}'")
        if self.oracle_n < 10:
            raise ConfigError("oracle_n must be at least 10")

    def values(self) -> list[float]:
        n = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + i * self.step for i in range(n)]


@dataclass
class RunRecord:
    spec: SweepSpec
    columns: tuple[str, ...]
    rows: list[tuple[float, ...]]
    version: str
    timestamp: str  # informational; never emitted, CSV bytes depend only on the SweepSpec
    seed: int = field(init=False)

    def __post_init__(self):
        self.seed = self.spec.seed


def _parse_float(key: str, value: str) -> float:
    try:
        out = float(value)
    except ValueError:
        raise ConfigError(f"invalid number for '{key}': {value!r}") from None
    if not math.isfinite(out):
        raise ConfigError(f"invalid number for '{key}': {value!r}")
    return out


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value, 10)
    except ValueError:
        raise ConfigError(f"'{key}' must be an integer, got {value!r}") from None


def _scene_from(values: dict[str, float]) -> SceneGeometry:
    return SceneGeometry(
        room_side=values["room_m"],
        window_width=values["window_m"],
        bs_distance=values["bs_distance_m"],
        bs_angle=math.radians(values["theta_deg"]),
    )


def parse_config(text: str) -> SweepSpec:
    """Parse and fully resolve a sweep config document."""
    raw: dict[str, str] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {line_no}: expected key=value, got {stripped!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _ALL_KEYS:
            raise ConfigError(f"unknown key '{key}'")
        if key in raw:
            raise ConfigError(f"duplicate key '{key}'")
        raw[key] = value

    swept = raw.get("sweep")
    if swept is not None and swept not in SWEEPABLE:
        raise ConfigError(f"cannot sweep '{swept}'")

    numeric = dict(_NUMERIC_DEFAULTS)
    for key in _NUMERIC_DEFAULTS:
        if key in raw:
            if key == swept:
                raise ConfigError(f"swept parameter '{key}' must not also be fixed")
            numeric[key] = _parse_float(key, raw[key])

    # Surface fixed-value invariant violations before complaining about a
    # missing sweep range; values of the swept parameter are checked per
    # point at run time instead.
    if swept not in _SCENE_KEYS:
        try:
            _scene_from(numeric)
        except ValueError as err:
            raise ConfigError(str(err)) from None
    try:
        FadingModel(
            m_los=numeric["m_los"],
            m_nlos=numeric["m_nlos"],
            n_los=numeric["n_los"],
            n_nlos=numeric["n_nlos"],
        )
        LinkBudget(
            # Placeholder frequency while sweeping it; the dBm fields are
            # what is being validated here.
            frequency=1.0 if swept == "frequency_hz" else numeric["frequency_hz"],
            tx_power_dbm=numeric["tx_power_dbm"],
            noise_floor_dbm=numeric["noise_dbm"],
            snr_threshold_db=numeric["snr_threshold_db"],
        )
    except ValueError as err:
        raise ConfigError(str(err)) from None

    if swept is None:
        raise ConfigError("missing key 'sweep'")
    for key in _RANGE_KEYS:
        if key not in raw:
            raise ConfigError(f"missing key '{key}'")

    outputs: tuple[str, ...] = ("p_los_closed",)
    if "outputs" in raw:
        outputs = tuple(part.strip() for part in raw["outputs"].split(",") if part.strip())

    fixed = {key: numeric[key] for key in _NUMERIC_DEFAULTS if key != swept}
    return SweepSpec(
        swept=swept,
        start=_parse_float("start", raw["start"]),
        stop=_parse_float("stop", raw["stop"]),
        step=_parse_float("step", raw["step"]),
        fixed=fixed,
        outputs=outputs,
        oracle_n=_parse_int("oracle_n", raw["oracle_n"]) if "oracle_n" in raw else 500,
        seed=_parse_int("seed", raw["seed"]) if "seed" in raw else 0,
    )


def _evaluate_output(name: str, values: dict[str, float], spec: SweepSpec) -> float:
    frequency = values["frequency_hz"]
    if name == "p_los_closed":
        return p_los_closed(_scene_from(values), frequency)
    if name == "p_los_grid":
        grid = GridSpec(n=spec.oracle_n, seed=spec.seed)
        return p_los_grid(_scene_from(values), frequency, grid)
    if name == "p_los_optical":
        return p_los_optical(_scene_from(values))
    if name == "critical_frequency_hz":
        return critical_frequency(
            values["window_m"], values["bs_distance_m"], values["room_m"]
        )
    if name == "path_loss_db":
        lam = wavelength(frequency)
        d1, d2 = values["d1_m"], values["d2_m"]
        delta = values["delta_over_rd"] * fresnel_radius(d1, d2, lam)
        return total_path_loss_db(d1, d2, delta, lam)
    if name == "p_cov":
        fading = FadingModel(
            m_los=values["m_los"],
            m_nlos=values["m_nlos"],
            n_los=values["n_los"],
            n_nlos=values["n_nlos"],
        )
        budget = LinkBudget(
            frequency=frequency,
            tx_power_dbm=values["tx_power_dbm"],
            noise_floor_dbm=values["noise_dbm"],
            snr_threshold_db=values["snr_threshold_db"],
        )
        return coverage_probability(
            values["bs_distance_m"], values["ms_distance_m"], values["window_m"], fading, budget
        ).p_cov
    raise ConfigError(f"unknown output '{name}'")


def run_sweep(spec: SweepSpec) -> RunRecord:
    """Evaluate every requested output at every sweep point."""
    from . import __version__

    rows: list[tuple[float, ...]] = []
    for value in spec.values():
        point = dict(spec.fixed)
        point[spec.swept] = value
        try:
            row = tuple(_evaluate_output(name, point, spec) for name in spec.outputs)
        except ValueError as err:
            raise SweepRuntimeError(f"at {spec.swept}={value!r}: {err}") from err
        rows.append((value,) + row)
    return RunRecord(
        spec=spec,
        columns=(spec.swept,) + spec.outputs,
        rows=rows,
        version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )


def config_echo(spec: SweepSpec) -> list[str]:
    """The resolved spec as config lines; parse_config of these reproduces it."""
    lines = [
        f"sweep={spec.swept}",
        f"start={spec.start!r}",
        f"stop={spec.stop!r}",
        f"step={spec.step!r}",
    ]
    lines.extend(f"{key}={spec.fixed[key]!r}" for key in _NUMERIC_DEFAULTS if key in spec.fixed)
    lines.append(f"outputs={','.join(spec.outputs)}")
    lines.append(f"oracle_n={spec.oracle_n}")
    lines.append(f"seed={spec.seed}")
    return lines


def emit_csv(record: RunRecord, stream: TextIO) -> None:
    """Write the echo header, column names, and one row per sweep point."""
    stream.write(f"# o2i-los {record.version}\n")
    for line in config_echo(record.spec):
        stream.write(f"# {line}\n")
    stream.write(",".join(record.columns) + "\n")
    for row in record.rows:
        stream.write(",".join(repr(value) for value in row) + "\n")


def sweep_with_overrides(
    text: str, seed: int | None = None, oracle_n: int | None = None
) -> RunRecord:
    """Parse a config, apply CLI overrides, and run the sweep."""
    spec = parse_config(text)
    if seed is not None:
        spec = replace(spec, seed=seed)
    if oracle_n is not None:
        spec = replace(spec, oracle_n=oracle_n)
    return run_sweep(spec)
