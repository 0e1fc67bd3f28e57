"""Line-of-sight probability through the window, three ways.

p_los_closed evaluates the closed-form wedge-area approximation,
p_los_optical its frequency-independent high-frequency limit, and
p_los_grid an exact deterministic grid simulation that re-derives the
per-receiver Fresnel clearance and acts as the reference the closed
form is judged against.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .diffraction import SPEED_OF_LIGHT, fresnel_radius, wavelength
from .geometry import (
    Point2D,
    SceneGeometry,
    bs_position,
    bs_to_window_distance,
    intrusion_distance,
    path_decomposition,
    window_edges,
    window_to_far_wall_distance,
)

# A link is LoS when both window edges clear this fraction of the first
# Fresnel zone radius.
LOS_CLEARANCE_RATIO = 0.6

_GRID_ROW_BLOCK = 128


@dataclass(frozen=True)
class GridSpec:
    """Grid-simulation resolution: n x n receiver positions at cell centres."""

    n: int
    seed: int = 0  # reserved; the grid evaluation is deterministic

    def __post_init__(self):
        if self.n < 10:
            raise ValueError("grid must be at least 10 x 10")


@dataclass(frozen=True)
class LosEvaluation:
    """LoS probability of one scene and carrier frequency, all routes."""

    p_closed: float
    p_optical: float
    below_critical: bool
    p_grid: float | None = None
    clamped: bool = False


def los_half_angle(scene: SceneGeometry, wavelength_m: float) -> float:
    """Half-angle subtended at the base station by the LoS wedge, radians.

    Floored at zero: below the critical frequency the Fresnel clearance
    consumes the whole window and no LoS wedge exists.
    """
    if not wavelength_m > 0:
        raise ValueError("wavelength must be positive")
    rd = fresnel_radius(
        bs_to_window_distance(scene), window_to_far_wall_distance(scene), wavelength_m
    )
    cos_t = math.cos(scene.bs_angle)
    raw = (scene.window_width * cos_t * cos_t - 2.0 * LOS_CLEARANCE_RATIO * rd * cos_t) / (
        2.0 * scene.bs_distance
    )
    return max(raw, 0.0)


def _closed_form_raw(scene: SceneGeometry, frequency: float) -> float:
    phi = los_half_angle(scene, wavelength(frequency))
    if phi <= 0.0:
        return 0.0
    d1 = bs_to_window_distance(scene)
    d2 = window_to_far_wall_distance(scene)
    # Wedge between radii d1 and d1+d2 subtending 2*phi, over the room area.
    return phi * d2 * (d2 + 2.0 * d1) / scene.room_side**2


def p_los_closed(scene: SceneGeometry, frequency: float) -> float:
    """Closed-form LoS probability for a uniformly placed indoor receiver."""
    return min(_closed_form_raw(scene, frequency), 1.0)


def p_los_optical(scene: SceneGeometry) -> float:
    """Frequency-independent LoS probability in the vanishing-wavelength limit.

    Valid at zero aspect angle, where the Fresnel clearance term drops out
    of the closed form.
    """
    p = scene.window_width * (1.0 / scene.room_side + 1.0 / (2.0 * scene.bs_distance))
    return min(p, 1.0)


def critical_frequency(window_width: float, bs_distance: float, room_side: float) -> float:
    """Carrier frequency below which no LoS exists at zero aspect angle.

    Solves for the wavelength at which the required edge clearance exactly
    consumes the window aperture.
    """
    if not (window_width > 0 and bs_distance > 0 and room_side > 0):
        raise ValueError("window_width, bs_distance and room_side must be positive")
    ratio = 2.0 * LOS_CLEARANCE_RATIO
    critical_wavelength = (window_width / ratio) ** 2 * (1.0 / bs_distance + 1.0 / room_side)
    return SPEED_OF_LIGHT / critical_wavelength


def is_los(scene: SceneGeometry, ms: Point2D, frequency: float) -> bool:
    """Whether a receiver at ms has line of sight through the window.

    True iff the direct path crosses the wall plane inside the open window
    and both window edges clear the path by at least LOS_CLEARANCE_RATIO
    times the first Fresnel radius at the wall plane.
    """
    half_room = scene.room_side / 2.0
    if not (0.0 <= ms.x <= scene.room_side and abs(ms.y) <= half_room):
        raise ValueError("MS outside room")
    if ms.x == 0.0:
        return False  # receiver on the wall plane itself: no through-window path
    bs = bs_position(scene)
    decomposition = path_decomposition(bs, ms)
    if abs(decomposition.crossing.y) >= scene.window_width / 2.0:
        return False
    rd = fresnel_radius(decomposition.d1, decomposition.d2, wavelength(frequency))
    lower, upper = window_edges(scene)
    threshold = LOS_CLEARANCE_RATIO * rd
    return (
        intrusion_distance(bs, ms, lower) >= threshold
        and intrusion_distance(bs, ms, upper) >= threshold
    )


def _los_count_block(
    scene: SceneGeometry, wavelength_m: float, xs: np.ndarray, ys: np.ndarray
) -> int:
    """LoS receiver count over the xs-by-ys block, per-point clearances."""
    bs = bs_position(scene)
    x = xs[:, None]
    y = ys[None, :]
    t = (0.0 - bs.x) / (x - bs.x)
    y_cross = bs.y + (y - bs.y) * t
    half_window = scene.window_width / 2.0
    d1 = np.hypot(0.0 - bs.x, y_cross - bs.y)
    d2 = np.hypot(x, y - y_cross)
    rd = np.sqrt(wavelength_m * d1 * d2 / (d1 + d2))
    # Perpendicular edge clearance = wall-plane offset scaled by the path
    # direction cosine against the wall normal.
    cos_norm = (x - bs.x) / np.hypot(x - bs.x, y - bs.y)
    clear_upper = (half_window - y_cross) * cos_norm
    clear_lower = (y_cross + half_window) * cos_norm
    threshold = LOS_CLEARANCE_RATIO * rd
    ok = (
        (np.abs(y_cross) < half_window)
        & (clear_upper >= threshold)
        & (clear_lower >= threshold)
    )
    return int(np.count_nonzero(ok))


def _worker_count() -> int:
    raw = os.environ.get("O2I_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        return min(os.cpu_count() or 1, 8)
    return n


def p_los_grid(scene: SceneGeometry, frequency: float, grid: GridSpec) -> float:
    """LoS fraction over an n x n grid of receivers at room cell centres.

    Deterministic for fixed inputs; the row-block partition and the integer
    count reduction make the result independent of worker count
    (O2I_THREADS caps parallelism, 0 = auto).
    """
    n = grid.n
    wavelength_m = wavelength(frequency)
    step = scene.room_side / n
    xs = (np.arange(n) + 0.5) * step
    ys = -scene.room_side / 2.0 + (np.arange(n) + 0.5) * step
    blocks = [xs[i : i + _GRID_ROW_BLOCK] for i in range(0, n, _GRID_ROW_BLOCK)]

    workers = _worker_count()
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(
                pool.map(lambda b: _los_count_block(scene, wavelength_m, b, ys), blocks)
            )
    else:
        counts = [_los_count_block(scene, wavelength_m, b, ys) for b in blocks]
    return sum(counts) / (n * n)


def evaluate(
    scene: SceneGeometry, frequency: float, grid: GridSpec | None = None
) -> LosEvaluation:
    """All LoS probability routes for one scene and carrier frequency."""
    raw = _closed_form_raw(scene, frequency)
    return LosEvaluation(
        p_closed=min(raw, 1.0),
        p_optical=p_los_optical(scene),
        below_critical=frequency
        <= critical_frequency(scene.window_width, scene.bs_distance, scene.room_side),
        p_grid=None if grid is None else p_los_grid(scene, frequency, grid),
        clamped=raw > 1.0,
    )
