"""Planar geometry of a square room, its window, and an outdoor base station.

Fixed coordinate frame used by the whole package: the window wall is the
line x = 0 with the window centred on the origin; the room occupies
x in [0, L], y in [-L/2, L/2] for side length L; the base station sits
in front of the wall at x < 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# A ray from deep in front of the window leaves the back wall for a side
# wall at atan((L/2)/L); independent of the room size for a square room.
CORNER_RAY_ANGLE = math.atan(0.5)


@dataclass(frozen=True)
class Point2D:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("coordinates must be finite")


@dataclass(frozen=True)
class SceneGeometry:
    """Square room with a centred window and a base station out front.

    room_side: interior side length in meters.
    window_width: width of the window opening in meters, centred on the wall.
    bs_distance: perpendicular standoff of the base station from the wall.
    bs_angle: aspect angle in radians, measured from the window-centre normal.
    """

    room_side: float
    window_width: float
    bs_distance: float
    bs_angle: float = 0.0

    def __post_init__(self):
        if not self.room_side > 0:
            raise ValueError("room_side must be positive")
        if not self.window_width > 0:
            raise ValueError("window_width must be positive")
        if not self.bs_distance > 0:
            raise ValueError("bs_distance must be positive")
        if self.window_width > self.room_side:
            raise ValueError("window exceeds room")
        if not abs(self.bs_angle) < math.pi / 2:
            raise ValueError("bs_angle must lie strictly inside (-90, 90) degrees")


@dataclass(frozen=True)
class PathDecomposition:
    """A base-station-to-receiver path split at the window wall plane."""

    d1: float
    d2: float
    crossing: Point2D


def bs_position(scene: SceneGeometry) -> Point2D:
    """Base station location: standoff bs_distance at aspect angle bs_angle.

    Placed so that its straight-line distance to the window centre is
    bs_distance / cos(bs_angle).
    """
    return Point2D(-scene.bs_distance, -scene.bs_distance * math.tan(scene.bs_angle))


def bs_to_window_distance(scene: SceneGeometry) -> float:
    """Length of the central ray from the base station to the window centre."""
    return scene.bs_distance / math.cos(scene.bs_angle)


def window_to_far_wall_distance(scene: SceneGeometry) -> float:
    """Length of the central ray from the window centre to the wall it hits.

    The ray reaches the back wall for aspect angles inside the corner-ray
    angle and a side wall beyond it; both branches agree at the corner ray.
    """
    theta = scene.bs_angle
    if abs(theta) < CORNER_RAY_ANGLE:
        return scene.room_side / math.cos(theta)
    return scene.room_side / (2.0 * abs(math.sin(theta)))


def window_edges(scene: SceneGeometry) -> tuple[Point2D, Point2D]:
    """Lower and upper window edge points on the wall plane."""
    half = scene.window_width / 2.0
    return Point2D(0.0, -half), Point2D(0.0, half)


def intrusion_distance(bs: Point2D, ms: Point2D, edge: Point2D) -> float:
    """Signed clearance of a window edge from the straight bs-ms path.

    The obstruction attached to an edge is the wall half-plane running from
    the edge away from the window centre (the origin).  The magnitude is the
    perpendicular distance from the edge to the path line; the sign is
    positive when that half-plane stays clear of the path and negative when
    it cuts across it.
    """
    dx = ms.x - bs.x
    dy = ms.y - bs.y
    length = math.hypot(dx, dy)
    if length == 0.0:
        raise ValueError("coincident endpoints")
    perp = abs(dx * (edge.y - bs.y) - dy * (edge.x - bs.x)) / length

    if dx == 0.0:
        # Path parallel to the wall plane never enters the wall half-plane.
        return perp
    y_cross = bs.y + dy * (0.0 - bs.x) / dx
    away_from_centre = math.copysign(1.0, edge.y) if edge.y != 0.0 else 1.0
    blocked = away_from_centre * (y_cross - edge.y) > 0.0
    return -perp if blocked else perp


def path_decomposition(bs: Point2D, ms: Point2D) -> PathDecomposition:
    """Split the bs-ms segment at the wall plane x = 0."""
    if bs.x == ms.x:
        raise ValueError("no wall crossing")
    t = (0.0 - bs.x) / (ms.x - bs.x)
    if not 0.0 <= t <= 1.0:
        raise ValueError("no wall crossing")
    crossing = Point2D(0.0, bs.y + t * (ms.y - bs.y))
    d1 = math.hypot(crossing.x - bs.x, crossing.y - bs.y)
    d2 = math.hypot(ms.x - crossing.x, ms.y - crossing.y)
    return PathDecomposition(d1=d1, d2=d2, crossing=crossing)
