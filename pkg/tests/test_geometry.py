import math

import pytest
from hypothesis import given, strategies as st

from o2i_los.geometry import (
    CORNER_RAY_ANGLE,
    Point2D,
    SceneGeometry,
    bs_position,
    bs_to_window_distance,
    intrusion_distance,
    path_decomposition,
    window_edges,
    window_to_far_wall_distance,
)


def scene(room=20.0, window=2.0, dist=5.0, angle=0.0):
    return SceneGeometry(room_side=room, window_width=window,
                         bs_distance=dist, bs_angle=angle)


class TestSceneGeometry:
    def test_window_larger_than_room_rejected(self):
        with pytest.raises(ValueError, match="window exceeds room"):
            scene(room=20.0, window=25.0)

    @pytest.mark.parametrize("kwargs", [
        dict(room=-1.0), dict(window=0.0), dict(dist=0.0),
        dict(angle=math.pi / 2), dict(angle=-2.0),
    ])
    def test_invalid_fields_rejected(self, kwargs):
        with pytest.raises(ValueError):
            scene(**kwargs)

    def test_nonfinite_point_rejected(self):
        with pytest.raises(ValueError):
            Point2D(math.nan, 0.0)


class TestBsPosition:
    def test_normal_incidence(self):
        assert bs_position(scene()) == Point2D(-5.0, 0.0)

    def test_45_degrees(self):
        p = bs_position(scene(angle=math.radians(45)))
        assert p.x == pytest.approx(-5.0)
        assert p.y == pytest.approx(-5.0)
        assert math.hypot(p.x, p.y) == pytest.approx(5 * math.sqrt(2))

    def test_negative_angle_sign(self):
        p = bs_position(scene(angle=math.radians(-30)))
        assert p.y == pytest.approx(2.8868, abs=1e-4)


class TestCentralRayDistances:
    def test_d1_normal(self):
        assert bs_to_window_distance(scene()) == pytest.approx(5.0)

    def test_d1_60_degrees(self):
        assert bs_to_window_distance(scene(angle=math.radians(60))) == pytest.approx(10.0)

    def test_d1_at_corner_angle(self):
        got = bs_to_window_distance(scene(dist=2.0, angle=math.atan(0.5)))
        assert got == pytest.approx(2.2361, abs=1e-4)

    def test_d2_normal(self):
        assert window_to_far_wall_distance(scene()) == pytest.approx(20.0)

    def test_d2_side_wall_45(self):
        got = window_to_far_wall_distance(scene(angle=math.radians(45)))
        assert got == pytest.approx(14.1421, abs=1e-4)

    def test_d2_continuous_at_corner_ray(self):
        for sign in (1.0, -1.0):
            below = window_to_far_wall_distance(scene(angle=sign * (CORNER_RAY_ANGLE - 1e-13)))
            above = window_to_far_wall_distance(scene(angle=sign * (CORNER_RAY_ANGLE + 1e-13)))
            assert below == pytest.approx(above, rel=1e-12)
            assert below == pytest.approx(20.0 * math.sqrt(5) / 2.0, rel=1e-12)

    @given(st.floats(-1.5, 1.5), st.floats(0.5, 80.0), st.floats(5.0, 40.0))
    def test_lower_bounds(self, angle, dist, room):
        s = scene(room=room, window=1.0, dist=dist, angle=angle)
        assert bs_to_window_distance(s) >= dist - 1e-12
        assert window_to_far_wall_distance(s) >= room / 2 - 1e-12


class TestIntrusionDistance:
    def test_clear_edge_above_straight_path(self):
        got = intrusion_distance(Point2D(-5, 0), Point2D(20, 0), Point2D(0, 1))
        assert got == pytest.approx(1.0)

    def test_edge_on_path(self):
        assert intrusion_distance(Point2D(-5, 0), Point2D(20, 0), Point2D(0, 0)) == 0.0

    def test_collinear_construction(self):
        # line through (-5,0) and (5,2) passes x=0 at y=1
        got = intrusion_distance(Point2D(-5, 0), Point2D(5, 2), Point2D(0, 1))
        assert got == pytest.approx(0.0, abs=1e-12)

    def test_blocking_edge_is_negative(self):
        # path crosses the wall at y=2, above the upper edge at y=1
        got = intrusion_distance(Point2D(-5, 0), Point2D(5, 4), Point2D(0, 1))
        assert got < 0
        # while the lower edge at y=-1 stays clear
        assert intrusion_distance(Point2D(-5, 0), Point2D(5, 4), Point2D(0, -1)) > 0

    def test_coincident_endpoints(self):
        with pytest.raises(ValueError, match="coincident endpoints"):
            intrusion_distance(Point2D(1, 1), Point2D(1, 1), Point2D(0, 0))

    @given(
        st.floats(-50, -0.1), st.floats(-20, 20),
        st.floats(0.1, 50), st.floats(-20, 20),
        st.floats(-10, -0.01) | st.floats(0.01, 10),
    )
    def test_swap_invariance(self, bx, by, mx, my, ey):
        bs, ms, edge = Point2D(bx, by), Point2D(mx, my), Point2D(0.0, ey)
        forward = intrusion_distance(bs, ms, edge)
        backward = intrusion_distance(ms, bs, edge)
        assert abs(forward) == pytest.approx(abs(backward), rel=1e-9, abs=1e-12)
        assert forward == pytest.approx(backward, rel=1e-9, abs=1e-12)


class TestPathDecomposition:
    def test_straight_path(self):
        dec = path_decomposition(Point2D(-5, 0), Point2D(20, 0))
        assert dec.crossing == Point2D(0.0, 0.0)
        assert dec.d1 == pytest.approx(5.0)
        assert dec.d2 == pytest.approx(20.0)

    def test_diagonal_similar_triangles(self):
        dec = path_decomposition(Point2D(-5, -5), Point2D(10, 10))
        assert dec.crossing.y == pytest.approx(0.0, abs=1e-12)
        assert dec.d1 == pytest.approx(5 * math.sqrt(2))
        assert dec.d2 == pytest.approx(10 * math.sqrt(2))

    def test_interpolated_crossing(self):
        dec = path_decomposition(Point2D(-5, 0), Point2D(15, 10))
        assert dec.crossing.y == pytest.approx(2.5)
        assert dec.d1 == pytest.approx(5.5902, abs=1e-4)
        assert dec.d2 == pytest.approx(16.7705, abs=1e-4)

    def test_parallel_path_rejected(self):
        with pytest.raises(ValueError, match="no wall crossing"):
            path_decomposition(Point2D(-5, 0), Point2D(-5, 10))

    def test_non_crossing_segment_rejected(self):
        with pytest.raises(ValueError, match="no wall crossing"):
            path_decomposition(Point2D(-5, 0), Point2D(-1, 3))

    @given(
        st.floats(-80, -0.01), st.floats(-40, 40),
        st.floats(0.01, 80), st.floats(-40, 40),
    )
    def test_collinear_split(self, bx, by, mx, my):
        bs, ms = Point2D(bx, by), Point2D(mx, my)
        dec = path_decomposition(bs, ms)
        assert dec.d1 + dec.d2 == pytest.approx(math.hypot(mx - bx, my - by), rel=1e-12)


def test_window_edges():
    lower, upper = window_edges(scene(window=3.0))
    assert lower == Point2D(0.0, -1.5)
    assert upper == Point2D(0.0, 1.5)
