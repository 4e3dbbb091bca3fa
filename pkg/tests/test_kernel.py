import math

import numpy as np
import pytest

from disc_tiler.errors import GeometryError
from disc_tiler.isometry import Isometry
from disc_tiler.kernel import (ORIGIN, Arc, Chain, Location, Point, Region, Segment, chain_area,
                               edge_intersect, edge_length, point_in_region, spindle,
                               spindle_angle, unit_disc)

from oracles import lens_member, monte_carlo_area, rot3_tile0_member


def square(side=1.0):
    p = [Point(0, 0), Point(side, 0), Point(side, side), Point(0, side)]
    return Region.from_edges([Segment(p[i], p[(i + 1) % 4]) for i in range(4)])


def rot3_tile():
    from disc_tiler.catalog import build_named
    return build_named("rot3").tiles[0]


class TestEdges:
    def test_lengths(self):
        assert edge_length(Arc(ORIGIN, 1.0, 0.0, math.pi / 3)) == pytest.approx(math.pi / 3, abs=1e-15)
        assert edge_length(Segment(Point(0, 0), Point(3, 4))) == 5.0
        assert edge_length(Arc(ORIGIN, 2.0, 0.3, -math.pi)) == pytest.approx(2 * math.pi, abs=1e-15)

    def test_degenerate_edges_rejected(self):
        with pytest.raises(GeometryError):
            Segment(Point(1, 1), Point(1, 1 + 1e-12))
        with pytest.raises(GeometryError):
            Arc(ORIGIN, 1.0, 0.0, 0.0)
        with pytest.raises(GeometryError):
            Arc(ORIGIN, -1.0, 0.0, 1.0)
        with pytest.raises(GeometryError):
            Point(math.nan, 0.0)

    def test_arc_endpoints_and_reversal(self):
        a = Arc(Point(1, 2), 2.0, 0.5, -1.25)
        r = a.reversed()
        assert r.start.dist(a.end) < 1e-15 and r.end.dist(a.start) < 1e-15
        assert r.length == pytest.approx(a.length)
        assert a.midpoint.dist(a.center) == pytest.approx(2.0)

    def test_subedge_lengths(self):
        a = Arc(ORIGIN, 1.0, 0.0, 2.0)
        sub = a.subedge(0.5, 1.5)
        assert sub.length == pytest.approx(1.0)
        assert sub.start.dist(a.point_at(0.5)) < 1e-15

    def test_bbox_includes_extreme_points(self):
        a = Arc(ORIGIN, 1.0, -0.5, 1.0)
        assert a.bbox[2] == pytest.approx(1.0)


class TestArea:
    def test_disc_and_square(self):
        assert chain_area(unit_disc()) == pytest.approx(math.pi, abs=1e-12)
        assert chain_area(square()) == pytest.approx(1.0, abs=1e-15)

    def test_open_chain_has_no_area(self):
        with pytest.raises(GeometryError):
            chain_area(Chain((Segment(ORIGIN, Point(1, 0)),)))

    def test_clockwise_boundary_rejected(self):
        with pytest.raises(GeometryError):
            Region(unit_disc().boundary.reversed())

    def test_rot3_tile_area_matches_monte_carlo(self):
        mc = monte_carlo_area(rot3_tile0_member, (-0.5, 0.0, 1.0, 1.0), n_samples=2_000_000, seed=3)
        assert abs(mc - math.pi / 3) < 3e-3
        # Three congruent tiles cover the disc, so the exact value is pi/3.
        assert chain_area(rot3_tile()) == pytest.approx(math.pi / 3, abs=1e-6)

    def test_membership_oracle_agrees_with_classifier(self):
        tile = rot3_tile()
        rng = np.random.default_rng(11)
        pts = rng.uniform(-1, 1, (2000, 2))
        oracle = rot3_tile0_member(pts[:, 0], pts[:, 1])
        for (x, y), want in zip(pts, oracle):
            loc = point_in_region(tile, Point(x, y))
            if loc is not Location.BOUNDARY:
                assert (loc is Location.INSIDE) == bool(want)


class TestPointInRegion:
    @pytest.mark.parametrize("p, want", [
        (Point(0, 0), Location.INSIDE),
        (Point(1, 0), Location.BOUNDARY),
        (Point(2, 0), Location.OUTSIDE),
        (Point(0, -1), Location.BOUNDARY),
        (Point(0.7, 0.7), Location.INSIDE),
    ])
    def test_unit_disc(self, p, want):
        assert point_in_region(unit_disc(), p) is want

    def test_ray_through_vertex(self):
        # From (0.5, 0.5) a ray at 45 degrees hits the square's corner exactly.
        sq = square()
        assert point_in_region(sq, Point(0.5, 0.5), direction=math.pi / 4) is Location.INSIDE
        assert point_in_region(sq, Point(-0.5, -0.5), direction=math.pi / 4) is Location.OUTSIDE

    def test_second_ray_direction_agrees(self):
        regions = [unit_disc(), square(), rot3_tile(), spindle(Point(0, 0), Point(1, 0.3), 1.0)]
        rng = np.random.default_rng(5)
        for k in range(10_000):
            reg = regions[k % len(regions)]
            p = Point(*rng.uniform(-1.2, 1.2, 2))
            a = point_in_region(reg, p, direction=0.3)
            b = point_in_region(reg, p, direction=2.1)
            assert a is b


class TestIntersection:
    def test_two_unit_circles(self):
        a = Arc(ORIGIN, 1.0, -math.pi / 2, math.pi)
        b = Arc(Point(1, 0), 1.0, math.pi / 2, math.pi)
        pts = sorted(edge_intersect(a, b).points, key=lambda p: p.y)
        assert len(pts) == 2
        assert pts[0].dist(Point(0.5, -math.sqrt(3) / 2)) < 1e-12
        assert pts[1].dist(Point(0.5, math.sqrt(3) / 2)) < 1e-12

    def test_tangent_circles(self):
        a = Arc(ORIGIN, 1.0, -1.0, 2.0)
        b = Arc(Point(2, 0), 1.0, math.pi - 1.0, 2.0)
        inter = edge_intersect(a, b)
        assert len(inter.points) == 1 and inter.points[0].dist(Point(1, 0)) < 1e-12

    def test_shared_subarc(self):
        a = Arc(ORIGIN, 1.0, 0.0, math.pi / 3)
        b = Arc(ORIGIN, 1.0, math.pi / 6, math.pi / 2)
        inter = edge_intersect(a, b)
        assert len(inter.overlaps) == 1
        assert inter.overlaps[0].length == pytest.approx(math.pi / 6, abs=1e-12)

    def test_shared_subarc_across_zero_angle(self):
        a = Arc(ORIGIN, 1.0, -0.2, 0.4)
        b = Arc(ORIGIN, 1.0, 2 * math.pi - 0.1, 0.5)
        inter = edge_intersect(a, b)
        assert sum(o.length for o in inter.overlaps) == pytest.approx(0.3, abs=1e-12)

    def test_segments(self):
        s = Segment(Point(0, 0), Point(2, 2))
        t = Segment(Point(0, 2), Point(2, 0))
        assert edge_intersect(s, t).points[0].dist(Point(1, 1)) < 1e-12
        u = Segment(Point(1, 1), Point(3, 3))
        assert edge_intersect(s, u).overlaps[0].length == pytest.approx(math.sqrt(2))
        assert edge_intersect(s, Segment(Point(5, 0), Point(6, 0))).is_empty

    def test_segment_and_arc(self):
        s = Segment(Point(-2, 0.5), Point(2, 0.5))
        a = Arc(ORIGIN, 1.0, 0.0, math.pi)
        pts = sorted(edge_intersect(s, a).points, key=lambda p: p.x)
        assert len(pts) == 2
        assert pts[1].dist(Point(math.sqrt(3) / 2, 0.5)) < 1e-12
        tangent = Segment(Point(-1, 1), Point(1, 1))
        assert len(edge_intersect(tangent, a).points) == 1


class TestChain:
    def test_broken_chain_rejected(self):
        with pytest.raises(GeometryError):
            Chain((Segment(Point(0, 0), Point(1, 0)), Segment(Point(1, 0.1), Point(2, 0))))

    def test_self_intersection_rejected(self):
        pts = [Point(0, 0), Point(1, 1), Point(1, 0), Point(0, 1)]
        with pytest.raises(GeometryError):
            Region.from_edges([Segment(pts[i], pts[(i + 1) % 4]) for i in range(4)])


class TestSpindle:
    def test_antipodal_pair_gives_unit_disc(self):
        s = spindle(Point(-1, 0), Point(1, 0), 1.0)
        assert chain_area(s) == pytest.approx(math.pi, abs=1e-9)

    def test_unit_chord(self):
        s = spindle(Point(0, 0), Point(1, 0), 1.0)
        assert spindle_angle(Point(0, 0), Point(1, 0), 1.0) == pytest.approx(math.pi / 3)
        want = math.pi / 3 - math.sin(math.pi / 3)
        assert chain_area(s) == pytest.approx(want, abs=1e-12)
        assert want == pytest.approx(0.18117, abs=1e-5)

    @pytest.mark.parametrize("r", [1.0, 2.0])
    @pytest.mark.parametrize("s", [math.pi / 6, math.pi / 2, 2 * math.pi / 3])
    def test_area_against_lens_oracle(self, s, r):
        d = 2 * r * math.sin(s / 2)
        p, q = Point(0, 0), Point(d, 0)
        h = math.sqrt(max(r * r - d * d / 4, 0.0))
        member = lens_member((d / 2, h), (d / 2, -h), r)
        half = r - h
        mc = monte_carlo_area(member, (0, -half, d, half), n_samples=1_000_000, seed=7)
        assert abs(chain_area(spindle(p, q, r)) - mc) < 5e-3 * r * r

    def test_errors(self):
        with pytest.raises(GeometryError):
            spindle(Point(0, 0), Point(0, 0), 1.0)
        with pytest.raises(GeometryError):
            spindle(Point(0, 0), Point(3, 0), 1.0)


class TestIsometry:
    def test_full_turn_is_identity(self):
        t = rot3_tile()
        img = Isometry.rotation_about(Point(0.3, -0.2), 2 * math.pi).apply(t)
        for e, f in zip(t.edges, img.edges):
            assert e.start.dist(f.start) < 1e-12

    def test_reflection_twice(self):
        g = Isometry.reflection_in_line(Point(0.2, 0.1), 0.7)
        h = g @ g
        assert h.is_close(Isometry.identity(), 1e-12)

    def test_inverse(self):
        g = Isometry(1.1, Point(0.5, -2.0), True)
        assert (g @ g.inverse()).is_close(Isometry.identity(), 1e-12)
        p = Point(0.3, 0.9)
        assert g.inverse()(g(p)).dist(p) < 1e-12

    def test_arc_under_isometry(self):
        a = Arc(ORIGIN, 1.0, 0.2, math.pi / 3)
        for g in (Isometry(0.4, Point(1, 2)), Isometry(-2.0, Point(0, 1), True)):
            b = g.apply(a)
            assert b.radius == 1.0 and abs(b.sweep) == pytest.approx(math.pi / 3)
            assert b.start.dist(g(a.start)) < 1e-12 and b.end.dist(g(a.end)) < 1e-12
            assert b.midpoint.dist(g(a.midpoint)) < 1e-12

    def test_reflected_region_stays_positive(self):
        t = rot3_tile()
        img = Isometry.reflection_in_line(ORIGIN, 0.0).apply(t)
        assert chain_area(img) == pytest.approx(math.pi / 3, abs=1e-12)
