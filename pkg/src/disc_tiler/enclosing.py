"""Minimum enclosing circles of point sets and of arc-chain regions."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GeometryError
from .kernel import Arc, Point, Region


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise GeometryError("circle radius must be nonnegative")

    def contains(self, p: Point, rel_tol: float = 1e-12) -> bool:
        return self.center.dist(p) <= self.radius * (1 + rel_tol) + rel_tol


def _diametral(a: Point, b: Point) -> Circle:
    c = (a + b) * 0.5
    return Circle(c, max(c.dist(a), c.dist(b)))


def circle_through(a: Point, b: Point, c: Point) -> Circle | None:
    """Circumscribed circle of a triangle, or None if it is (near) collinear."""
    bx, by = b.x - a.x, b.y - a.y
    cx, cy = c.x - a.x, c.y - a.y
    d = 2.0 * (bx * cy - by * cx)
    scale = max(bx * bx + by * by, cx * cx + cy * cy)
    if abs(d) <= 1e-14 * scale:
        return None
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = Point(a.x + ux, a.y + uy)
    return Circle(center, max(center.dist(a), center.dist(b), center.dist(c)))


def _three(a: Point, b: Point, c: Point) -> Circle:
    circ = circle_through(a, b, c)
    if circ is not None:
        return circ
    pairs = [(a, b), (a, c), (b, c)]
    return _diametral(*max(pairs, key=lambda pq: pq[0].dist(pq[1])))


def min_enclosing_circle(points: Iterable[Point], seed: int = 0) -> Circle:
    """Smallest circle containing every point (randomized incremental Welzl).

    The shuffle is seeded, so the result is deterministic for a given input.
    """
    pts = list(dict.fromkeys(points))
    if not pts:
        raise GeometryError("minimum enclosing circle of an empty set")
    random.Random(seed).shuffle(pts)
    c = Circle(pts[0], 0.0)
    for i in range(1, len(pts)):
        p = pts[i]
        if c.contains(p):
            continue
        c = Circle(p, 0.0)
        for j in range(i):
            q = pts[j]
            if c.contains(q):
                continue
            c = _diametral(p, q)
            for k in range(j):
                if not c.contains(pts[k]):
                    c = _three(p, q, pts[k])
    return c


def support_points(circle: Circle, points: Sequence[Point], rel_tol: float = 1e-9) -> list[Point]:
    """Points of the set lying on the circle."""
    r = circle.radius
    return [p for p in points if abs(circle.center.dist(p) - r) <= rel_tol * max(1.0, r)]


def _boundary_samples(region: Region, k: int) -> list[Point]:
    pts = []
    for e in region.edges:
        pts.extend(e.sample(k))
        if isinstance(e, Arc):
            lo, w = e.ccw_interval
            for q in range(4):
                a = q * 0.5 * math.pi
                if (a - lo) % (2 * math.pi) <= w:
                    pts.append(e.center + Point.polar(e.radius, a))
    return pts


def region_circumcircle(region: Region, samples_per_edge: int = 16,
                        max_rounds: int = 32) -> Circle:
    """Circumcircle of a region from a densified boundary sample.

    After each solve, the point of every arc farthest from the current
    center is added, so the support points converge to true arc extremes.
    """
    pts = _boundary_samples(region, samples_per_edge)
    c = min_enclosing_circle(pts)
    for _ in range(max_rounds):
        extra = []
        for e in region.edges:
            if isinstance(e, Arc):
                f = e.farthest_from(c.center)
                if not c.contains(f, 1e-14):
                    extra.append(f)
        if not extra:
            break
        pts.extend(extra)
        c = min_enclosing_circle(pts)
    return c
