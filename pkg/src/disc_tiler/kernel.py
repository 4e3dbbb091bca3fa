"""Planar primitives for arc-and-segment geometry.

Points, rigid motions, edges (segments and circular arcs), chains and
regions, plus the closed-form predicates built on them: length, area,
containment, pairwise intersection and spindles.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import GeometryError
from .tolerance import DEFAULT_TOL

TAU = 2.0 * math.pi
_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite point ({self.x}, {self.y})")

    @classmethod
    def polar(cls, radius: float, angle: float) -> "Point":
        return cls(radius * math.cos(angle), radius * math.sin(angle))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Point":
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)

    def rotated(self, angle: float) -> "Point":
        c, s = math.cos(angle), math.sin(angle)
        return Point(c * self.x - s * self.y, s * self.x + c * self.y)

    def perp(self) -> "Point":
        """Counterclockwise quarter turn."""
        return Point(-self.y, self.x)


ORIGIN = Point(0.0, 0.0)


def normalize_angle(a: float) -> float:
    """Map an angle to (-pi, pi]."""
    a = math.fmod(a, TAU)
    if a <= -math.pi:
        a += TAU
    elif a > math.pi:
        a -= TAU
    return a


class _EdgeBase:
    __slots__ = ()

    @property
    def midpoint(self) -> Point:
        return self.point_at(0.5 * self.length)

    def sample(self, k: int) -> list[Point]:
        """``k + 1`` points evenly spaced by arc length, endpoints included."""
        k = max(1, k)
        return [self.point_at(self.length * i / k) for i in range(k + 1)]

    def bbox_distance(self, p: Point) -> float:
        x0, y0, x1, y1 = self.bbox
        dx = max(x0 - p.x, 0.0, p.x - x1)
        dy = max(y0 - p.y, 0.0, p.y - y1)
        return math.hypot(dx, dy)


@dataclass(frozen=True)
class Segment(_EdgeBase):
    start: Point
    end: Point

    def __post_init__(self):
        if self.start.dist(self.end) < DEFAULT_TOL.length:
            raise GeometryError(f"degenerate segment {self.start} -> {self.end}")

    @cached_property
    def length(self) -> float:
        return self.start.dist(self.end)

    @cached_property
    def direction(self) -> Point:
        return (self.end - self.start) * (1.0 / self.length)

    @cached_property
    def bbox(self) -> tuple[float, float, float, float]:
        a, b = self.start, self.end
        return (min(a.x, b.x), min(a.y, b.y), max(a.x, b.x), max(a.y, b.y))

    def point_at(self, s: float) -> Point:
        return self.start + self.direction * s

    def tangent_at(self, s: float) -> Point:
        return self.direction

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)

    def subedge(self, s0: float, s1: float) -> "Segment":
        return Segment(self.point_at(s0), self.point_at(s1))

    def param_of(self, p: Point) -> float:
        """Arc-length parameter of the point of the edge nearest ``p``."""
        return min(max((p - self.start).dot(self.direction), 0.0), self.length)

    def distance_to(self, p: Point) -> float:
        t = (p - self.start).dot(self.direction)
        t = min(max(t, 0.0), self.length)
        return p.dist(self.point_at(t))

    def curvature(self) -> float:
        return 0.0


@dataclass(frozen=True)
class Arc(_EdgeBase):
    """Circular arc from ``center + radius*u(start_angle)`` sweeping ``sweep`` radians.

    Positive sweep runs counterclockwise.
    """

    center: Point
    radius: float
    start_angle: float
    sweep: float

    def __post_init__(self):
        if not self.radius > 0 or not math.isfinite(self.radius):
            raise GeometryError(f"arc radius must be positive, got {self.radius!r}")
        if not (-TAU < self.sweep <= TAU) or self.sweep == 0:
            raise GeometryError(f"arc sweep must lie in (-2pi, 2pi] \\ {{0}}, got {self.sweep!r}")
        if not math.isfinite(self.start_angle):
            raise GeometryError("arc start angle must be finite")
        if self.radius * abs(self.sweep) < DEFAULT_TOL.length:
            raise GeometryError("degenerate arc (length below tolerance)")

    @classmethod
    def from_points(cls, center: Point, start: Point, end: Point, ccw: bool) -> "Arc":
        """Arc about ``center`` from ``start`` to ``end`` in the given sense.

        The radius is taken from ``start``; ``end`` only fixes the angle.
        """
        a0 = (start - center).angle()
        a1 = (end - center).angle()
        sweep = (a1 - a0) % TAU
        if not ccw:
            sweep = sweep - TAU
        if abs(sweep) < 1e-15:
            sweep = TAU if ccw else -TAU
        return cls(center, center.dist(start), a0, sweep)

    @cached_property
    def length(self) -> float:
        return self.radius * abs(self.sweep)

    @cached_property
    def start(self) -> Point:
        return self.center + Point.polar(self.radius, self.start_angle)

    @cached_property
    def end(self) -> Point:
        return self.center + Point.polar(self.radius, self.start_angle + self.sweep)

    @cached_property
    def ccw_interval(self) -> tuple[float, float]:
        """(low angle in [0, 2pi), width) of the arc as a counterclockwise interval."""
        lo = self.start_angle if self.sweep > 0 else self.start_angle + self.sweep
        return lo % TAU, abs(self.sweep)

    @cached_property
    def bbox(self) -> tuple[float, float, float, float]:
        pts = [self.start, self.end]
        lo, w = self.ccw_interval
        for k in range(4):
            a = k * 0.5 * math.pi
            if (a - lo) % TAU <= w:
                pts.append(self.center + Point.polar(self.radius, a))
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        return (min(xs), min(ys), max(xs), max(ys))

    def angle_at(self, s: float) -> float:
        return self.start_angle + math.copysign(s / self.radius, self.sweep)

    def point_at(self, s: float) -> Point:
        return self.center + Point.polar(self.radius, self.angle_at(s))

    def tangent_at(self, s: float) -> Point:
        t = Point.polar(1.0, self.angle_at(s)).perp()
        return t if self.sweep > 0 else -t

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.start_angle + self.sweep, -self.sweep)

    def subedge(self, s0: float, s1: float) -> "Arc":
        return Arc(self.center, self.radius, self.angle_at(s0),
                   math.copysign((s1 - s0) / self.radius, self.sweep))

    def param_of_angle(self, theta: float) -> float:
        """Angular offset of ``theta`` from the start, along the sweep, in [0, 2pi)."""
        d = theta - self.start_angle
        if self.sweep < 0:
            d = -d
        return d % TAU

    def param_of(self, p: Point) -> float:
        """Arc-length parameter of the point of the arc nearest ``p`` in angle."""
        t = self.param_of_angle((p - self.center).angle())
        w = abs(self.sweep)
        if t > w:
            t = w if t - w < TAU - t else 0.0
        return t * self.radius

    def contains_angle(self, theta: float, slack: float = 0.0) -> bool:
        t = self.param_of_angle(theta)
        return t <= abs(self.sweep) + slack or t >= TAU - slack

    def distance_to(self, p: Point) -> float:
        v = p - self.center
        d = v.norm()
        if d > 0 and self.contains_angle(v.angle()):
            return abs(d - self.radius)
        return min(p.dist(self.start), p.dist(self.end))

    def curvature(self) -> float:
        """Signed curvature: positive when the arc turns left."""
        return math.copysign(1.0 / self.radius, self.sweep)

    def farthest_from(self, p: Point) -> Point:
        """Point of the arc at maximal distance from ``p``."""
        v = self.center - p
        if v.norm() > 0 and self.contains_angle(v.angle()):
            return self.center + Point.polar(self.radius, v.angle())
        return self.start if p.dist(self.start) >= p.dist(self.end) else self.end


Edge = Union[Segment, Arc]


def edge_length(e: Edge) -> float:
    """Euclidean length for segments, ``radius * |sweep|`` for arcs."""
    return e.length


def _cap_area(e: Edge) -> float:
    """Signed area between an arc and its chord (zero for segments)."""
    if isinstance(e, Arc):
        return 0.5 * e.radius * e.radius * (e.sweep - math.sin(e.sweep))
    return 0.0


def signed_area(edges: Sequence[Edge]) -> float:
    """Green's theorem area of a closed edge loop: chord shoelace plus arc caps."""
    total = 0.0
    for e in edges:
        a, b = e.start, e.end
        total += 0.5 * a.cross(b) + _cap_area(e)
    return total


# ---------------------------------------------------------------------------
# Intersection


@dataclass(frozen=True)
class Intersection:
    """Result of intersecting two edges: isolated points and shared sub-edges."""

    points: tuple[Point, ...] = ()
    overlaps: tuple[Edge, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.points and not self.overlaps


_EMPTY = Intersection()


def _bbox_apart(a: Edge, b: Edge, tol: float) -> bool:
    ax0, ay0, ax1, ay1 = a.bbox
    bx0, by0, bx1, by1 = b.bbox
    return ax0 > bx1 + tol or bx0 > ax1 + tol or ay0 > by1 + tol or by0 > ay1 + tol


def _dedupe(points: Iterable[Point], tol: float) -> list[Point]:
    out: list[Point] = []
    for p in points:
        if all(p.dist(q) > tol for q in out):
            out.append(p)
    return out


def _seg_seg(a: Segment, b: Segment, tol: float) -> Intersection:
    d1, d2 = a.direction, b.direction
    den = d1.cross(d2)
    w = b.start - a.start
    if abs(den) <= 1e-12:
        if abs(w.cross(d1)) > tol:
            return _EMPTY
        t0 = w.dot(d1)
        t1 = (b.end - a.start).dot(d1)
        lo, hi = max(0.0, min(t0, t1)), min(a.length, max(t0, t1))
        if hi - lo > tol:
            return Intersection(overlaps=(a.subedge(lo, hi),))
        if hi - lo >= -tol:
            return Intersection(points=(a.point_at(0.5 * (lo + hi)),))
        return _EMPTY
    t = w.cross(d2) / den
    u = w.cross(d1) / den
    if -tol <= t <= a.length + tol and -tol <= u <= b.length + tol:
        return Intersection(points=(a.point_at(min(max(t, 0.0), a.length)),))
    return _EMPTY


def _line_circle(origin: Point, direction: Point, center: Point, r: float, tol: float):
    """Parameters ``t`` along a unit-direction line meeting the circle."""
    f = origin - center
    tproj = -f.dot(direction)
    foot = origin + direction * tproj
    h = foot.dist(center)
    if h > r + tol:
        return []
    if h >= r - tol:
        return [tproj]
    m = math.sqrt(r * r - h * h)
    return [tproj - m, tproj + m]


def _seg_arc(s: Segment, a: Arc, tol: float) -> Intersection:
    pts = []
    slack = tol / a.radius
    for t in _line_circle(s.start, s.direction, a.center, a.radius, tol):
        if -tol <= t <= s.length + tol:
            p = s.point_at(min(max(t, 0.0), s.length))
            if a.contains_angle((p - a.center).angle(), slack):
                pts.append(p)
    return Intersection(points=tuple(_dedupe(pts, tol)))


def _same_circle(a: Arc, b: Arc, tol: float) -> Intersection:
    r = a.radius
    slack = tol / r
    lo1, w1 = a.ccw_interval
    lo2, w2 = b.ccw_interval
    overlaps, pts = [], []
    for k in (-1, 0, 1):
        s = max(lo1, lo2 + k * TAU)
        e = min(lo1 + w1, lo2 + k * TAU + w2)
        if e - s > slack:
            overlaps.append(Arc(a.center, r, s, e - s))
        elif e - s >= -slack:
            pts.append(a.center + Point.polar(r, 0.5 * (s + e)))
    pts = [p for p in _dedupe(pts, tol) if all(o.distance_to(p) > tol for o in overlaps)]
    return Intersection(points=tuple(pts), overlaps=tuple(overlaps))


def _arc_arc(a: Arc, b: Arc, tol: float) -> Intersection:
    v = b.center - a.center
    d = v.norm()
    r1, r2 = a.radius, b.radius
    if d <= tol and abs(r1 - r2) <= tol:
        return _same_circle(a, b, tol)
    if d <= tol or d > r1 + r2 + tol or d < abs(r1 - r2) - tol:
        return _EMPTY
    e = v * (1.0 / d)
    x = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    if abs(d - (r1 + r2)) <= tol or abs(d - abs(r1 - r2)) <= tol:
        cands = [a.center + e * math.copysign(r1, x)]
    else:
        h = math.sqrt(max(r1 * r1 - x * x, 0.0))
        base = a.center + e * x
        cands = [base + e.perp() * h, base - e.perp() * h]
    pts = []
    for p in cands:
        if (a.contains_angle((p - a.center).angle(), tol / r1)
                and b.contains_angle((p - b.center).angle(), tol / r2)):
            pts.append(p)
    return Intersection(points=tuple(_dedupe(pts, tol)))


def edge_intersect(a: Edge, b: Edge, eps: float | None = None) -> Intersection:
    """Closed-form intersection of two edges, clipped to their extents.

    Coincident supports (collinear segments, co-circular arcs) are reported
    as shared sub-edges; everything else as a finite point set.
    """
    tol = DEFAULT_TOL.length if eps is None else eps
    if _bbox_apart(a, b, tol):
        return _EMPTY
    if isinstance(a, Segment):
        if isinstance(b, Segment):
            return _seg_seg(a, b, tol)
        return _seg_arc(a, b, tol)
    if isinstance(b, Segment):
        return _seg_arc(b, a, tol)
    return _arc_arc(a, b, tol)


# ---------------------------------------------------------------------------
# Chains and regions


def _check_simple(edges: Sequence[Edge], closed: bool, tol: float) -> None:
    n = len(edges)
    for i in range(n):
        for j in range(i + 1, n):
            inter = edge_intersect(edges[i], edges[j], tol)
            if inter.is_empty:
                continue
            if inter.overlaps:
                raise GeometryError(f"edges {i} and {j} overlap")
            allowed = []
            if j == i + 1:
                allowed.append(edges[i].end)
            if closed and i == 0 and j == n - 1:
                allowed.append(edges[j].end)
            for p in inter.points:
                if not any(p.dist(q) <= 10 * tol for q in allowed):
                    raise GeometryError(f"edges {i} and {j} cross at ({p.x:.6g}, {p.y:.6g})")


@dataclass(frozen=True)
class Chain:
    """Ordered, end-to-end sequence of edges; simple by construction."""

    edges: tuple[Edge, ...]
    closed: bool = False
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        edges = tuple(self.edges)
        object.__setattr__(self, "edges", edges)
        if not edges:
            raise GeometryError("empty chain")
        tol = DEFAULT_TOL.length
        for i in range(len(edges) - 1):
            if edges[i].end.dist(edges[i + 1].start) > 10 * tol:
                raise GeometryError(f"chain broken between edges {i} and {i + 1}")
        if self.closed and edges[-1].end.dist(edges[0].start) > 10 * tol:
            raise GeometryError("closed chain does not return to its start")
        if self.check:
            _check_simple(edges, self.closed, tol)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @property
    def start(self) -> Point:
        return self.edges[0].start

    @property
    def end(self) -> Point:
        return self.edges[-1].end

    @property
    def length(self) -> float:
        return sum(e.length for e in self.edges)

    def reversed(self) -> "Chain":
        return Chain(tuple(e.reversed() for e in reversed(self.edges)), self.closed, check=False)

    def sample(self, per_edge: int = 4) -> list[Point]:
        pts = []
        for e in self.edges:
            pts.extend(e.sample(per_edge)[:-1])
        if not self.closed:
            pts.append(self.end)
        return pts

    def distance_to(self, p: Point) -> float:
        best = math.inf
        for e in self.edges:
            if e.bbox_distance(p) < best:
                best = min(best, e.distance_to(p))
        return best


@dataclass(frozen=True)
class Region:
    """Jordan region bounded by a closed, simple, counterclockwise chain."""

    boundary: Chain

    def __post_init__(self):
        if not self.boundary.closed:
            raise GeometryError("region boundary must be a closed chain")
        if signed_area(self.boundary.edges) <= 0:
            raise GeometryError("region boundary must be counterclockwise (positive area)")

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "Region":
        return cls(Chain(tuple(edges), closed=True))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.boundary.edges

    @cached_property
    def bbox(self) -> tuple[float, float, float, float]:
        boxes = [e.bbox for e in self.edges]
        return (min(b[0] for b in boxes), min(b[1] for b in boxes),
                max(b[2] for b in boxes), max(b[3] for b in boxes))


def chain_area(r: Region | Chain) -> float:
    """Area enclosed by a region (or a closed chain)."""
    c = r.boundary if isinstance(r, Region) else r
    if not c.closed:
        raise GeometryError("area is only defined for closed chains")
    return signed_area(c.edges)


def unit_disc(radius: float = 1.0, center: Point = ORIGIN) -> Region:
    """Full disc, represented by two half-circle arcs."""
    return Region.from_edges([Arc(center, radius, 0.0, math.pi),
                              Arc(center, radius, math.pi, math.pi)])


# ---------------------------------------------------------------------------
# Containment


class Location(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _ray_degenerate(edges, p: Point, d: Point, margin: float) -> bool:
    for e in edges:
        for q in (e.start, e.end):
            v = q - p
            if v.dot(d) > 0 and abs(d.cross(v)) < margin:
                return True
        if isinstance(e, Arc):
            v = e.center - p
            h = abs(d.cross(v))
            if abs(h - e.radius) < margin:
                foot = p + d * v.dot(d)
                if v.dot(d) > -e.radius and e.contains_angle((foot - e.center).angle(), 1e-6):
                    return True
    return False


def _ray_crossings(edges, p: Point, d: Point) -> int:
    count = 0
    for e in edges:
        if isinstance(e, Segment):
            w = e.start - p
            den = d.cross(e.direction)
            if den == 0:
                continue
            t = w.cross(e.direction) / den
            u = w.cross(d) / den
            if t > 0 and 0.0 <= u <= e.length:
                count += 1
        else:
            for t in _line_circle(p, d, e.center, e.radius, 0.0):
                if t > 0:
                    q = p + d * t
                    if e.contains_angle((q - e.center).angle()):
                        count += 1
    return count


def point_in_region(region: Region, p: Point, eps: float | None = None,
                    direction: float = 0.3) -> Location:
    """Classify ``p`` against a closed region.

    Points within ``eps`` of the boundary are BOUNDARY; otherwise the parity
    of ray crossings decides, re-drawing the ray direction whenever it
    grazes a vertex or is tangent to an arc.
    """
    tol = DEFAULT_TOL.length if eps is None else eps
    x0, y0, x1, y1 = region.bbox
    if p.x < x0 - tol or p.x > x1 + tol or p.y < y0 - tol or p.y > y1 + tol:
        return Location.OUTSIDE
    if region.boundary.distance_to(p) <= tol:
        return Location.BOUNDARY
    edges = region.edges
    margin = max(1e3 * tol, 1e-9)
    for attempt in range(64):
        d = Point.polar(1.0, direction + attempt * _GOLDEN_ANGLE)
        if _ray_degenerate(edges, p, d, margin):
            continue
        return Location.INSIDE if _ray_crossings(edges, p, d) % 2 else Location.OUTSIDE
    raise GeometryError(f"no non-degenerate ray found from {p}")


# ---------------------------------------------------------------------------
# Spindles


def spindle(p: Point, q: Point, r: float, eps: float | None = None) -> Region:
    """Intersection of all radius-``r`` discs containing ``p`` and ``q``.

    The lens bounded by the two radius-``r`` arcs through ``p`` and ``q``
    that are no longer than a half circle; its area is
    ``r**2 * (s - sin s)`` where ``s`` is the central angle of either arc.
    """
    tol = DEFAULT_TOL.length if eps is None else eps
    if not r > 0:
        raise GeometryError("spindle radius must be positive")
    d = p.dist(q)
    if d < tol:
        raise GeometryError("spindle of coincident points has empty interior")
    if d > 2 * r + tol:
        raise GeometryError(f"points are {d:.6g} apart, more than the diameter {2 * r:.6g}")
    m = (p + q) * 0.5
    if d >= 2 * r - tol:
        a = (q - m).angle()
        return Region.from_edges([Arc(m, r, a, math.pi), Arc(m, r, a + math.pi, math.pi)])
    u = (q - p) * (1.0 / d)
    h = math.sqrt(r * r - 0.25 * d * d)
    s = 2.0 * math.asin(d / (2.0 * r))
    upper_center = m + u.perp() * h
    lower_center = m - u.perp() * h
    # p -> q below the chord (center above), then q -> p above it.
    first = Arc(upper_center, r, (p - upper_center).angle(), s)
    second = Arc(lower_center, r, (q - lower_center).angle(), s)
    return Region.from_edges([first, second])


def spindle_angle(p: Point, q: Point, r: float) -> float:
    """Central angle of each bounding arc of the spindle."""
    return 2.0 * math.asin(min(1.0, p.dist(q) / (2.0 * r)))
