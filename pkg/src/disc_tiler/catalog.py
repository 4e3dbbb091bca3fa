"""Named disc tilings, rotationally generated families, and fuzzing inputs."""

from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

from .errors import CatalogError, GeometryError
from .isometry import Isometry
from .kernel import ORIGIN, TAU, Arc, Chain, Edge, Point, Region, Segment, edge_intersect, normalize_angle, unit_disc
from .tolerance import DEFAULT_TOL
from .validate import Tiling, validate

NAMES = ("rot2", "rot3", "hw12", "petal12", "hw12flip")


def _u(deg: float) -> Point:
    return Point.polar(1.0, math.radians(deg))


def _unit_arc(center: Point, start_deg: float, sweep_deg: float) -> Arc:
    return Arc(center, 1.0, math.radians(start_deg), math.radians(sweep_deg))


def _rim(start_deg: float, sweep_deg: float) -> Arc:
    return _unit_arc(ORIGIN, start_deg, sweep_deg)


# ---------------------------------------------------------------------------
# Rotational generation


@dataclass(frozen=True)
class GeneratorCurve:
    """Simple chain from the center to the unit circle.

    ``sector`` optionally records the angular width the curve is meant to
    be rotated by; it is informational and checked again by ``build_rotgen``.
    """

    chain: Chain
    sector: float | None = None

    def __post_init__(self):
        if self.chain.closed:
            raise CatalogError("a generator curve must be open")
        tol = 10 * DEFAULT_TOL.length
        if self.chain.start.norm() > tol:
            raise CatalogError("a generator curve must start at the center")
        if abs(self.chain.end.norm() - 1.0) > tol:
            raise CatalogError("a generator curve must end on the unit circle")

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], sector: float | None = None) -> "GeneratorCurve":
        try:
            return cls(Chain(tuple(edges)), sector)
        except GeometryError as exc:
            raise CatalogError(f"generator is not a simple chain: {exc}") from exc

    @property
    def end_angle(self) -> float:
        return self.chain.end.angle()


def _outer_radius(e: Edge) -> float:
    r = max(e.start.norm(), e.end.norm())
    if isinstance(e, Arc):
        r = max(r, e.farthest_from(ORIGIN).norm())
    return r


def _check_generator(g: GeneratorCurve, n: int) -> None:
    tol = 10 * DEFAULT_TOL.length
    edges = g.chain.edges
    for i, e in enumerate(edges):
        if _outer_radius(e) > 1.0 + tol:
            raise CatalogError(f"generator edge {i} leaves the unit disc")
    for j in range(1, n):
        rot = Isometry(TAU * j / n)
        images = [rot.apply_edge(f) for f in edges]
        for e in edges:
            for f in images:
                if any(p.norm() > tol for p in edge_intersect(e, f).points):
                    raise CatalogError(
                        f"generator meets its rotation by 2pi*{j}/{n} away from the center")


def build_rotgen(g: GeneratorCurve, n: int) -> Tiling:
    """Tiling by ``n`` rotated copies of the generator.

    Tile ``j`` is bounded by the ``j``-th copy, the rim arc to the next
    copy's endpoint, and the next copy traversed back to the center.
    """
    if n < 1:
        raise CatalogError("n must be at least 1")
    if n == 1:
        return Tiling((unit_disc(),))
    _check_generator(g, n)
    copies = [Isometry(TAU * j / n).apply(g.chain) for j in range(n + 1)]
    phi = g.end_angle
    tiles = []
    for j in range(n):
        rim = Arc(ORIGIN, 1.0, phi + TAU * j / n, TAU / n)
        edges = list(copies[j].edges) + [rim] + list(copies[j + 1].reversed().edges)
        try:
            tiles.append(Region.from_edges(edges))
        except GeometryError as exc:
            raise CatalogError(f"tile {j} is not a Jordan region: {exc}") from exc
    return Tiling(tuple(tiles))


def radius_generator(angle: float = 0.0) -> GeneratorCurve:
    return GeneratorCurve.from_edges([Segment(ORIGIN, Point.polar(1.0, angle))])


def unit_arc_generator() -> GeneratorCurve:
    """The 60 degree arc of radius 1 from the center to (1, 0), bulging clockwise."""
    return GeneratorCurve.from_edges([_unit_arc(_u(-60), 120, -60)])


# ---------------------------------------------------------------------------
# Named constructions


def _hexagon_red(k: int) -> Arc:
    """Unit arc from the hexagon vertex at 60k degrees to the center, about the previous vertex."""
    return _unit_arc(_u(60 * (k - 1)), 60 * k + 60, 60)


def _hw12() -> list[Region]:
    tiles = []
    for k in range(6):
        vk = _u(60 * k)
        c = vk - _u(60 * k + 30)
        a = [_rim(60 * k, 60), _unit_arc(vk, 60 * k + 120, 30), _unit_arc(c, 60 * k + 90, -60)]
        b = [_unit_arc(_u(60 * (k - 1)), 60 * k + 120, -60), _unit_arc(c, 60 * k + 30, 60),
             _unit_arc(vk, 60 * k + 150, 30)]
        tiles += [Region.from_edges(a), Region.from_edges(b)]
    return tiles


def petal_cut_point(k: int) -> Point:
    """Where the straight cut of sector ``k`` meets the unit arc ending at vertex ``k``.

    The cut runs from vertex ``k+1`` through the point at radius 1/2 in
    direction 60k degrees; the intersection with that arc is found
    numerically rather than assumed.
    """
    red = _hexagon_red(k)
    a = _u(60 * (k + 1))
    through = Point.polar(0.5, math.radians(60 * k))
    far = a + (through - a) * 4.0
    hits = [p for p in edge_intersect(Segment(a, far), red).points if p.norm() > 1e-6
            and p.dist(red.start) > 1e-6]
    if len(hits) != 1:
        raise CatalogError(f"petal cut {k} meets its arc {len(hits)} times")
    return hits[0]


def _petal12() -> list[Region]:
    tiles = []
    for k in range(6):
        vprev, vnext = _u(60 * (k - 1)), _u(60 * (k + 1))
        m = petal_cut_point(k)
        red = _hexagon_red(k)
        a_mid = (m - vprev).angle()
        a_start = red.start_angle
        a_end = red.start_angle + red.sweep
        outer = [_rim(60 * k, 60), Segment(vnext, m),
                 Arc(vprev, 1.0, a_mid, normalize_angle(a_start - a_mid))]
        inner = [Arc(vprev, 1.0, a_end, normalize_angle(a_mid - a_end)),
                 Segment(m, vnext), _hexagon_red(k + 1)]
        tiles += [Region.from_edges(outer), Region.from_edges(inner)]
    return tiles


def flipped_red(x: int) -> Arc:
    """Unit arc from the rim point at 30x degrees to the center (rotation offset 30x + 60)."""
    return _unit_arc(_u(30 * x - 60), 30 * x + 60, 60)


def flipped_orange(x: int) -> Arc:
    """Unit arc from the rim point at 30x degrees, rotation offset 30x + 30."""
    return _unit_arc(_u(30 * x) - _u(30 * x + 30), 30 * x + 30, 60)


def flipped_layout_arcs(reds: Iterable[int], orange_at: int) -> list[Arc]:
    """Internal arcs of a twelve-point layout: the listed reds plus one orange arc."""
    return [flipped_red(x) for x in reds] + [flipped_orange(orange_at)]


HW12FLIP_REDS = (0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 11)
HW12FLIP_ORANGE = 7


def _hw12flip() -> list[Region]:
    tiles = []
    for k in (0, 1, 2, 3, 4, 5, 6, 9, 10, 11):
        tiles.append(Region.from_edges([
            _unit_arc(_u(30 * k - 60), 30 * k + 120, -60),
            _rim(30 * k, 30),
            flipped_red(k + 1),
        ]))
    orange = flipped_orange(HW12FLIP_ORANGE)
    c9 = _u(210)
    tiles.append(Region.from_edges([_rim(210, 60), _unit_arc(c9, 330, 30), orange.reversed()]))
    tiles.append(Region.from_edges([flipped_red(7).reversed(), orange, _unit_arc(c9, 360, 30)]))
    return tiles


def _raw(name: str) -> Tiling:
    if name == "rot2":
        return build_rotgen(radius_generator(), 2)
    if name == "rot3":
        return build_rotgen(unit_arc_generator(), 3)
    if name == "hw12":
        return Tiling(tuple(_hw12()))
    if name == "petal12":
        return Tiling(tuple(_petal12()))
    if name == "hw12flip":
        return Tiling(tuple(_hw12flip()))
    raise CatalogError(f"unknown tiling {name!r}; known: {', '.join(NAMES)}")


@lru_cache(maxsize=None)
def build_named(name: str) -> Tiling:
    """One of the named constructions, checked by ``validate`` before it is returned."""
    t = _raw(name)
    report = validate(t)
    if not report.ok:
        raise CatalogError(f"construction {name!r} failed validation:\n{report.summary()}")
    return t


# ---------------------------------------------------------------------------
# Random generators


def _polar_monotone(e: Edge, tol: float = 1e-12) -> bool:
    """True when the polar angle never decreases along ``e``."""
    if isinstance(e, Segment):
        return e.start.cross(e.direction) >= -tol
    c, r = e.center, e.radius
    lo, w = e.ccw_interval
    ts = [lo, lo + w]
    if e.sweep > 0:
        star = (-c).angle() if c.norm() > 0 else lo
        if e.contains_angle(star):
            ts.append(star)
        return all(c.dot(Point.polar(1.0, t)) + r >= -tol for t in ts)
    star = c.angle() if c.norm() > 0 else lo
    if e.contains_angle(star):
        ts.append(star)
    return all(c.dot(Point.polar(1.0, t)) + r <= tol for t in ts)


def _initial_direction(e: Edge) -> float:
    return math.atan2(*reversed(tuple(e.tangent_at(0.0))))


def _random_arc(a: Point, b: Point, rng: random.Random) -> Arc | None:
    chord = a.dist(b)
    r = rng.uniform(max(0.5, chord / 2), 3.0)
    h = math.sqrt(max(r * r - chord * chord / 4, 0.0))
    ccw = rng.random() < 0.5
    u = (b - a) * (1.0 / chord)
    # A minor counterclockwise arc has its center to the left of the chord.
    center = (a + b) * 0.5 + u.perp() * (h if ccw else -h)
    try:
        arc = Arc.from_points(center, a, b, ccw)
    except GeometryError:
        return None
    if abs(arc.sweep) >= math.pi:
        return None
    return arc


def random_generator(seed: int, n: int, m: int, max_tries: int = 500) -> GeneratorCurve:
    """Deterministic random generator of ``m`` edges for ``n``-fold rotation.

    The curve is monotone in polar angle and spans strictly less than the
    sector width ``2*pi/n``, so its rotated copies meet only at the center.
    """
    if n < 1 or not 1 <= m <= 8:
        raise CatalogError("random_generator needs n >= 1 and 1 <= m <= 8")
    rng = random.Random(f"disc-tiler:{seed}:{n}:{m}")
    width = TAU / n
    span_max = min(0.8 * width, 0.9 * math.pi)
    for _ in range(max_tries):
        radii = sorted(rng.uniform(0.05, 0.95) for _ in range(m - 1)) + [1.0]
        base = rng.uniform(0.0, width - span_max)
        angles = sorted(base + rng.uniform(0.0, span_max) for _ in range(m))
        pts = [ORIGIN] + [Point.polar(r, t) for r, t in zip(radii, angles)]
        edges = []
        for i in range(m):
            a, b = pts[i], pts[i + 1]
            e = None
            if rng.random() >= 0.35:
                e = _random_arc(a, b, rng)
                if e is not None and not _arc_acceptable(e, i == m - 1):
                    e = None
            edges.append(e if e is not None else Segment(a, b))
        if not _span_ok(edges, span_max):
            continue
        try:
            return GeneratorCurve.from_edges(edges, width)
        except CatalogError:
            continue
    raise CatalogError(f"no admissible generator after {max_tries} tries (seed={seed}, n={n}, m={m})")


def _arc_acceptable(e: Arc, last: bool) -> bool:
    if not _polar_monotone(e):
        return False
    far = e.farthest_from(ORIGIN)
    if last:
        return far.dist(e.end) <= 1e-9 and e.tangent_at(e.length).dot(e.end) > 0.05
    return far.norm() < 1.0 - 1e-6


def _span_ok(edges: list[Edge], span_max: float) -> bool:
    start = _initial_direction(edges[0])
    end = edges[-1].end.angle()
    total = (end - start) % TAU
    if total > span_max:
        return False
    # Every vertex must also fall within the span, in polar order.
    prev = 0.0
    for e in edges:
        t = (e.end.angle() - start) % TAU
        if t < prev - 1e-12 or t > total + 1e-12:
            return False
        prev = t
    return True


# ---------------------------------------------------------------------------
# Arc-length equation scan


class ArcEquationHit(NamedTuple):
    k: int
    n: int
    residual: float


def arc_equation_residual(k, n, corrected: bool = False):
    """``|sin(2pi/k) - pi(2/k - c/n)|`` with ``c = 4``, or ``c = 2`` when ``corrected``."""
    c = 2.0 if corrected else 4.0
    k = np.asarray(k, dtype=float)
    n = np.asarray(n, dtype=float)
    return np.abs(np.sin(TAU / k) - math.pi * (2.0 / k - c / n))


def scan_arc_equation(k_max: int, n_max: int, delta: float, corrected: bool = False,
                      n_min: int = 1) -> list[ArcEquationHit]:
    """All ``(k, n)`` with ``3 <= k <= k_max`` and ``n_min <= n <= n_max`` whose residual is at most ``delta``."""
    if k_max < 3 or n_max < 1 or not delta > 0:
        raise CatalogError("scan needs k_max >= 3, n_max >= 1 and delta > 0")
    ks = np.arange(3, k_max + 1)[:, None]
    ns = np.arange(max(1, n_min), n_max + 1)[None, :]
    res = arc_equation_residual(ks, ns, corrected)
    ii, jj = np.nonzero(res <= delta)
    return [ArcEquationHit(int(ks[i, 0]), int(ns[0, j]), float(res[i, j])) for i, j in zip(ii, jj)]


def hits_to_csv(hits: Iterable[ArcEquationHit]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "n", "residual"])
    for h in hits:
        w.writerow([h.k, h.n, repr(h.residual)])
    return buf.getvalue()
