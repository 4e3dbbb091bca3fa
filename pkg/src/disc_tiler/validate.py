"""Validation and diagnostics for claimed tilings of the closed unit disc."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .congruence import congruences, find_congruence, hausdorff_on_samples, signature
from .enclosing import region_circumcircle
from .errors import PreconditionError
from .isometry import Isometry
from .kernel import (ORIGIN, TAU, Arc, Location, Point, Region, _check_simple, chain_area,
                     edge_intersect, normalize_angle, point_in_region, signed_area)
from .multicurve import curvature_class
from .tolerance import DEFAULT_TOL, Tolerance

_PROBE_STEP = 1e-6


@dataclass(frozen=True)
class Tiling:
    tiles: tuple[Region, ...]
    tol: Tolerance = DEFAULT_TOL

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(self.tiles))
        if not self.tiles:
            raise ValueError("a tiling needs at least one tile")

    def __len__(self) -> int:
        return len(self.tiles)


@dataclass(frozen=True)
class ValidationReport:
    coverage_ok: bool
    disjoint_ok: bool
    monohedral_ok: bool
    jordan_ok: bool
    area_defect: float
    witnesses: tuple[Isometry | None, ...]
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.coverage_ok and self.disjoint_ok and self.monohedral_ok and self.jordan_ok

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        lines = [
            f"coverage:   {'ok' if self.coverage_ok else 'FAIL'} (area defect {self.area_defect:.3e})",
            f"disjoint:   {'ok' if self.disjoint_ok else 'FAIL'}",
            f"monohedral: {'ok' if self.monohedral_ok else 'FAIL'}",
            f"jordan:     {'ok' if self.jordan_ok else 'FAIL'}",
        ]
        lines += [f"  - {f}" for f in self.failures]
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Rim intersections


@dataclass(frozen=True)
class RimArc:
    """Counterclockwise arc of the unit circle; ``sweep == 0`` is a point contact."""

    start: float
    sweep: float

    @property
    def length(self) -> float:
        return self.sweep

    @property
    def end(self) -> float:
        return self.start + self.sweep

    def point(self, t: float = 0.0) -> Point:
        return Point.polar(1.0, self.start + t * self.sweep)


@dataclass(frozen=True)
class TileRim:
    arcs: tuple[RimArc, ...]

    @property
    def alpha(self) -> float:
        return sum(a.sweep for a in self.arcs)

    @property
    def connected(self) -> bool:
        return len(self.arcs) == 1


@dataclass(frozen=True)
class BoundaryArcReport:
    tiles: tuple[TileRim, ...]

    @property
    def total(self) -> float:
        return sum(t.alpha for t in self.tiles)

    @property
    def disconnected(self) -> list[int]:
        return [i for i, t in enumerate(self.tiles) if not t.connected]


def _on_rim(e, tol: float) -> bool:
    return isinstance(e, Arc) and e.center.norm() <= tol and abs(e.radius - 1.0) <= tol


def _merge_intervals(intervals, tol: float) -> list[tuple[float, float]]:
    """Union of counterclockwise (start, width) intervals on the circle."""
    if not intervals:
        return []
    ivs = sorted(((lo % TAU, w) for lo, w in intervals))
    merged = [list(ivs[0])]
    for lo, w in ivs[1:]:
        cur = merged[-1]
        if lo <= cur[0] + cur[1] + tol:
            cur[1] = max(cur[1], lo + w - cur[0])
        else:
            merged.append([lo, w])
    if len(merged) > 1:
        first, last = merged[0], merged[-1]
        if last[0] + last[1] >= first[0] + TAU - tol:
            last[1] = max(last[1], first[0] + TAU + first[1] - last[0])
            merged.pop(0)
    out = []
    for lo, w in merged:
        if w >= TAU - tol:
            return [(0.0, TAU)]
        out.append((lo, w))
    return out


def _inside_interval(theta: float, lo: float, w: float, tol: float) -> bool:
    d = (theta - lo) % TAU
    return d <= w + tol or d >= TAU - tol


def tile_rim(tile: Region, tol: float = 1e-9) -> TileRim:
    """``tile`` intersected with the unit circle, as rim arcs and point contacts."""
    intervals = []
    contacts = []
    vt = 10 * tol
    for e in tile.edges:
        if _on_rim(e, tol):
            intervals.append(e.ccw_interval)
            continue
        cands = [e.start, e.end]
        if isinstance(e, Arc):
            cands.append(e.farthest_from(ORIGIN))
        for p in cands:
            if abs(p.norm() - 1.0) <= vt:
                contacts.append(p.angle())
    merged = _merge_intervals(intervals, vt)
    arcs = [RimArc(lo, w) for lo, w in merged]
    for theta in sorted(t % TAU for t in contacts):
        if any(_inside_interval(theta, a.start, a.sweep, vt) for a in arcs):
            continue
        arcs.append(RimArc(theta, 0.0))
    return TileRim(tuple(arcs))


def boundary_arcs(t: Tiling) -> BoundaryArcReport:
    """Per-tile rim sets; a tile with more than one component violates connectedness."""
    return BoundaryArcReport(tuple(tile_rim(tile, t.tol.length) for tile in t.tiles))


# ---------------------------------------------------------------------------
# Validation


def _max_radius(tile: Region) -> float:
    best = 0.0
    for e in tile.edges:
        best = max(best, e.start.norm(), e.end.norm())
        if isinstance(e, Arc):
            best = max(best, e.farthest_from(ORIGIN).norm())
    return best


def _inward_probe(e, step: float) -> Point:
    s = 0.5 * e.length
    return e.point_at(s) + e.tangent_at(s).perp() * step


def _boxes_overlap(a: Region, b: Region, tol: float) -> bool:
    ax0, ay0, ax1, ay1 = a.bbox
    bx0, by0, bx1, by1 = b.bbox
    return not (ax0 > bx1 + tol or bx0 > ax1 + tol or ay0 > by1 + tol or by0 > ay1 + tol)


def overlap_problems(a: Region, b: Region, tol: Tolerance = DEFAULT_TOL) -> list[str]:
    """Evidence that two regions share interior points (empty when interiors are disjoint)."""
    if not _boxes_overlap(a, b, tol.length):
        return []
    problems = []
    vt = tol.hausdorff
    for i, e in enumerate(a.edges):
        for j, f in enumerate(b.edges):
            inter = edge_intersect(e, f, tol.length)
            for p in inter.points:
                if min(p.dist(e.start), p.dist(e.end), p.dist(f.start), p.dist(f.end)) <= vt:
                    continue
                te = e.tangent_at(e.param_of(p))
                tf = f.tangent_at(f.param_of(p))
                if abs(te.cross(tf)) > 1e-6:
                    problems.append(f"edges {i} and {j} cross at ({p.x:.6g}, {p.y:.6g})")
    for first, second, label in ((a, b, "first"), (b, a, "second")):
        for i, e in enumerate(first.edges):
            probes = (e.midpoint, _inward_probe(e, _PROBE_STEP))
            for p in probes:
                if point_in_region(second, p, tol.length) is Location.INSIDE:
                    problems.append(f"edge {i} of the {label} tile reaches into the other tile")
                    break
    return problems


def validate(t: Tiling) -> ValidationReport:
    """Check coverage, interior disjointness, monohedrality and tile simplicity.

    Failures are described in the report rather than raised.
    """
    tol = t.tol
    failures = []

    jordan_ok = True
    for i, tile in enumerate(t.tiles):
        try:
            _check_simple(tile.edges, True, tol.length)
        except ValueError as exc:
            jordan_ok = False
            failures.append(f"tile {i} is not simple: {exc}")
        if signed_area(tile.edges) <= 0:
            jordan_ok = False
            failures.append(f"tile {i} is not counterclockwise")

    areas = [chain_area(tile) for tile in t.tiles]
    area_defect = abs(sum(areas) - math.pi)
    coverage_ok = area_defect <= tol.area
    if not coverage_ok:
        failures.append(f"tile areas sum to {sum(areas):.12g}, defect {area_defect:.3e}")
    for i, tile in enumerate(t.tiles):
        if _max_radius(tile) > 1.0 + 10 * tol.length:
            coverage_ok = False
            failures.append(f"tile {i} leaves the unit disc")
    rims = [e.ccw_interval for tile in t.tiles for e in tile.edges if _on_rim(e, tol.length)]
    covered = _merge_intervals(rims, 10 * tol.length)
    if covered != [(0.0, TAU)]:
        coverage_ok = False
        failures.append("rim arcs of the tiles do not cover the unit circle")

    disjoint_ok = True
    n = len(t.tiles)
    for i in range(n):
        for j in range(i + 1, n):
            problems = overlap_problems(t.tiles[i], t.tiles[j], tol)
            if problems:
                disjoint_ok = False
                failures.append(f"tiles {i} and {j} overlap: {problems[0]}")

    witnesses: list[Isometry | None] = [Isometry.identity()]
    monohedral_ok = True
    for j in range(1, n):
        g = find_congruence(t.tiles[0], t.tiles[j], tol.length)
        witnesses.append(g)
        if g is None:
            monohedral_ok = False
            failures.append(f"tile {j} is not congruent to tile 0")

    return ValidationReport(coverage_ok, disjoint_ok, monohedral_ok, jordan_ok,
                            area_defect, tuple(witnesses), tuple(failures))


# ---------------------------------------------------------------------------
# Diagnostics


@dataclass(frozen=True)
class TriplePoint:
    point: Point
    tiles: tuple[int, ...]

    @property
    def on_rim(self) -> bool:
        return abs(self.point.norm() - 1.0) <= 1e-7


def triple_points(t: Tiling, include_rim: bool = False) -> list[TriplePoint]:
    """Points where at least three tile boundaries meet.

    Only points in the open disc are returned unless ``include_rim``.
    """
    vt = max(10 * t.tol.length, 1e-9)
    cluster_tol = t.tol.hausdorff
    reps: list[Point] = []
    for tile in t.tiles:
        for e in tile.edges:
            p = e.start
            if all(p.dist(q) > cluster_tol for q in reps):
                reps.append(p)
    out = []
    for p in reps:
        inc = tuple(i for i, tile in enumerate(t.tiles) if tile.boundary.distance_to(p) <= vt)
        if len(inc) >= 3:
            tp = TriplePoint(p, inc)
            if include_rim or not tp.on_rim:
                out.append(tp)
    out.sort(key=lambda tp: (round(tp.point.norm(), 9), round(tp.point.angle() % TAU, 9)))
    return out


@dataclass(frozen=True)
class CenterCensus:
    locations: tuple[Location, ...]

    @property
    def interior_count(self) -> int:
        return sum(1 for loc in self.locations if loc is Location.INSIDE)

    @property
    def boundary_count(self) -> int:
        return sum(1 for loc in self.locations if loc is Location.BOUNDARY)

    @property
    def outside_count(self) -> int:
        return sum(1 for loc in self.locations if loc is Location.OUTSIDE)

    @property
    def containing_count(self) -> int:
        """Tiles containing the center as closed sets."""
        return self.interior_count + self.boundary_count

    def line(self) -> str:
        return (f"contains O: {self.containing_count} of {len(self.locations)} "
                f"({self.interior_count} interior)")


def center_containment(t: Tiling) -> CenterCensus:
    return CenterCensus(tuple(point_in_region(tile, ORIGIN, t.tol.length) for tile in t.tiles))


class Symmetry(NamedTuple):
    order: int
    rotationally_generated: bool


def _tile_permutation(t: Tiling, g: Isometry, sigs) -> list[int] | None:
    n = len(t.tiles)
    used = [False] * n
    perm = []
    for i, tile in enumerate(t.tiles):
        image = g.apply(tile)
        match = None
        for j in range(n):
            if used[j] or sigs[i] != sigs[j]:
                continue
            if t.tiles[j].boundary.distance_to(image.edges[0].midpoint) > t.tol.hausdorff:
                continue
            if hausdorff_on_samples(image, t.tiles[j]) <= t.tol.hausdorff:
                match = j
                break
        if match is None:
            return None
        used[match] = True
        perm.append(match)
    return perm


def _is_single_cycle(perm: Sequence[int]) -> bool:
    seen, j = 0, 0
    while True:
        j = perm[j]
        seen += 1
        if j == 0:
            return seen == len(perm)


def symmetry_order(t: Tiling) -> Symmetry:
    """Largest rotational symmetry order about the center, among divisors of the tile count.

    The tiling counts as rotationally generated when the rotation by
    ``2*pi/n`` cyclically permutes all ``n`` tiles.
    """
    n = len(t.tiles)
    sigs = [signature(tile, t.tol.length) for tile in t.tiles]
    best, generated = 1, n == 1
    for m in sorted((d for d in range(2, n + 1) if n % d == 0), reverse=True):
        perm = _tile_permutation(t, Isometry(TAU / m), sigs)
        if perm is None:
            continue
        if m == n:
            generated = _is_single_cycle(perm)
        best = m
        break
    return Symmetry(best, generated)


@dataclass(frozen=True)
class Separation:
    p: Point
    q: Point
    congruences: tuple[tuple[Isometry, str], ...]

    @property
    def kinds(self) -> set[str]:
        return {k for _, k in self.congruences}


def _classify(g: Isometry, p: Point, q: Point, tol: float) -> str:
    if g.reflect:
        if g(p).dist(p) <= tol and g(q).dist(q) <= tol:
            return "line_reflection"
        if g(p).dist(q) <= tol and g(q).dist(p) <= tol:
            return "bisector_reflection"
    elif g.fixes_origin and abs(abs(g.rotation) - math.pi) <= tol:
        return "point_reflection"
    return "other"


def _rim_within(rim: TileRim, lo: float, tol: float) -> bool:
    for a in rim.arcs:
        off = (a.start - lo) % TAU
        if off > TAU - tol:
            off -= TAU
        if off < -tol or off + a.sweep > math.pi + tol:
            return False
    return True


def circumdisc_separation(d1: Region, d2: Region, tol: Tolerance = DEFAULT_TOL) -> Separation:
    """Diameter separating the rim sets of two congruent tiles sharing the unit circumcircle.

    Each congruence between the tiles is classified as reflection in the
    diameter (``line_reflection``) or in the center (``point_reflection``).
    """
    found = congruences(d1, d2, tol.length)
    if not found:
        raise PreconditionError("the two regions are not congruent")
    if overlap_problems(d1, d2, tol):
        raise PreconditionError("the two regions overlap")
    for k, d in enumerate((d1, d2), 1):
        c = region_circumcircle(d)
        if c.center.norm() > tol.hausdorff or abs(c.radius - 1.0) > tol.hausdorff:
            raise PreconditionError(f"the circumcircle of region {k} is not the unit circle")
    r1, r2 = tile_rim(d1, tol.length), tile_rim(d2, tol.length)
    at = 10 * tol.length
    starts = sorted({a.start % TAU for a in r1.arcs} | {a.end % TAU for a in r2.arcs}
                    | {(a.end - math.pi) % TAU for a in r1.arcs})
    base = r1.arcs[0].start if r1.arcs else 0.0
    starts.sort(key=lambda s: (s - base) % TAU)
    for phi in starts:
        if _rim_within(r1, phi, at) and _rim_within(r2, phi + math.pi, at):
            p, q = Point.polar(1.0, phi), Point.polar(1.0, phi + math.pi)
            ct = max(tol.hausdorff, 1e-9)
            return Separation(p, q, tuple((g, _classify(g, p, q, ct)) for g in found))
    raise PreconditionError("no diameter separates the rim sets")


@dataclass(frozen=True)
class ConvexityProfile:
    convex: dict = field(default_factory=dict)
    concave: dict = field(default_factory=dict)

    def net(self, cls: float) -> float:
        return self.convex.get(cls, 0.0) - self.concave.get(cls, 0.0)


def convexity_profile(d: Region, eps: float | None = None,
                      probe_step: float = _PROBE_STEP) -> ConvexityProfile:
    """Convex versus concave arc length of a region, per radius.

    An arc is convex for the region when a probe just off its midpoint,
    toward the arc's center, lands inside the region.
    """
    tol = DEFAULT_TOL.length if eps is None else eps
    convex: dict[float, float] = {}
    concave: dict[float, float] = {}
    for e in d.edges:
        if not isinstance(e, Arc):
            continue
        m = e.midpoint
        probe = m + (e.center - m) * (probe_step / e.radius)
        bucket = convex if point_in_region(d, probe, tol) is Location.INSIDE else concave
        k = curvature_class(e)
        bucket[k] = bucket.get(k, 0.0) + e.length
    return ConvexityProfile(dict(sorted(convex.items())), dict(sorted(concave.items())))


__all__ = [
    "Tiling", "ValidationReport", "RimArc", "TileRim", "BoundaryArcReport", "TriplePoint",
    "CenterCensus", "Symmetry", "Separation", "ConvexityProfile", "validate", "boundary_arcs",
    "tile_rim", "triple_points", "center_containment", "symmetry_order",
    "circumdisc_separation", "convexity_profile", "overlap_problems", "normalize_angle",
]
