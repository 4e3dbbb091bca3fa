"""Congruence of arc chains via canonical boundary signatures.

A chain is described by the cyclic (or, for open chains, linear) sequence
of per-edge features ``(kind, length, signed curvature, turn at the next
joint)``. Isometries act on that sequence only through cyclic shifts,
traversal reversal and a global sign flip (reflection), so the
lexicographic minimum over those variants is an isometry invariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .isometry import Isometry
from .kernel import TAU, Arc, Chain, Edge, Region, Segment

SEGMENT_KIND = 0
ARC_KIND = 1


def _as_chain(c) -> Chain:
    return c.boundary if isinstance(c, Region) else c


def _turn(e: Edge, f: Edge) -> float:
    t0 = e.tangent_at(e.length)
    t1 = f.tangent_at(0.0)
    return math.atan2(t0.cross(t1), t0.dot(t1))


def _mergeable(e: Edge, f: Edge, tol: float) -> bool:
    if isinstance(e, Segment) and isinstance(f, Segment):
        return e.direction.dot(f.direction) > 0 and abs(e.direction.cross(f.direction)) <= tol
    if isinstance(e, Arc) and isinstance(f, Arc):
        return (e.center.dist(f.center) <= tol and abs(e.radius - f.radius) <= tol
                and (e.sweep > 0) == (f.sweep > 0))
    return False


def _join(e: Edge, f: Edge) -> Edge:
    if isinstance(e, Segment):
        return Segment(e.start, f.end)
    return Arc(e.center, e.radius, e.start_angle, e.sweep + f.sweep)


def merge_edges(edges: Sequence[Edge], closed: bool, tol: float = 1e-9) -> list[Edge] | None:
    """Fuse consecutive edges lying on one line or one circle.

    Returns None when a closed chain is a single full circle.
    """
    out = list(edges)
    i = 0
    while i < len(out) - 1:
        if _mergeable(out[i], out[i + 1], tol):
            if isinstance(out[i], Arc) and abs(out[i].sweep + out[i + 1].sweep) >= TAU - 1e-12:
                return None
            out[i] = _join(out[i], out[i + 1])
            del out[i + 1]
        else:
            i += 1
    if closed and len(out) > 1 and _mergeable(out[-1], out[0], tol):
        if isinstance(out[0], Arc) and abs(out[-1].sweep + out[0].sweep) >= TAU - 1e-12:
            return None
        out[0] = _join(out[-1], out[0])
        out.pop()
    return out


def features(edges: Sequence[Edge], closed: bool) -> list[tuple[int, float, float, float]]:
    n = len(edges)
    out = []
    for i, e in enumerate(edges):
        kind = ARC_KIND if isinstance(e, Arc) else SEGMENT_KIND
        if i + 1 < n:
            turn = _turn(e, edges[i + 1])
        elif closed:
            turn = _turn(e, edges[0])
        else:
            turn = 0.0
        out.append((kind, e.length, e.curvature(), turn))
    return out


def _mirror(feats):
    return [(k, l, -c, -t) for k, l, c, t in feats]


def _reversed_edges(edges: Sequence[Edge]) -> list[Edge]:
    return [e.reversed() for e in reversed(edges)]


def _variants(edges: Sequence[Edge], closed: bool):
    """Every feature sequence an isometric copy of the chain can present."""
    for seq in (list(edges), _reversed_edges(edges)):
        f = features(seq, closed)
        for mirrored in (False, True):
            g = _mirror(f) if mirrored else f
            shifts = range(len(g)) if closed else (0,)
            for s in shifts:
                yield g[s:] + g[:s]


def _quantize(feats, grid: float):
    return tuple((k, round(l / grid), round(c / grid), round(t / grid)) for k, l, c, t in feats)


@dataclass(frozen=True, eq=False)
class Signature:
    """Canonical congruence invariant of a chain.

    ``features`` is the lexicographically least quantized variant. Equality
    tolerates one grid step per component, so values straddling a rounding
    boundary still compare equal.
    """

    features: tuple
    closed: bool
    grid: float
    variants: frozenset
    circle_radius: float | None = None

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        if self.closed != other.closed:
            return False
        if (self.circle_radius is None) != (other.circle_radius is None):
            return False
        if self.circle_radius is not None:
            return abs(self.circle_radius - other.circle_radius) <= max(self.grid, other.grid)
        if len(self.features) != len(other.features):
            return False
        period = round(TAU / min(self.grid, other.grid))
        return any(_close_ints(self.features, v, period) for v in other.variants)

    def __hash__(self):
        return hash((self.closed, len(self.features), self.circle_radius is None))


def _close_ints(a, b, period) -> bool:
    for fa, fb in zip(a, b):
        if fa[0] != fb[0]:
            return False
        if abs(fa[1] - fb[1]) > 1 or abs(fa[2] - fb[2]) > 1:
            return False
        dt = abs(fa[3] - fb[3]) % period
        if min(dt, period - dt) > 1:
            return False
    return True


def signature(c, eps: float = 1e-12) -> Signature:
    """Canonical signature of a chain or region on an ``eps`` quantization grid."""
    chain = _as_chain(c)
    merged = merge_edges(chain.edges, chain.closed, eps)
    if merged is None:
        e = chain.edges[0]
        return Signature((), True, eps, frozenset(), circle_radius=e.radius)
    variants = frozenset(_quantize(v, eps) for v in _variants(merged, chain.closed))
    return Signature(min(variants), chain.closed, eps, variants)


def _features_match(fa, fb, tol: float) -> bool:
    for (ka, la, ca, ta), (kb, lb, cb, tb) in zip(fa, fb):
        if ka != kb or abs(la - lb) > tol or abs(ca - cb) > tol:
            return False
        dt = abs(ta - tb) % TAU
        if min(dt, TAU - dt) > tol:
            return False
    return True


def _maps_onto(g: Isometry, src: Sequence[Edge], dst: Sequence[Edge], tol: float) -> bool:
    for e, f in zip(src, dst):
        if (g(e.start).dist(f.start) > tol or g(e.end).dist(f.end) > tol
                or g(e.midpoint).dist(f.midpoint) > tol):
            return False
    return True


def _sort_key(g: Isometry):
    return (round(abs(g.rotation), 9), round(g.translation.norm(), 9), g.reflect)


def congruences(a, b, eps: float = 1e-9) -> list[Isometry]:
    """All isometries taking chain (or region) ``a`` onto ``b``, sorted by preference."""
    ca, cb = _as_chain(a), _as_chain(b)
    if ca.closed != cb.closed:
        return []
    tol = max(eps, 1e-12)
    ea = merge_edges(ca.edges, ca.closed, tol)
    eb = merge_edges(cb.edges, cb.closed, tol)
    if ea is None or eb is None:
        if ea is None and eb is None:
            ra, rb = ca.edges[0], cb.edges[0]
            if abs(ra.radius - rb.radius) <= tol:
                return [Isometry(0.0, rb.center - ra.center)]
        return []
    if len(ea) != len(eb):
        return []
    n = len(ea)
    closed = ca.closed
    fa = features(ea, closed)
    fa_mirror = _mirror(fa)
    anchor = max(range(n), key=lambda i: ea[i].start.dist(ea[i].end))
    found: list[Isometry] = []
    for target in (list(eb), _reversed_edges(eb)):
        fb = features(target, closed)
        for reflect in (False, True):
            src = fa_mirror if reflect else fa
            for s in (range(n) if closed else (0,)):
                shifted = fb[s:] + fb[:s]
                if not _features_match(src, shifted, tol):
                    continue
                dst = target[s:] + target[:s]
                e, f = ea[anchor], dst[anchor]
                g = Isometry.from_point_pairs(e.start, e.end, f.start, f.end, reflect)
                if _maps_onto(g, ea, dst, 10 * tol) and not any(g.is_close(h) for h in found):
                    found.append(g)
    found.sort(key=_sort_key)
    return found


def find_congruence(a, b, eps: float = 1e-9) -> Isometry | None:
    """An isometry ``g`` with ``g(a) = b``, or None.

    Among several valid motions the one minimizing
    ``(|rotation|, |translation|, reflect)`` is returned.
    """
    found = congruences(a, b, eps)
    return found[0] if found else None


def hausdorff_on_samples(a, b, per_edge: int = 4) -> float:
    """Symmetric Hausdorff distance between two chains, measured on boundary samples."""
    ca, cb = _as_chain(a), _as_chain(b)
    d1 = max(cb.distance_to(p) for p in ca.sample(per_edge))
    d2 = max(ca.distance_to(p) for p in cb.sample(per_edge))
    return max(d1, d2)


def congruent_point_sets(g: Isometry, a, b, tol: float) -> bool:
    """Check that every endpoint and midpoint of ``g(a)`` lies within ``tol`` of ``b``."""
    ca, cb = _as_chain(a), _as_chain(b)
    for e in ca.edges:
        for p in (e.start, e.midpoint, e.end):
            if cb.distance_to(g(p)) > tol:
                return False
    return True

