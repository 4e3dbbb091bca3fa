"""Multicurves of arcs and segments, and their equidecomposability.

Two pieces of constant curvature are congruent exactly when they share a
curvature class (segment, or arc of a given radius) and a length. So two
arc/segment multicurves are equidecomposable iff their per-class total
lengths agree, and a witness is obtained by laying each class out end to
end on both sides and cutting wherever either side has a breakpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import GeometryError, PreconditionError
from .isometry import Isometry
from .kernel import Arc, Chain, Edge, Segment, edge_intersect
from .tolerance import DEFAULT_TOL

SEGMENT_CLASS = 0.0


def curvature_class(e: Edge) -> float:
    """0.0 for segments, the (unsigned) radius for arcs, rounded to 12 digits."""
    if isinstance(e, Segment):
        return SEGMENT_CLASS
    return float(f"{e.radius:.12g}")


@dataclass(frozen=True)
class LengthProfile:
    """Total length per curvature class."""

    totals: Mapping[float, float]

    def __post_init__(self):
        object.__setattr__(self, "totals", dict(sorted(self.totals.items())))

    def __getitem__(self, cls: float) -> float:
        return self.totals.get(cls, 0.0)

    def classes(self) -> list[float]:
        return list(self.totals)

    def __add__(self, other: "LengthProfile") -> "LengthProfile":
        out = dict(self.totals)
        for k, v in other.totals.items():
            out[k] = out.get(k, 0.0) + v
        return LengthProfile(out)

    def __sub__(self, other: "LengthProfile") -> "LengthProfile":
        out = dict(self.totals)
        for k, v in other.totals.items():
            out[k] = out.get(k, 0.0) - v
        return LengthProfile(out)

    def close_to(self, other: "LengthProfile", eps: float = 1e-9) -> bool:
        keys = set(self.totals) | set(other.totals)
        return all(abs(self[k] - other[k]) <= eps for k in keys)


def _as_open_chain(m) -> Chain:
    if isinstance(m, Chain):
        return m
    return Chain((m,))


@dataclass(frozen=True)
class Multicurve:
    """Finite family of simple open curves meeting only at shared endpoints.

    A point of the plane lies on at most one member, or is an endpoint of
    exactly two.
    """

    members: tuple[Chain, ...]

    def __post_init__(self):
        members = tuple(_as_open_chain(m) for m in self.members)
        object.__setattr__(self, "members", members)
        for i, m in enumerate(members):
            if m.closed:
                raise GeometryError(f"member {i} is closed; multicurve members are open curves")
        self._check_disjoint(DEFAULT_TOL.length * 10)

    def _check_disjoint(self, tol: float) -> None:
        members = self.members
        ends = []
        for m in members:
            ends.extend((m.start, m.end))
        for p in ends:
            if sum(1 for q in ends if q.dist(p) <= tol) > 2:
                raise GeometryError(f"point ({p.x:.6g}, {p.y:.6g}) is an endpoint of more than two members")
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                a, b = members[i], members[j]
                allowed = [p for p in (a.start, a.end) if any(p.dist(q) <= tol for q in (b.start, b.end))]
                for e in a.edges:
                    for f in b.edges:
                        inter = edge_intersect(e, f)
                        if inter.overlaps:
                            raise GeometryError(f"members {i} and {j} overlap")
                        for p in inter.points:
                            if not any(p.dist(q) <= tol for q in allowed):
                                raise GeometryError(f"members {i} and {j} meet away from shared endpoints")

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "Multicurve":
        return cls(tuple(Chain((e,)) for e in edges))

    @classmethod
    def from_chain(cls, chain: Chain) -> "Multicurve":
        """Split a chain (open or closed) into single-edge members."""
        return cls.from_edges(chain.edges)

    @property
    def edges(self) -> list[Edge]:
        return [e for m in self.members for e in m.edges]

    def distance_to(self, p) -> float:
        return min(m.distance_to(p) for m in self.members) if self.members else math.inf


def length_profile(m: Multicurve) -> LengthProfile:
    totals: dict[float, float] = {}
    for e in m.edges:
        k = curvature_class(e)
        totals[k] = totals.get(k, 0.0) + e.length
    return LengthProfile(totals)


@dataclass(frozen=True)
class PiecePair:
    """A piece of the left family, its congruent partner on the right, and the motion."""

    left: Edge
    right: Edge
    isometry: Isometry


@dataclass(frozen=True)
class Decomposition:
    equidecomposable: bool
    left_profile: LengthProfile
    right_profile: LengthProfile
    pairs: tuple[PiecePair, ...] = ()

    def __bool__(self) -> bool:
        return self.equidecomposable


def _piece_motion(a: Edge, b: Edge) -> Isometry:
    reflect = isinstance(a, Arc) and (a.sweep > 0) != (b.sweep > 0)
    return Isometry.from_point_pairs(a.start, a.end, b.start, b.end, reflect)


def _cut_and_match(left: list[Edge], right: list[Edge], absorb: float) -> list[PiecePair]:
    pairs = []
    i = j = 0
    off_l = off_r = 0.0
    while i < len(left) and j < len(right):
        e, f = left[i], right[j]
        step = min(e.length - off_l, f.length - off_r)
        pe = e.subedge(off_l, off_l + step)
        pf = f.subedge(off_r, off_r + step)
        pairs.append(PiecePair(pe, pf, _piece_motion(pe, pf)))
        off_l += step
        off_r += step
        if e.length - off_l <= absorb:
            i, off_l = i + 1, 0.0
        if f.length - off_r <= absorb:
            j, off_r = j + 1, 0.0
    return pairs


def equidecomposable(f: Multicurve, g: Multicurve, eps: float = 1e-9) -> Decomposition:
    """Decide equidecomposability of two arc/segment multicurves.

    When the answer is yes, ``pairs`` partitions both families into
    matched congruent pieces (each member is cut greedily, the longer
    current piece trimmed to the shorter).
    """
    pf, pg = length_profile(f), length_profile(g)
    if not pf.close_to(pg, eps):
        return Decomposition(False, pf, pg)
    absorb = max(eps, 2 * DEFAULT_TOL.length)
    pairs = []
    for cls in sorted(set(pf.classes()) | set(pg.classes())):
        left = [e for e in f.edges if curvature_class(e) == cls]
        right = [e for e in g.edges if curvature_class(e) == cls]
        pairs.extend(_cut_and_match(left, right, absorb))
    return Decomposition(True, pf, pg, tuple(pairs))


def _coerce(m) -> Multicurve:
    if isinstance(m, Multicurve):
        return m
    return Multicurve(tuple(m))


def _check_contained(sub: Multicurve, full: Multicurve, tol: float, name: str) -> None:
    for e in sub.edges:
        for p in (e.start, e.midpoint, e.end):
            if full.distance_to(p) > tol:
                raise PreconditionError(f"{name} is not contained in its parent family")


def subtract_decomposition(f, f_sub, g, g_sub, eps: float = 1e-9) -> Decomposition:
    """Decide whether ``f - f_sub`` and ``g - g_sub`` are equidecomposable.

    Sub-families are given as multicurves lying on their parents; the
    complements are compared through their length profiles.
    """
    f, f_sub, g, g_sub = (_coerce(m) for m in (f, f_sub, g, g_sub))
    tol = max(eps, DEFAULT_TOL.length) * 10
    _check_contained(f_sub, f, tol, "f'")
    _check_contained(g_sub, g, tol, "g'")
    left = length_profile(f) - length_profile(f_sub)
    right = length_profile(g) - length_profile(g_sub)
    return Decomposition(left.close_to(right, eps), left, right)
