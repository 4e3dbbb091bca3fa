"""Planar rigid motions, with optional reflection."""

from __future__ import annotations

from dataclasses import dataclass

from .kernel import Arc, Chain, Edge, ORIGIN, Point, Region, Segment, normalize_angle


@dataclass(frozen=True)
class Isometry:
    """``x -> R(rotation) @ F(x) + translation`` where ``F`` mirrors in the x-axis
    when ``reflect`` is set and is the identity otherwise."""

    rotation: float = 0.0
    translation: Point = ORIGIN
    reflect: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rotation", normalize_angle(self.rotation))

    @classmethod
    def identity(cls) -> "Isometry":
        return cls()

    @classmethod
    def rotation_about(cls, center: Point, angle: float) -> "Isometry":
        return cls(angle, center - center.rotated(angle))

    @classmethod
    def reflection_in_line(cls, through: Point, angle: float) -> "Isometry":
        """Mirror in the line through ``through`` with direction angle ``angle``."""
        g = cls(2.0 * angle, ORIGIN, True)
        return cls(2.0 * angle, through - g.linear(through), True)

    @classmethod
    def from_point_pairs(cls, p0: Point, p1: Point, q0: Point, q1: Point,
                         reflect: bool) -> "Isometry":
        """The motion taking ``p0 -> q0`` and the direction of ``p1 - p0`` onto ``q1 - q0``."""
        v = p1 - p0
        if reflect:
            v = Point(v.x, -v.y)
        rot = (q1 - q0).angle() - v.angle()
        g = cls(rot, ORIGIN, reflect)
        return cls(rot, q0 - g.linear(p0), reflect)

    def linear(self, p: Point) -> Point:
        if self.reflect:
            p = Point(p.x, -p.y)
        return p.rotated(self.rotation)

    def __call__(self, p: Point) -> Point:
        return self.linear(p) + self.translation

    def compose(self, other: "Isometry") -> "Isometry":
        """``self o other``: apply ``other`` first."""
        rot = self.rotation + (-other.rotation if self.reflect else other.rotation)
        return Isometry(rot, self.linear(other.translation) + self.translation,
                        self.reflect != other.reflect)

    __matmul__ = compose

    def inverse(self) -> "Isometry":
        rot = self.rotation if self.reflect else -self.rotation
        g = Isometry(rot, ORIGIN, self.reflect)
        return Isometry(rot, -g.linear(self.translation), self.reflect)

    @property
    def fixes_origin(self) -> bool:
        return self.translation.norm() <= 1e-9

    def apply_edge(self, e: Edge) -> Edge:
        if isinstance(e, Segment):
            return Segment(self(e.start), self(e.end))
        if self.reflect:
            start, sweep = self.rotation - e.start_angle, -e.sweep
        else:
            start, sweep = self.rotation + e.start_angle, e.sweep
        return Arc(self(e.center), e.radius, start, sweep)

    def apply(self, c):
        """Image of a point, edge, chain or region."""
        if isinstance(c, Point):
            return self(c)
        if isinstance(c, Region):
            chain = self.apply(c.boundary)
            if self.reflect:
                chain = chain.reversed()
            return Region(chain)
        if isinstance(c, Chain):
            return Chain(tuple(self.apply_edge(e) for e in c.edges), c.closed, check=False)
        return self.apply_edge(c)

    def is_close(self, other: "Isometry", tol: float = 1e-9) -> bool:
        return (self.reflect == other.reflect
                and abs(normalize_angle(self.rotation - other.rotation)) <= tol
                and self.translation.dist(other.translation) <= tol)


def apply_isometry(g: Isometry, c):
    """Pointwise image of ``c`` under ``g``.

    Radii and lengths are preserved exactly; a reflection flips arc sweeps.
    Regions are re-oriented so the image stays counterclockwise.
    """
    return g.apply(c)


def rotation_about_origin(angle: float) -> Isometry:
    return Isometry(angle)


def operator_distance(g: Isometry, h: Isometry, probes=None) -> float:
    """Largest displacement between ``g`` and ``h`` over a set of probe points."""
    if probes is None:
        probes = [Point(1, 0), Point(0, 1), Point(-0.7, 0.3), ORIGIN, Point(2.5, -1.5)]
    return max(g(p).dist(h(p)) for p in probes)

