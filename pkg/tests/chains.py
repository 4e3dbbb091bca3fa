"""Seeded random arc chains built turtle-style, for congruence testing."""

import math
import random

from disc_tiler.errors import GeometryError
from disc_tiler.isometry import Isometry
from disc_tiler.kernel import Arc, Chain, Point, Segment


def random_steps(rng: random.Random, n_edges: int):
    """Intrinsic description: list of ("seg", length, turn) / ("arc", radius, sweep, turn)."""
    steps = []
    for _ in range(n_edges):
        turn = rng.choice((-1, 1)) * rng.uniform(0.3, 2.2)
        if rng.random() < 0.4:
            steps.append(("seg", rng.uniform(0.3, 1.5), turn))
        else:
            sweep = rng.choice((-1, 1)) * rng.uniform(0.3, 1.5)
            steps.append(("arc", rng.uniform(0.5, 2.0), sweep, turn))
    return steps


def chain_from_steps(steps, start=Point(0.0, 0.0), heading=0.0) -> Chain:
    edges = []
    pos = start
    for step in steps:
        if step[0] == "seg":
            _, length, turn = step
            end = pos + Point.polar(length, heading)
            edges.append(Segment(pos, end))
        else:
            _, r, sweep, turn = step
            side = 1.0 if sweep > 0 else -1.0
            center = pos + Point.polar(r, heading + side * math.pi / 2)
            arc = Arc(center, r, (pos - center).angle(), sweep)
            edges.append(arc)
            end = arc.end
            heading += sweep
        pos = end
        heading += turn
    return Chain(tuple(edges))


def lengthen(steps, index: int, delta: float):
    out = list(steps)
    s = out[index]
    if s[0] == "seg":
        out[index] = ("seg", s[1] + delta, s[2])
    else:
        r, sweep = s[1], s[2]
        out[index] = ("arc", r, sweep + math.copysign(delta / r, sweep), s[3])
    return out


def random_chain(rng: random.Random, n_min=3, n_max=6):
    """A simple open chain and the steps that built it."""
    while True:
        steps = random_steps(rng, rng.randint(n_min, n_max))
        try:
            return chain_from_steps(steps), steps
        except GeometryError:
            continue


def random_isometry(rng: random.Random) -> Isometry:
    return Isometry(rng.uniform(-math.pi, math.pi),
                    Point(rng.uniform(-5, 5), rng.uniform(-5, 5)),
                    rng.random() < 0.5)
