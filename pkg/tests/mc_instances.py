"""Seeded arc/segment multicurve instances with rational lengths."""

import random
from fractions import Fraction

from disc_tiler.kernel import Arc, Chain, Point, Segment
from disc_tiler.multicurve import Multicurve

CLASSES = (0.0, 1.0, 2.0)


def piece(cls: float, length: float, slot: int):
    """A single edge of the given class and length, parked in its own slot of the plane."""
    base = Point(4.0 * slot, 0.0)
    if cls == 0.0:
        return Segment(base, base + Point(length, 0.0))
    return Arc(base, cls, 0.0, length / cls)


def family(lengths, first_slot=0) -> Multicurve:
    return Multicurve(tuple(Chain((piece(c, float(L), first_slot + i),))
                            for i, (c, L) in enumerate(lengths)))


def random_lengths(rng: random.Random, max_members=6, den_max=8):
    out = []
    for _ in range(rng.randint(1, max_members)):
        den = rng.randint(1, den_max)
        out.append((rng.choice(CLASSES), Fraction(rng.randint(1, 2 * den), den)))
    return out


def repartition(rng: random.Random, lengths, max_members=6):
    """Same per-class totals, cut and regrouped differently."""
    totals = {}
    for c, L in lengths:
        totals[c] = totals.get(c, Fraction(0)) + L
    out = []
    for c, total in totals.items():
        budget = max(1, max_members - len(out) - (len(totals) - 1))
        k = rng.randint(1, min(budget, 3))
        cuts = sorted(Fraction(rng.randint(1, 47), 48) * total for _ in range(k - 1))
        bounds = [Fraction(0)] + cuts + [total]
        for a, b in zip(bounds, bounds[1:]):
            # Keep every arc comfortably short of a full turn of radius 1.
            while b - a > 3:
                out.append((c, Fraction(3)))
                a += 3
            if b > a:
                out.append((c, b - a))
    rng.shuffle(out)
    return out


def instance(seed: int):
    """``(left_lengths, right_lengths)``; every other seed is profile-equal by construction."""
    rng = random.Random(seed)
    left = random_lengths(rng)
    if seed % 2 == 0:
        right = repartition(rng, left)
    else:
        right = random_lengths(rng)
        if rng.random() < 0.5:
            # Near miss: shift one piece's length by 1/8.
            c, L = right[0]
            right[0] = (c, L + Fraction(1, 8))
    return left, right
