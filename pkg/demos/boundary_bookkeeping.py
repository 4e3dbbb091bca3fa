"""
Boundary bookkeeping
====================

Two checks on tile boundaries. First, whether boundaries made of arcs and
segments can be cut into pairwise congruent pieces. Second, how much
unit-radius arc each tile sees as convex or concave.
"""

import math

from disc_tiler import Multicurve, build_named, convexity_profile, equidecomposable, length_profile

tiles = build_named("rot3").tiles
a, b = (Multicurve.from_chain(d.boundary) for d in tiles[:2])
d = equidecomposable(a, b)
print(f"rot3 tile boundaries equidecomposable: {bool(d)} with {len(d.pairs)} piece pairs")
print(f"  length profile {length_profile(a).totals}")

for name in ("rot3", "hw12", "petal12"):
    net = 0.0
    for tile in build_named(name).tiles:
        net += convexity_profile(tile).net(1.0)
    print(f"{name}: convex minus concave unit-arc length over all tiles = {net:.9f}"
          f" (2 pi = {2 * math.pi:.9f})")
