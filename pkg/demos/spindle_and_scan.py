"""
Spindle areas and the arc-length equation
==========================================

The spindle of two points at distance d is the lens cut out by the two
unit-radius arcs through them. Its area is s - sin(s), where s is the
central angle of either arc. We compare that closed form to sampling, then
scan the equation sin(2 pi / k) = pi (2/k - c/n) for integer solutions.
"""

import math

import numpy as np

from disc_tiler import Point, chain_area, scan_arc_equation, spindle

rng = np.random.default_rng(0)
for s in (math.pi / 6, math.pi / 3, math.pi / 2, 2 * math.pi / 3, math.pi):
    d = 2 * math.sin(s / 2)
    h = math.sqrt(max(1 - d * d / 4, 0.0))
    area = chain_area(spindle(Point(0, 0), Point(d, 0), 1.0))
    x = rng.uniform(0, d, 2_000_000)
    y = rng.uniform(-(1 - h), 1 - h, 2_000_000)
    inside = ((x - d / 2) ** 2 + (y - h) ** 2 <= 1) & ((x - d / 2) ** 2 + (y + h) ** 2 <= 1)
    sampled = d * 2 * (1 - h) * inside.mean()
    print(f"s={s:.4f}: closed form {s - math.sin(s):.6f}, kernel {area:.6f}, sampled {sampled:.6f}")

for corrected in (False, True):
    c = 2 if corrected else 4
    exact = scan_arc_equation(200, 2000, 1e-9, corrected=corrected, n_min=3)
    loose = scan_arc_equation(10, 50, 0.05, corrected=corrected, n_min=3)
    print(f"c={c}: {len(exact)} solutions at 1e-9; near misses at 0.05:")
    for hit in loose[:5]:
        print(f"  k={hit.k} n={hit.n} residual={hit.residual:.4f}")
