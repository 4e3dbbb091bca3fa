"""
Rotating random generator curves
================================

A generator curve runs from the center to the rim. Rotating it n times
about the center cuts the disc into n congruent pieces. Here we draw
random polar-monotone generators and check every resulting tiling.
"""

from collections import Counter

from disc_tiler import build_rotgen, center_containment, random_generator, symmetry_order, validate

outcomes = Counter()
for seed in range(100):
    for n in (1, 2, 3, 4, 5):
        g = random_generator(seed, n, 1 + seed % 6)
        t = build_rotgen(g, n)
        ok = validate(t).ok
        sym = symmetry_order(t)
        census = center_containment(t)
        outcomes[(n, ok, tuple(sym), census.outside_count)] += 1

for (n, ok, sym, outside), count in sorted(outcomes.items()):
    print(f"n={n}: valid={ok} symmetry={sym} tiles missing the center={outside}  x{count}")

# One generator in detail.
g = random_generator(7, 3, 4)
for e in g.chain.edges:
    print(f"  {type(e).__name__:8s} length {e.length:.4f}")
