"""
A tour of the named disc tilings
================================

Build each named tiling, validate it, and print what the diagnostics see:
symmetry, how many tiles contain the center, triple points, and the rim arcs.
SVG drawings land next to this script.
"""

from pathlib import Path

from disc_tiler import (NAMES, boundary_arcs, build_named, center_containment, symmetry_order,
                        triple_points, validate)
from disc_tiler.svg import write_svg

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

for name in NAMES:
    t = build_named(name)
    report = validate(t)
    sym = symmetry_order(t)
    census = center_containment(t)
    interior_triples = [tp for tp in triple_points(t) if not tp.on_rim]
    rims = boundary_arcs(t)
    print(f"{name}: {len(t)} tiles, valid={report.ok}, area defect {report.area_defect:.1e}")
    print(f"  symmetry order {sym.order}, rotationally generated: {sym.rotationally_generated}")
    print(f"  {census.line()}")
    print(f"  interior triple points: {len(interior_triples)}")
    print(f"  rim arc lengths: {sorted(round(r.alpha, 4) for r in rims.tiles)}")
    kinds = sorted({"reflection" if g.reflect else "rotation" for g in report.witnesses[1:]})
    print(f"  witness motions from tile 0: {', '.join(kinds) or 'none needed'}")
    write_svg(t, out / f"{name}.svg")

print(f"drawings written to {out}")
