"""Deterministic SVG rendering of tilings."""

from __future__ import annotations

import math
from pathlib import Path

from .kernel import Arc, Region
from .validate import Tiling

_PALETTE = ("#e4572e", "#f3a712", "#a8c686", "#669bbc", "#29335c", "#db5461",
            "#8e7dbe", "#59c3c3", "#f4d35e", "#ee964b", "#7fb069", "#b56576")


def _num(x: float) -> str:
    s = f"{x:.9f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _xy(p) -> str:
    # SVG's y axis points down; flip so the picture reads in math orientation.
    return f"{_num(p.x)} {_num(-p.y)}"


def tile_path(tile: Region) -> str:
    """Path data using native line and elliptical-arc commands."""
    edges = tile.edges
    parts = [f"M {_xy(edges[0].start)}"]
    for e in edges:
        if isinstance(e, Arc):
            pieces = [e] if abs(e.sweep) < math.pi else [e.subedge(0, e.length / 2),
                                                         e.subedge(e.length / 2, e.length)]
            for a in pieces:
                large = 1 if abs(a.sweep) > math.pi else 0
                # Counterclockwise in math coordinates is clockwise once y is flipped.
                sweep_flag = 0 if a.sweep > 0 else 1
                r = _num(a.radius)
                parts.append(f"A {r} {r} 0 {large} {sweep_flag} {_xy(a.end)}")
        else:
            parts.append(f"L {_xy(e.end)}")
    parts.append("Z")
    return " ".join(parts)


def render_svg(t: Tiling) -> str:
    """SVG text for a tiling: one filled path per tile and the stroked unit circle."""
    out = ['<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.05 -1.05 2.1 2.1" '
           'width="420" height="420">']
    for i, tile in enumerate(t.tiles):
        color = _PALETTE[i % len(_PALETTE)]
        out.append(f'  <path d="{tile_path(tile)}" fill="{color}" fill-opacity="0.8" '
                   f'stroke="#222" stroke-width="0.006" stroke-linejoin="round"/>')
    out.append('  <circle cx="0" cy="0" r="1" fill="none" stroke="#000" stroke-width="0.01"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(t: Tiling, path) -> None:
    Path(path).write_text(render_svg(t))
