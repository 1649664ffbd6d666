"""File-grade visualizations: deterministic SVG patches and delimited
exports of weight grids.

Node (m, n) is drawn at Euclidean (m + n/2, n*sqrt(3)/2), y flipped for
screen coordinates.  Output is built by plain string formatting with a
fixed node order (sorted by (n, m)), so identical specs produce byte
identical documents and golden-file tests are stable.
"""

from __future__ import annotations

import colorsys
import json
from dataclasses import dataclass
from math import sqrt

from .errors import InputError
from .lattice import WeightGrid, hex_distance, ANCHOR_NODES

_SQ3_2 = sqrt(3) / 2

VALUE_GRADIENT = ("#fff3b0", "#9e2a2b")  # low, high


@dataclass
class RenderSpec:
    """Everything needed to draw one patch.

    shape "rect" draws every grid node; shape "hex" keeps nodes within
    graph distance hex_radius of the anchor triangle.  coloring "value"
    uses a two-stop gradient over the weight range; "residue" colors by
    weight mod p and requires p.  palette overrides the defaults: a
    (low, high) pair of hex colors for value coloring, or a mapping
    residue -> color covering every class present for residue coloring.
    """

    grid: WeightGrid
    shape: str = "rect"
    hex_radius: int = 6
    coloring: str = "value"
    p: int | None = None
    show_labels: bool = False
    circle_radius: float = 0.32
    scale: float = 40.0
    palette: object = None


def _selected_nodes(spec: RenderSpec) -> list[tuple[tuple[int, int], int]]:
    items = spec.grid.sorted_items()
    if spec.shape == "rect":
        return items
    if spec.shape == "hex":
        r = spec.hex_radius
        return [
            ((m, n), w)
            for (m, n), w in items
            if min(hex_distance(m - cm, n - cn) for cm, cn in ANCHOR_NODES) <= r
        ]
    raise InputError(f"shape must be 'rect' or 'hex', got {spec.shape!r}")


def _hex_rgb(color: str) -> tuple[int, int, int]:
    c = color.lstrip("#")
    if len(c) != 6:
        raise InputError(f"bad color {color!r}; expected #rrggbb")
    try:
        return int(c[0:2], 16), int(c[2:4], 16), int(c[4:6], 16)
    except ValueError:
        raise InputError(f"bad color {color!r}; expected #rrggbb") from None


def _lerp_color(lo: str, hi: str, t: float) -> str:
    r0, g0, b0 = _hex_rgb(lo)
    r1, g1, b1 = _hex_rgb(hi)
    r = round(r0 + (r1 - r0) * t)
    g = round(g0 + (g1 - g0) * t)
    b = round(b0 + (b1 - b0) * t)
    return f"#{r:02x}{g:02x}{b:02x}"


def _residue_color(l: int, p: int) -> str:
    r, g, b = colorsys.hsv_to_rgb(l / p, 0.65, 0.93)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def _fill_function(spec: RenderSpec, weights: list[int]):
    if spec.coloring == "value":
        palette = spec.palette if spec.palette is not None else VALUE_GRADIENT
        if not (isinstance(palette, (tuple, list)) and len(palette) == 2):
            raise InputError("value coloring needs a (low, high) color pair")
        lo, hi = palette
        _hex_rgb(lo), _hex_rgb(hi)  # validate early
        wmin, wmax = min(weights), max(weights)
        span = wmax - wmin
        if span == 0:
            return lambda w: lo
        return lambda w: _lerp_color(lo, hi, (w - wmin) / span)
    if spec.coloring == "residue":
        if spec.p is None:
            raise InputError("residue coloring requires p")
        p = spec.p
        table = {l: _residue_color(l, p) for l in range(p)}
        if spec.palette is not None:
            if not hasattr(spec.palette, "items"):
                raise InputError("residue coloring needs a mapping palette")
            override = {int(k): v for k, v in spec.palette.items()}
            present = {w % p for w in weights}
            missing = present - set(override)
            if missing:
                raise InputError(f"palette misses residue classes {sorted(missing)}")
            for v in override.values():
                _hex_rgb(v)
            table.update(override)
        return lambda w: table[w % p]
    raise InputError(f"coloring must be 'value' or 'residue', got {spec.coloring!r}")


def to_svg(spec: RenderSpec) -> str:
    """Render a patch to an SVG 1.1 document (one circle per node)."""
    nodes = _selected_nodes(spec)
    if not nodes:
        raise InputError("nothing to render: grid patch is empty")
    weights = [w for _, w in nodes]
    fill = _fill_function(spec, weights)

    s = spec.scale
    rad = spec.circle_radius * s
    xs = [s * (m + n / 2) for (m, n), _ in nodes]
    ys = [-s * (n * _SQ3_2) for (m, n), _ in nodes]
    pad = rad + 0.5 * s
    x0, y0 = min(xs) - pad, min(ys) - pad
    width = max(xs) - min(xs) + 2 * pad
    height = max(ys) - min(ys) + 2 * pad

    legend_entries = []
    if spec.coloring == "residue":
        legend_entries = [(l, fill(l)) for l in range(spec.p)]
        height = max(height, 2 * pad + spec.p * 0.5 * s)
        width += 2.4 * s

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">',
        f"<title>tiling of {tuple(spec.grid.base)}</title>",
        '<g stroke="none">',
    ]
    for ((m, n), w), x, y in zip(nodes, xs, ys):
        cx, cy = x - x0, y - y0
        parts.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{rad:.2f}" fill="{fill(w)}"/>'
        )
    if spec.show_labels:
        fs = 0.34 * s
        for ((m, n), w), x, y in zip(nodes, xs, ys):
            cx, cy = x - x0, y - y0 + 0.12 * s
            parts.append(
                f'<text x="{cx:.2f}" y="{cy:.2f}" font-size="{fs:.2f}" '
                f'font-family="Helvetica, Arial, sans-serif" '
                f'text-anchor="middle" fill="#1a1a1a">{w}</text>'
            )
    parts.append("</g>")
    if legend_entries:
        lx = width - 2.0 * spec.scale
        fs = 0.3 * spec.scale
        parts.append('<g stroke="none">')
        for i, (l, color) in enumerate(legend_entries):
            ly = pad + i * 0.5 * spec.scale
            box = 0.4 * spec.scale
            parts.append(
                f'<rect x="{lx:.2f}" y="{ly:.2f}" width="{box:.2f}" '
                f'height="{box:.2f}" fill="{color}"/>'
            )
            parts.append(
                f'<text x="{lx + box + 0.2 * spec.scale:.2f}" '
                f'y="{ly + 0.3 * spec.scale:.2f}" font-size="{fs:.2f}" '
                f'font-family="Helvetica, Arial, sans-serif" '
                f'fill="#1a1a1a">{l}</text>'
            )
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def patch_grid(spec: RenderSpec) -> WeightGrid:
    """The sub-grid a spec actually draws (after the shape filter)."""
    return WeightGrid(spec.grid.base, spec.grid.bounds,
                      dict(_selected_nodes(spec)))


def to_csv(grid: WeightGrid) -> str:
    """Delimited dump of a grid: header m,n,weight, rows sorted by (n, m)."""
    lines = ["m,n,weight"]
    for (m, n), w in grid.sorted_items():
        lines.append(f"{m},{n},{w}")
    return "\n".join(lines) + "\n"


def grid_to_json(grid: WeightGrid) -> dict:
    """JSON-ready description of a grid with bit-exact integer weights."""
    return {
        "base": list(grid.base),
        "bounds": list(grid.bounds),
        "nodes": [
            {"m": m, "n": n, "w": w} for (m, n), w in grid.sorted_items()
        ],
    }


def dumps_canonical(obj) -> str:
    """Canonical JSON encoding; re-encoding a parse gives identical bytes."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))
