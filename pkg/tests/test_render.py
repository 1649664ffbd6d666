"""SVG and delimited exports: determinism, structure, error handling."""

import json

import pytest

from lozenge import (
    InputError,
    RenderSpec,
    WeightGrid,
    closed_region,
    closed_weight,
    dumps_canonical,
    grid_to_json,
    hex_patch,
    patch_grid,
    to_csv,
    to_svg,
)


def hex_spec(base, radius=3, **kw):
    r = radius
    grid = closed_region(base, (-r - 1, r + 2, -r - 1, r + 2))
    return RenderSpec(grid=grid, shape="hex", hex_radius=radius, **kw)


def test_to_svg_deterministic():
    spec = hex_spec((0, 0, 0), radius=6, coloring="value", show_labels=True)
    assert to_svg(spec) == to_svg(spec)


def test_node_count_matches_patch():
    spec = hex_spec((0, 0, 0), radius=4)
    svg = to_svg(spec)
    assert svg.count("<circle") == len(hex_patch(4))
    spec = RenderSpec(grid=closed_region((2, 3, 4), (-2, 2, -2, 2)))
    assert to_svg(spec).count("<circle") == 25


def test_anchor_zeros_labeled():
    svg = to_svg(hex_spec((0, 0, 0), radius=3, show_labels=True))
    assert svg.count(">0</text>") == 3  # the anchor triangle is the only 0s


def test_single_node_grid():
    grid = WeightGrid((5, 5, 5), (0, 0, 0, 0), {(0, 0): 5})
    svg = to_svg(RenderSpec(grid=grid, show_labels=True))
    assert svg.count("<circle") == 1
    assert svg.count(">5</text>") == 1


def test_residue_coloring_and_legend():
    spec = hex_spec((9, 2, 6), radius=3, coloring="residue", p=23)
    svg = to_svg(spec)
    assert svg.count("<circle") == len(hex_patch(3))
    assert svg.count("<rect") == 23  # legend lists every class
    assert to_svg(spec) == svg


def test_residue_requires_p():
    with pytest.raises(InputError):
        to_svg(hex_spec((0, 1, 1), coloring="residue"))


def test_palette_validation():
    with pytest.raises(InputError):
        to_svg(hex_spec((0, 1, 1), coloring="value", palette=("#ffffff",)))
    with pytest.raises(InputError):
        to_svg(hex_spec((0, 1, 1), coloring="value",
                        palette=("#ffffff", "nope")))
    with pytest.raises(InputError):
        to_svg(hex_spec((0, 1, 1), coloring="residue", p=5,
                        palette={0: "#ffffff"}))  # classes 1..4 present
    svg = to_svg(hex_spec((0, 1, 1), coloring="residue", p=5,
                          palette={l: "#336699" for l in range(5)}))
    assert svg.count('fill="#336699"') >= len(hex_patch(3))


def test_empty_render_rejected():
    grid = WeightGrid((0, 0, 0), (0, 0, 0, 0), {})
    with pytest.raises(InputError):
        to_svg(RenderSpec(grid=grid))


def test_to_csv_empty_grid_header_only():
    grid = WeightGrid((0, 0, 0), (0, 0, 0, 0), {})
    assert to_csv(grid) == "m,n,weight\n"


def test_to_csv_loeschian_patch():
    grid = closed_region((0, 1, 1), (-1, 1, -1, 1))
    lines = to_csv(grid).strip().split("\n")
    assert lines[0] == "m,n,weight"
    assert len(lines) == 10
    for row in lines[1:]:
        m, n, w = (int(v) for v in row.split(","))
        assert w == m * m + m * n + n * n


def test_to_csv_sorted_by_row_then_column():
    grid = closed_region((0, 0, 0), (-2, 2, -2, 2))
    rows = [tuple(int(v) for v in line.split(","))
            for line in to_csv(grid).strip().split("\n")[1:]]
    keys = [(n, m) for m, n, _ in rows]
    assert keys == sorted(keys)
    for m, n, w in rows:
        assert w == closed_weight((0, 0, 0), m, n)


def test_grid_json_roundtrip():
    grid = closed_region((4, 7, 5), (-2, 2, -2, 2))
    payload = grid_to_json(grid)
    text = dumps_canonical(payload)
    assert json.loads(text) == payload
    assert dumps_canonical(json.loads(text)) == text
    assert payload["base"] == [4, 7, 5]
    assert len(payload["nodes"]) == len(grid)
    for node in payload["nodes"]:
        assert node["w"] == closed_weight((4, 7, 5), node["m"], node["n"])


def test_rect_and_hex_shapes_select_expected_nodes():
    grid = closed_region((0, 0, 0), (-5, 6, -5, 6))
    rect = RenderSpec(grid=grid, shape="rect")
    hexs = RenderSpec(grid=grid, shape="hex", hex_radius=2)
    assert to_svg(rect).count("<circle") == len(grid)
    assert to_svg(hexs).count("<circle") == len(hex_patch(2))
    with pytest.raises(InputError):
        to_svg(RenderSpec(grid=grid, shape="blob"))


def test_patch_grid_matches_drawn_nodes():
    grid = closed_region((4, 7, 5), (-4, 5, -4, 5))
    spec = RenderSpec(grid=grid, shape="hex", hex_radius=3)
    sub = patch_grid(spec)
    assert set(sub.weights) == set(hex_patch(3))
    assert to_csv(sub).count("\n") == len(hex_patch(3)) + 1
