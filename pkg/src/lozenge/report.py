"""Report bundles: matplotlib figures rendered to files next to the
delimited exports.

This is the human-facing output path.  It reuses the exact integer data
from the other modules and only formats it; nothing here feeds back into
computations or tests of the math.
"""

from __future__ import annotations

import os

from .errors import InputError
from .lattice import WeightGrid, closed_region, hex_patch
from .modular import empirical_tiling_density
from .ops import Triple
from .reduction import negative_census
from .render import to_csv

FIG_FORMATS = ("svg", "png")


def _plt():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def hex_grid(base: Triple, radius: int) -> WeightGrid:
    """Hexagonal patch of a tiling around the anchor triangle."""
    nodes = hex_patch(radius)
    box = closed_region(
        base, (-radius - 1, radius + 2, -radius - 1, radius + 2)
    )
    weights = {v: box.weights[v] for v in nodes}
    return WeightGrid(tuple(base), box.bounds, weights)


def save_grid_figure(grid: WeightGrid, path: str, mod: int | None = None,
                     labels: bool = False) -> None:
    """Scatter the patch nodes, colored by weight or by weight mod p."""
    plt = _plt()
    xs, ys, ws = [], [], []
    for (m, n), w in grid.sorted_items():
        xs.append(m + n / 2)
        ys.append(n * 0.8660254037844386)
        ws.append(w)
    fig, ax = plt.subplots(figsize=(7, 6.5))
    if mod is None:
        sc = ax.scatter(xs, ys, c=ws, s=210, cmap="YlOrRd")
        fig.colorbar(sc, ax=ax, label="weight")
    else:
        sc = ax.scatter(xs, ys, c=[w % mod for w in ws], s=210,
                        cmap="hsv", vmin=0, vmax=mod - 1)
        fig.colorbar(sc, ax=ax, label=f"weight mod {mod}")
    if labels:
        for x, y, w in zip(xs, ys, ws):
            ax.annotate(str(w), (x, y), ha="center", va="center", fontsize=7)
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_title(f"base {tuple(grid.base)}" + (f" mod {mod}" if mod else ""))
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def save_census_figure(reports, path: str) -> None:
    """Ratio of negative-weight count to its quadratic asymptote."""
    plt = _plt()
    cs = [r.c for r in reports]
    ratios = [r.ratio for r in reports]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(cs, ratios, marker=".", lw=1)
    ax.axhline(1.0, color="gray", ls="--", lw=0.8)
    ax.set_xlabel("c")
    ax.set_ylabel("negative count / asymptote")
    ax.set_title("negative-weight census for (0, 0, c)")
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def write_report(
    outdir: str,
    base: Triple,
    radius: int = 6,
    mod: int | None = None,
    census_max: int | None = None,
    fig_format: str = "svg",
) -> dict:
    """Write a report bundle for one base triple.

    Always emits weights.csv plus a weight figure for the hexagonal
    patch of the given radius.  With mod, adds the residue density table
    (residues.csv) and a residue-colored figure.  With census_max, adds
    census.csv and the ratio figure over c = 1..census_max.
    Returns a manifest of the files written.
    """
    if fig_format not in FIG_FORMATS:
        raise InputError(f"fig_format must be one of {FIG_FORMATS}")
    os.makedirs(outdir, exist_ok=True)
    files = []

    grid = hex_grid(base, radius)
    csv_path = os.path.join(outdir, "weights.csv")
    with open(csv_path, "w") as fh:
        fh.write(to_csv(grid))
    files.append(csv_path)

    fig_path = os.path.join(outdir, f"weights.{fig_format}")
    save_grid_figure(grid, fig_path, labels=radius <= 8)
    files.append(fig_path)

    if mod is not None:
        table = empirical_tiling_density(base, mod)
        res_csv = os.path.join(outdir, f"residues_mod{mod}.csv")
        with open(res_csv, "w") as fh:
            fh.write("l,count,density_num,density_den\n")
            for l, cnt, num, den in table.rows():
                fh.write(f"{l},{cnt},{num},{den}\n")
        files.append(res_csv)
        res_fig = os.path.join(outdir, f"residues_mod{mod}.{fig_format}")
        save_grid_figure(grid, res_fig, mod=mod)
        files.append(res_fig)

    if census_max is not None:
        reports = [negative_census(c) for c in range(1, census_max + 1)]
        census_csv = os.path.join(outdir, "census.csv")
        with open(census_csv, "w") as fh:
            fh.write("c,min_weight,negative_count,asymptote,ratio\n")
            for r in reports:
                fh.write(
                    f"{r.c},{r.min_weight},{r.negative_count},"
                    f"{r.asymptote!r},{r.ratio!r}\n"
                )
        files.append(census_csv)
        census_fig = os.path.join(outdir, f"census.{fig_format}")
        save_census_figure(reports, census_fig)
        files.append(census_fig)

    return {"outdir": outdir, "files": files}
