"""Command-line front door.

Every library operation is reachable through a subcommand, with JSON as
the default output format (csv and text as alternatives where natural).
Exit codes: 0 success, 1 failed verification or internal error, 2 bad
input, 3 resource limit.
"""

from __future__ import annotations

import argparse
import sys

from . import lattice, modular, reduction, report
from .checks import SCOPES, run_checks
from .errors import InputError, ResourceLimitError
from .ops import (
    apply_operator,
    apply_word,
    iterate_word_component,
    parse_triple,
    parse_word,
)
from .render import (
    RenderSpec,
    dumps_canonical,
    grid_to_json,
    patch_grid,
    to_csv,
    to_svg,
)


def _parse_op(text: str) -> int:
    t = text.strip().upper().lstrip("H")
    if t not in ("1", "2", "3"):
        raise InputError(f"operator must be 1, 2, 3 or H1, H2, H3; got {text!r}")
    return int(t)


def _parse_bounds(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise InputError(f"bounds must be m_min,m_max,n_min,n_max; got {text!r}")
    try:
        m0, m1, n0, n1 = (int(p) for p in parts)
    except ValueError:
        raise InputError(f"bad bounds {text!r}") from None
    return m0, m1, n0, n1


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"expected two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"bad pair {text!r}") from None


def _emit(payload: dict, fmt: str, csv_lines=None, text_lines=None) -> None:
    if fmt == "json":
        print(dumps_canonical(payload))
    elif fmt == "csv":
        if csv_lines is None:
            csv_lines = ["key,value"] + [f"{k},{v}" for k, v in payload.items()]
        print("\n".join(csv_lines))
    else:
        if text_lines is None:
            text_lines = [f"{k}: {v}" for k, v in payload.items()]
        print("\n".join(text_lines))


def _add_format(sp) -> None:
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lozenge",
        description="Integer triple dynamics and lozenge number tilings.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("apply", help="apply one operator to a triple")
    sp.add_argument("--op", required=True, help="1, 2, 3 or H1, H2, H3")
    sp.add_argument("--triple", required=True, help="a,b,c")
    _add_format(sp)

    sp = sub.add_parser("word", help="apply a word, or iterate it and track one component")
    sp.add_argument("--triple", required=True, help="a,b,c")
    sp.add_argument("--word", required=True, help="digits over 1,2,3, e.g. 1321")
    sp.add_argument("--composition-order", action="store_true",
                    help="read the word as a composition chain (rightmost first)")
    sp.add_argument("--iterate", type=int, default=None, metavar="K",
                    help="iterate the word K times and report one component")
    sp.add_argument("--component", type=int, choices=(1, 2, 3), default=None)
    _add_format(sp)

    sp = sub.add_parser("weight", help="closed-form weight queries on a tiling")
    sp.add_argument("--base", help="a,b,c")
    sp.add_argument("--node", help="m,n: weight of one node")
    sp.add_argument("--line", help="x,y: line query, needs --k")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--min", action="store_true", help="minimum weight and argmin nodes")
    sp.add_argument("--below", type=int, default=None, metavar="M",
                    help="all nodes with weight <= M")
    sp.add_argument("--value", type=int, default=None,
                    help="is the value represented; list witnesses")
    sp.add_argument("--occurs", default=None, metavar="X,Y,Z",
                    help="count placements of an ordered triple")
    sp.add_argument("--bounds", default=None, help="m0,m1,n0,n1 for --occurs")
    _add_format(sp)

    sp = sub.add_parser("region", help="build a patch by lozenge expansion")
    sp.add_argument("--base", required=True, help="a,b,c")
    sp.add_argument("--bounds", required=True, help="m0,m1,n0,n1 (inclusive)")
    sp.add_argument("--out", default=None, help="write to file instead of stdout")
    _add_format(sp)

    sp = sub.add_parser("classify", help="descend a triple to its tiling center")
    sp.add_argument("--triple", required=True, help="a,b,c")
    _add_format(sp)

    sp = sub.add_parser("length", help="shortest operator count to reach a value")
    sp.add_argument("--start", required=True, help="a,b,c")
    sp.add_argument("--value", required=True, type=int)
    sp.add_argument("--depth-cap", type=int, default=reduction.DEFAULT_DEPTH_CAP)
    _add_format(sp)

    sp = sub.add_parser("density", help="residue-class tables modulo a prime")
    sp.add_argument("--p", required=True, type=int)
    sp.add_argument("--germ", choices=modular.GERM_FORMS, default=None)
    sp.add_argument("--base", default=None, help="a,b,c for a tiling sweep")
    sp.add_argument("--theory-only", action="store_true")
    sp.add_argument("--sweep-only", action="store_true")
    _add_format(sp)

    sp = sub.add_parser("zigzag", help="zigzag closed form / descent of (0,0,c)")
    sp.add_argument("--a", type=int, default=0)
    sp.add_argument("--c", required=True, type=int)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--descend", action="store_true",
                    help="full descent of (0,0,c) to its center")
    _add_format(sp)

    sp = sub.add_parser("census", help="negative weights in the tiling of (0,0,c)")
    sp.add_argument("--c", required=True, type=int)
    _add_format(sp)

    sp = sub.add_parser("render", help="draw a patch as SVG (plus optional CSV)")
    sp.add_argument("--base", required=True, help="a,b,c")
    sp.add_argument("--radius", type=int, default=6,
                    help="hexagonal patch radius around the anchor triangle")
    sp.add_argument("--bounds", default=None,
                    help="m0,m1,n0,n1 rectangle instead of the hex patch")
    sp.add_argument("--mod", type=int, default=None,
                    help="color by weight mod this prime")
    sp.add_argument("--labels", action="store_true")
    sp.add_argument("--scale", type=float, default=40.0)
    sp.add_argument("--out", default=None, help="SVG file (stdout if omitted)")
    sp.add_argument("--csv", default=None, help="also write the patch as CSV")

    sp = sub.add_parser("loeschian", help="membership test for x^2 + xy + y^2 values")
    sp.add_argument("--value", required=True, type=int)
    sp.add_argument("--witness", action="store_true")
    _add_format(sp)

    sp = sub.add_parser("verify", help="run the built-in self checks")
    sp.add_argument("--scope", choices=SCOPES, default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--pmax", type=int, default=97)
    _add_format(sp)

    sp = sub.add_parser("report", help="write figures and CSV tables for a base")
    sp.add_argument("--base", required=True, help="a,b,c")
    sp.add_argument("--radius", type=int, default=6)
    sp.add_argument("--mod", type=int, default=None)
    sp.add_argument("--census-max", type=int, default=None)
    sp.add_argument("--out", required=True, help="output directory")
    sp.add_argument("--fig-format", choices=report.FIG_FORMATS, default="svg")

    return parser


def _cmd_apply(args) -> int:
    result = apply_operator(_parse_op(args.op), parse_triple(args.triple))
    _emit({"result": list(result)}, args.format,
          text_lines=[f"result: {result}"])
    return 0


def _cmd_word(args) -> int:
    t = parse_triple(args.triple)
    w = parse_word(args.word, composition_order=args.composition_order)
    if args.iterate is not None:
        if args.component is None:
            raise InputError("--iterate requires --component")
        seq = iterate_word_component(t, w, args.component, args.iterate)
        _emit({"sequence": seq, "word": list(w)}, args.format,
              csv_lines=["k,value"] + [f"{k},{v}" for k, v in enumerate(seq)],
              text_lines=[f"sequence: {seq}"])
    else:
        result = apply_word(w, t)
        _emit({"result": list(result), "word": list(w)}, args.format,
              text_lines=[f"result: {result}"])
    return 0


def _cmd_weight(args) -> int:
    if args.line is not None:
        if args.k is None:
            raise InputError("--line requires --k")
        x, y = _parse_pair(args.line)
        _emit({"weight": lattice.line_weight(x, y, args.k)}, args.format)
        return 0
    if args.base is None:
        raise InputError("--base is required unless --line is used")
    base = parse_triple(args.base)
    if args.node is not None:
        m, n = _parse_pair(args.node)
        _emit({"weight": lattice.closed_weight(base, m, n)}, args.format)
    elif args.min:
        wmin, argmin = lattice.minimum_weight(base)
        _emit({"min": wmin, "argmin": [list(v) for v in argmin]}, args.format,
              text_lines=[f"min: {wmin}", f"argmin: {argmin}"])
    elif args.below is not None:
        hits = lattice.represented_below(base, args.below)
        _emit(
            {"count": len(hits),
             "nodes": [{"w": w, "m": m, "n": n} for w, (m, n) in hits]},
            args.format,
            csv_lines=["weight,m,n"] + [f"{w},{m},{n}" for w, (m, n) in hits],
            text_lines=[f"{w} at ({m},{n})" for w, (m, n) in hits],
        )
    elif args.value is not None:
        found, witnesses = lattice.is_represented(base, args.value)
        _emit({"represented": found,
               "witnesses": [list(v) for v in witnesses]}, args.format)
    elif args.occurs is not None:
        target = parse_triple(args.occurs)
        bounds = _parse_bounds(args.bounds) if args.bounds else None
        _emit({"count": lattice.count_occurrences(base, target, bounds)},
              args.format)
    else:
        raise InputError("choose one of --node, --min, --below, --value, --occurs")
    return 0


def _cmd_region(args) -> int:
    base = parse_triple(args.base)
    bounds = _parse_bounds(args.bounds)
    grid = lattice.generate_region(base, bounds)
    if args.format == "csv":
        out = to_csv(grid)
    else:
        out = dumps_canonical(grid_to_json(grid)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
        print(dumps_canonical({"written": args.out, "nodes": len(grid)}))
    else:
        sys.stdout.write(out)
    return 0


def _cmd_classify(args) -> int:
    result = reduction.classify(parse_triple(args.triple))
    _emit(result.as_dict(), args.format)
    return 0


def _cmd_length(args) -> int:
    t0 = parse_triple(args.start)
    depth = reduction.length_of(t0, args.value, depth_cap=args.depth_cap)
    _emit({"length": depth, "value": args.value}, args.format)
    return 0


def _cmd_density(args) -> int:
    p = args.p
    if args.base is not None:
        table = modular.empirical_tiling_density(parse_triple(args.base), p)
        payload = table.as_dict()
        rows = table.rows()
    elif args.germ is not None:
        if args.theory_only:
            table = modular.theoretical_density(args.germ, p)
            payload = table.as_dict()
            rows = table.rows()
        elif args.sweep_only:
            table = modular.count_form_residues(args.germ, p)
            payload = table.as_dict()
            rows = table.rows()
        else:
            sweep = modular.count_form_residues(args.germ, p)
            theory = modular.theoretical_density(args.germ, p)
            payload = {
                "p": p,
                "germ": args.germ,
                "sweep_counts": sweep.counts,
                "theory_counts": theory.counts,
                "equal": sweep.counts == theory.counts,
                "densities": theory.as_dict()["densities"],
            }
            rows = [
                (l, s, t_) for l, (s, t_) in
                enumerate(zip(sweep.counts, theory.counts))
            ]
            _emit(payload, args.format,
                  csv_lines=["l,sweep_count,theory_count"]
                  + [f"{l},{s},{t_}" for l, s, t_ in rows])
            return 0
    else:
        raise InputError("provide --germ or --base")
    _emit(payload, args.format,
          csv_lines=["l,count,density_num,density_den"]
          + [f"{l},{c},{num},{den}" for l, c, num, den in rows])
    return 0


def _cmd_zigzag(args) -> int:
    if args.descend:
        steps, final, germ = reduction.center_path(args.c)
        _emit({"steps": steps, "final": list(final), "germ": germ}, args.format)
    else:
        if args.n is None:
            raise InputError("provide --n, or --descend for the full walk")
        result = reduction.zigzag_apply(args.a, args.c, args.n)
        _emit({"result": list(result)}, args.format)
    return 0


def _cmd_census(args) -> int:
    rep = reduction.negative_census(args.c)
    _emit(rep.as_dict(), args.format)
    return 0


def _cmd_render(args) -> int:
    base = parse_triple(args.base)
    if args.bounds is not None:
        bounds = _parse_bounds(args.bounds)
        shape = "rect"
    else:
        r = args.radius
        bounds = (-r - 1, r + 2, -r - 1, r + 2)
        shape = "hex"
    grid = lattice.closed_region(base, bounds)
    spec = RenderSpec(
        grid=grid,
        shape=shape,
        hex_radius=args.radius,
        coloring="residue" if args.mod else "value",
        p=args.mod,
        show_labels=args.labels,
        scale=args.scale,
    )
    svg = to_svg(spec)
    written = {}
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
        written["svg"] = args.out
    else:
        sys.stdout.write(svg)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(to_csv(patch_grid(spec)))
        written["csv"] = args.csv
    if written:
        print(dumps_canonical(written))
    return 0


def _cmd_loeschian(args) -> int:
    found = lattice.is_loeschian(args.value)
    payload = {"loeschian": found}
    if args.witness:
        payload["witnesses"] = [
            list(v) for v in lattice.is_represented((0, 1, 1), args.value)[1]
        ]
    _emit(payload, args.format)
    return 0


def _cmd_verify(args) -> int:
    checks = run_checks(scope=args.scope, seed=args.seed,
                        samples=args.samples, pmax=args.pmax)
    ok = all(c.ok for c in checks)
    if args.format == "json":
        print(dumps_canonical({
            "ok": ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                       for c in checks],
        }))
    else:
        for c in checks:
            print(c.line())
        print(f"{'all checks passed' if ok else 'CHECKS FAILED'} "
              f"({sum(c.ok for c in checks)}/{len(checks)})")
    return 0 if ok else 1


def _cmd_report(args) -> int:
    manifest = report.write_report(
        args.out,
        parse_triple(args.base),
        radius=args.radius,
        mod=args.mod,
        census_max=args.census_max,
        fig_format=args.fig_format,
    )
    print(dumps_canonical(manifest))
    return 0


_DISPATCH = {
    "apply": _cmd_apply,
    "word": _cmd_word,
    "weight": _cmd_weight,
    "region": _cmd_region,
    "classify": _cmd_classify,
    "length": _cmd_length,
    "density": _cmd_density,
    "zigzag": _cmd_zigzag,
    "census": _cmd_census,
    "render": _cmd_render,
    "loeschian": _cmd_loeschian,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def run(argv=None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.cmd](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 3


def console_entry() -> None:
    sys.exit(run())


if __name__ == "__main__":
    console_entry()
