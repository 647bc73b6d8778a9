"""Command-line front end.

Subcommands: check, order, split, draw, validate, gen, bench.
Exit codes: 0 success, 1 rejection (check of a non-bitonic graph),
2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
import time

from .errors import StGraphError
from .generate import RNG_ALGORITHM, GeneratorConfig, generate_random_st_graph
from .graph import compute_faces
from .io import (drawing_from_text, drawing_to_text, graph_to_text,
                 load_graph)
from .layout import draw_polyline, draw_straightline, emit_svg
from .ordering import (RejectionWitness, find_bitonic_ordering,
                       ordering_to_text, witness_to_text)
from .splitting import (minimum_split_plan, plan_to_text,
                        transitive_split_plan)
from .validate import check_upward_planar


def _cmd_check(args) -> int:
    g = load_graph(args.graph)
    res = find_bitonic_ordering(g, compute_faces(g))
    if isinstance(res, RejectionWitness):
        sys.stdout.write(witness_to_text(res))
        return 1
    sys.stdout.write("accept\n")
    return 0


def _cmd_order(args) -> int:
    g = load_graph(args.graph)
    res = find_bitonic_ordering(g, compute_faces(g))
    if isinstance(res, RejectionWitness):
        sys.stdout.write(witness_to_text(res))
        return 1
    sys.stdout.write(ordering_to_text(g, res))
    return 0


def _cmd_split(args) -> int:
    g = load_graph(args.graph)
    fi = compute_faces(g)
    plan = (transitive_split_plan(g, fi) if args.all_transitive
            else minimum_split_plan(g, fi))
    sys.stdout.write(plan_to_text(plan))
    return 0


def _cmd_draw(args) -> int:
    g = load_graph(args.graph)
    if args.mode == "straight":
        res = find_bitonic_ordering(g, compute_faces(g))
        if isinstance(res, RejectionWitness):
            sys.stdout.write(witness_to_text(res))
            return 1
        d = draw_straightline(g, res)
    else:
        d = draw_polyline(g)
    sys.stdout.write(drawing_to_text(g, d))
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(emit_svg(d, scale=args.scale))
    return 0


def _cmd_validate(args) -> int:
    g = load_graph(args.graph)
    with open(args.drawing) as fh:
        d = drawing_from_text(fh.read(), g)
    report = check_upward_planar(g, d)
    sys.stdout.write(report.to_json() + "\n" if args.json
                     else report.to_text())
    return 0 if report.ok else 1


def _cmd_gen(args) -> int:
    cfg = GeneratorConfig(n_target=args.n, seed=args.seed)
    g = generate_random_st_graph(cfg)
    sys.stdout.write(f"# generated n={args.n} seed={args.seed} "
                     f"rng={RNG_ALGORITHM}\n")
    sys.stdout.write(graph_to_text(g))
    return 0


def run_bench(sizes, seed):
    """Generate, draw poly-line, and collect per-size statistics.

    Returns CSV rows (dicts); timing covers the drawing pipeline only.
    """
    rows = []
    for n in sizes:
        g = generate_random_st_graph(GeneratorConfig(n_target=n, seed=seed))
        t0 = time.perf_counter()
        d = draw_polyline(g)
        ms = (time.perf_counter() - t0) * 1000.0
        rows.append({
            "n": n,
            "edges": g.m,
            "splits": len(d.splits),
            "bends": len(d.bend_points),
            "width": d.width,
            "height": d.height,
            "ms_total": ms,
        })
    return rows


def _cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    rows = run_bench(sizes, args.seed)
    sys.stdout.write("n,edges,splits,bends,width,height,ms_total\n")
    for r in rows:
        sys.stdout.write(
            f"{r['n']},{r['edges']},{r['splits']},{r['bends']},"
            f"{r['width']},{r['height']},{r['ms_total']:.1f}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="stlayout",
        description="Upward planar grid drawings of embedded planar "
                    "st-graphs via bitonic st-orderings.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="accept/reject bitonic orderability")
    sp.add_argument("graph")
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("order", help="emit a bitonic st-ordering")
    sp.add_argument("graph")
    sp.set_defaults(func=_cmd_order)

    sp = sub.add_parser("split", help="emit the minimum split plan")
    sp.add_argument("graph")
    sp.add_argument("--all-transitive", action="store_true",
                    help="baseline: split every transitive edge")
    sp.set_defaults(func=_cmd_split)

    sp = sub.add_parser("draw", help="draw straight-line or poly-line")
    sp.add_argument("graph")
    sp.add_argument("--mode", choices=("straight", "poly"), default="poly")
    sp.add_argument("--svg", help="also write an SVG file")
    sp.add_argument("--scale", type=int, default=20)
    sp.set_defaults(func=_cmd_draw)

    sp = sub.add_parser("validate", help="verify a drawing file")
    sp.add_argument("graph")
    sp.add_argument("drawing")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("gen", help="generate a random planar st-graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("bench", help="scaling benchmark")
    sp.add_argument("--sizes", required=True,
                    help="comma separated vertex counts")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_bench)
    return p


def cli_main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except StGraphError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
