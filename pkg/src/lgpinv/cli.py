"""Command line entry point: ``lgpinv <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .classify import classify_case, classify_mechanism
from .errors import GraphError
from .graph import Graph, parse_edge_list, serialize_edge_list
from .harness import ExperimentConfig, run_experiment
from .line import krausz_partition, line_graph, root
from .pinv import (
    FlipSet,
    all_optimal_solutions,
    build_ilp,
    export_lp,
    solve_branch_and_bound,
    solve_enumeration,
    verify_solution,
)
from .spectral import check_root_bound, is_smith, spectral_radius


def _read(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        print(text)
    else:
        Path(path).write_text(text + "\n", encoding="ascii", newline="\n")


def _edge_map_csv(edge_map) -> str:
    rows = ["h_vertex,u,v"] + [f"{i},{u},{v}" for i, (u, v) in enumerate(edge_map)]
    return "\n".join(rows)


def cmd_linegraph(args) -> int:
    res = line_graph(_read(args.input))
    _write(serialize_edge_list(res.h), args.out)
    if args.emit_edge_map:
        _write(_edge_map_csv(res.edge_map), args.emit_edge_map)
    return 0


def cmd_root(args) -> int:
    res = root(_read(args.input))
    _write(serialize_edge_list(res.roots[0]), args.out)
    if res.ambiguous:
        print("note: K3 component; the triangle is an equally valid root", file=sys.stderr)
    if args.emit_edge_map:
        _write(_edge_map_csv(res.edge_maps[0]), args.emit_edge_map)
    return 0


def cmd_recognize(args) -> int:
    h = _read(args.input)
    try:
        krausz_partition(h)
    except GraphError as exc:
        witness = getattr(exc, "witness", None)
        print("NOT a line graph" + (f" (witness {witness})" if witness else ""))
        return 1
    print("line graph")
    return 0


def _print_solution(sol) -> None:
    print(f"objective {sol.objective}")
    print(f"flips {sol.flips}" if sol.objective else "flips (none)")


def cmd_pinv(args) -> int:
    h = _read(args.input)
    if args.export_lp:
        export_lp(build_ilp(h), args.export_lp)
    if args.all_optima:
        sols = all_optimal_solutions(h, args.kmax)
        print(f"objective {sols[0].objective}")
        for s in sols:
            print(f"flips {s.flips}" if s.objective else "flips (none)")
        return 0
    sol = None
    if args.engine in ("enum", "both"):
        sol = solve_enumeration(h, args.kmax)
    if args.engine in ("bnb", "both"):
        bnb = solve_branch_and_bound(build_ilp(h), args.time_limit)
        if not bnb.optimal:
            print("warning: time limit hit, branch-and-bound result not proven optimal", file=sys.stderr)
        if sol is not None and bnb.objective != sol.objective:
            print(f"engine disagreement: enum {sol.objective} vs bnb {bnb.objective}", file=sys.stderr)
            return 1
        if sol is None:
            sol = bnb
    if not verify_solution(h, sol):
        print("solution failed verification", file=sys.stderr)
        return 1
    _print_solution(sol)
    if args.engine == "both":
        print("engines agree")
    if args.out:
        _write(serialize_edge_list(sol.h_hat), args.out)
    return 0


def cmd_classify(args) -> int:
    h = _read(args.h)
    h_tilde = _read(args.h_tilde)
    if h.vertex_count != h_tilde.vertex_count:
        raise GraphError("h and h_tilde must share the vertex set")
    added = FlipSet.from_pairs(h, sorted(h_tilde.edges ^ h.edges))
    sol = solve_enumeration(h_tilde, args.kmax)
    case = classify_case(h, h_tilde, sol, added)
    print(f"case {case}")
    _print_solution(sol)
    print(f"mechanism {classify_mechanism(root(h).roots[0], sol.g_hat)}")
    return 0


def cmd_spectral(args) -> int:
    g = _read(args.input)
    rep = spectral_radius(g, args.tol)
    print(f"radius {rep.radius:.12g}")
    print(f"iterations {rep.iterations}")
    if g.is_connected() and g.vertex_count:
        print(f"smith {'yes' if is_smith(g) else 'no'}")
    if args.root_bound:
        b = check_root_bound(g, exclude_smith=False)
        print("bound_name,lhs,rhs,satisfied")
        print(b.csv_row())
    return 0


def cmd_experiment(args) -> int:
    gadget = _read(args.gadget) if args.gadget else None
    config = ExperimentConfig(
        model=args.model,
        n=args.n,
        n_max=args.n_max,
        p=args.p,
        attach=args.attach,
        samples=args.samples,
        edges_added=args.add,
        gadget=gadget,
        seed=args.seed,
        engine=args.engine,
        k_max=args.kmax,
        threads=args.threads,
        timing=not args.no_timing,
        mechanisms=args.mechanisms,
    )
    summary, csv_text, _ = run_experiment(config)
    if args.out:
        Path(args.out).write_text(csv_text, encoding="ascii", newline="\n")
    else:
        sys.stdout.write(csv_text)
    print(summary, file=sys.stderr if not args.out else sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lgpinv", description="Line graphs, roots and minimum-flip pseudo-inverses.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("linegraph", help="write L(G) for an edge-list G")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.add_argument("--emit-edge-map", metavar="CSV")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("root", help="reconstruct G from a line graph H")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.add_argument("--emit-edge-map", metavar="CSV")
    p.set_defaults(func=cmd_root)

    p = sub.add_parser("recognize", help="exit 0 iff the input is a line graph")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("pinv", help="minimum-flip nearest line graph")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--engine", choices=("enum", "bnb", "both"), default="enum")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--time-limit", type=float, default=60.0)
    p.add_argument("--export-lp", metavar="PATH")
    p.add_argument("--all-optima", action="store_true")
    p.add_argument("--out", help="write the repaired line graph here")
    p.set_defaults(func=cmd_pinv)

    p = sub.add_parser("classify", help="case label for an edge-augmented line graph")
    p.add_argument("--h", required=True)
    p.add_argument("--h-tilde", required=True)
    p.add_argument("--kmax", type=int, default=3)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("spectral", help="spectral radius by power iteration")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--root-bound", action="store_true", help="also print the root-norm bound row")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("experiment", help="perturbation sweep")
    p.add_argument("--model", choices=("er", "ba"), default="er")
    p.add_argument("--n", type=int, default=15)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--attach", type=int, default=1)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--add", type=int, default=1)
    p.add_argument("--gadget", metavar="FILE")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--engine", choices=("enum", "bnb", "both"), default="enum")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", metavar="CSV")
    p.add_argument("--no-timing", action="store_true", help="write NA in time_ms for byte-stable output")
    p.add_argument("--mechanisms", action="store_true")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
