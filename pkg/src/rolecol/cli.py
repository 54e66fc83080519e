"""Command-line front end.

Exit codes: 0 for a positive decision or plain success, 1 for a negative
decision, 2 for usage or parse errors.  Payloads go to stdout as JSON or
DOT, diagnostics to stderr, and outputs are byte-deterministic for fixed
inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as rio
from .cographs import k_role_colour, one_role_colourable
from .graph import Graph, classify
from .oracle import oracle_vertex_limit, solvable_k_set, solve_exact
from .paths import colour_path
from .roles import RoleColouring, role_graph, validate
from .satreduce import (
    build_reduction,
    colouring_to_assignment,
    planar_tovey_transform,
    tovey_transform,
)
from .trees import solve_tree_constant_k, solve_tree_constant_surplus

USAGE_ERROR = 2
DECISION_FALSE = 1
OK = 0


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise rio.ParseError(f"{path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    return rio.parse_graph(_read(path), source=path)


def _load_colouring(path: str) -> RoleColouring:
    return rio.parse_colouring(_read(path), source=path)


def _path_vertex_order(g: Graph) -> list[int]:
    if g.n == 1:
        return [0]
    ends = [v for v in range(g.n) if g.degree(v) == 1]
    start = min(ends)
    order = [start]
    prev = -1
    while len(order) < g.n:
        nxt = [w for w in g.adj[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def _solve_path(g: Graph, k: int) -> RoleColouring | None:
    witness = colour_path(g.n, k)
    if witness is None:
        return None
    order = _path_vertex_order(g)
    colours = [0] * g.n
    for pos, v in enumerate(order):
        colours[v] = witness.colouring.colours[pos]
    return RoleColouring(k=k, colours=tuple(colours))


TREE_PARAM_CEILING = 8


def _solve_tree(g: Graph, k: int) -> RoleColouring | None:
    # polynomial only when one of k, n-k is small; refuse the middle regime
    if min(k, g.n - k) > TREE_PARAM_CEILING:
        raise rio.ParseError(
            f"tree solving needs k or n-k at most {TREE_PARAM_CEILING} "
            f"(got k={k}, n-k={g.n - k}); use --method brute for small graphs"
        )
    if g.n - k <= k:
        return solve_tree_constant_surplus(g, k)
    return solve_tree_constant_k(g, k)


def _solve_cograph(g: Graph, k: int) -> RoleColouring | None:
    if k == 1:
        if one_role_colourable(g):
            return RoleColouring(k=1, colours=(1,) * g.n)
        return None
    return k_role_colour(g, k)


def _solve_brute(g: Graph, k: int, refuse_above_limit: bool) -> RoleColouring | None:
    limit = oracle_vertex_limit()
    if g.n > limit:
        if refuse_above_limit:
            raise rio.ParseError(
                f"graph has {g.n} > {limit} vertices; brute force refused "
                "(raise ROLECOL_ORACLE_LIMIT or use a structured --method)"
            )
        print(
            f"warning: {g.n} vertices exceeds the practical brute-force "
            f"ceiling of {limit}; this may take very long",
            file=sys.stderr,
        )
    return solve_exact(g, k)


def cmd_solve(args) -> int:
    g = _load_graph(args.input)
    if not (1 <= args.k <= g.n):
        raise rio.ParseError(f"k must be in 1..{g.n}, got {args.k}")
    method = args.method
    cls = classify(g)
    if method == "auto":
        if cls.is_path:
            method = "path"
        elif cls.is_tree:
            method = "tree"
        elif cls.is_cograph:
            method = "cograph"
        else:
            method = "brute"
    if method == "path":
        if not cls.is_path:
            raise rio.ParseError("--method path needs a path graph")
        rc = _solve_path(g, args.k)
    elif method == "tree":
        if not cls.is_tree:
            raise rio.ParseError("--method tree needs a tree")
        rc = _solve_tree(g, args.k)
    elif method == "cograph":
        if not cls.is_cograph:
            raise rio.ParseError("--method cograph needs a cograph (P4-free graph)")
        rc = _solve_cograph(g, args.k)
    else:
        rc = _solve_brute(g, args.k, refuse_above_limit=args.method == "auto")
    if rc is None:
        print(f"no {args.k}-role-colouring exists", file=sys.stderr)
        return DECISION_FALSE
    assert validate(g, rc)
    sys.stdout.write(rio.write_colouring(rc))
    return OK


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    rc = _load_colouring(args.colouring)
    try:
        ok = validate(g, rc)
    except ValueError as exc:
        raise rio.ParseError(str(exc)) from None
    if not ok:
        print("colouring is NOT a valid role colouring", file=sys.stderr)
        return DECISION_FALSE
    print("valid role colouring", file=sys.stderr)
    return OK


def cmd_rolegraph(args) -> int:
    g = _load_graph(args.input)
    rc = _load_colouring(args.colouring)
    try:
        r = role_graph(g, rc)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return DECISION_FALSE
    if args.dot:
        sys.stdout.write(rio.role_graph_to_dot(r))
    else:
        payload = {
            "k": r.k,
            "edges": sorted(list(e) for e in r.edges),
            "loops": sorted(r.loops),
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    return OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    limit = oracle_vertex_limit()
    if g.n > limit:
        print(
            f"warning: {g.n} vertices exceeds the practical brute-force "
            f"ceiling of {limit}; this may take very long",
            file=sys.stderr,
        )
    if args.all_k:
        ks = sorted(solvable_k_set(g))
        sys.stdout.write(json.dumps({"solvable_k": ks}, sort_keys=True) + "\n")
        return OK
    if args.k is None:
        raise rio.ParseError("oracle needs --k K or --all-k")
    if not (1 <= args.k <= g.n):
        raise rio.ParseError(f"k must be in 1..{g.n}, got {args.k}")
    rc = solve_exact(g, args.k)
    if rc is None:
        print(f"no {args.k}-role-colouring exists", file=sys.stderr)
        return DECISION_FALSE
    sys.stdout.write(rio.write_colouring(rc))
    return OK


def _build_from_cnf(cnf_path: str, k: int, planar: bool):
    phi = rio.parse_cnf(_read(cnf_path), source=cnf_path)
    phi = planar_tovey_transform(phi) if planar else tovey_transform(phi)
    if k < 2:
        raise rio.ParseError("reduction needs k >= 2")
    return build_reduction(phi, k)


def cmd_reduce(args) -> int:
    rg = _build_from_cnf(args.cnf, args.k, args.planar_tovey)
    out = Path(args.out)
    out.write_text(rio.write_graph(rg.graph))
    sidecar = out.with_suffix(out.suffix + ".labels.json")
    sidecar.write_text(rio.write_reduction_labels(rg))
    print(f"wrote {out} and {sidecar}", file=sys.stderr)
    return OK


def cmd_extract(args) -> int:
    rg = _build_from_cnf(args.cnf, args.k, args.planar_tovey)
    g = _load_graph(args.graph)
    if g != rg.graph:
        raise rio.ParseError(
            f"{args.graph} does not match the reduction built from {args.cnf} at k={args.k}"
        )
    rc = _load_colouring(args.colouring)
    try:
        assignment = colouring_to_assignment(rg, rc)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return DECISION_FALSE
    payload = {"assignment": {f"x{v}": val for v, val in sorted(assignment.items())}}
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    return OK


def cmd_selftest(args) -> int:
    from .report import run_selftest

    return run_selftest(out_dir=args.out, quick=args.quick)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rolecol",
        description="Role colourings: solvers, verification, brute-force oracle, "
        "and SAT reductions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a k-role-colouring")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", required=True, help="graph file (DIMACS-col)")
    p.add_argument(
        "--method",
        choices=["auto", "brute", "path", "tree", "cograph"],
        default="auto",
    )
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a colouring against a graph")
    p.add_argument("--input", required=True)
    p.add_argument("--colouring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rolegraph", help="quotient graph of a valid colouring")
    p.add_argument("--input", required=True)
    p.add_argument("--colouring", required=True)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.set_defaults(func=cmd_rolegraph)

    p = sub.add_parser("oracle", help="exhaustive exact search")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--all-k", action="store_true", dest="all_k")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reduce", help="build the SAT reduction graph")
    p.add_argument("--cnf", required=True, help="formula file (DIMACS CNF)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True, help="output graph file")
    p.add_argument("--planar-tovey", action="store_true", dest="planar_tovey")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("extract", help="read an assignment off a colouring")
    p.add_argument("--cnf", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--colouring", required=True)
    p.add_argument("--planar-tovey", action="store_true", dest="planar_tovey")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("selftest", help="solver cross-checks and report")
    p.add_argument("--out", help="directory for the CSV report and figures")
    p.add_argument("--quick", action="store_true", help="smaller sweeps")
    p.set_defaults(func=cmd_selftest)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except rio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
