"""Readers and writers for the on-disk formats.

Graphs travel as DIMACS-col style text (``p edge <n> <m>`` header, ``e u v``
lines, 1-indexed); colourings as JSON ``{"k": K, "colours": [...]}``
aligned with file vertex order; CNF formulas as DIMACS CNF.  DOT export is
available for visualisation.
"""

from __future__ import annotations

import json

from .graph import Graph, build_graph
from .roles import RoleColouring, RoleGraph
from .satreduce import CnfFormula, ReductionGraph


class ParseError(ValueError):
    """Malformed input file; the message names the offending line."""


def parse_graph(text: str, source: str = "<graph>") -> Graph:
    n = -1
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise ParseError(f"{source}:{lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"{source}:{lineno}: expected 'p edge <n> <m>'")
            try:
                n = int(parts[2])
            except ValueError:
                raise ParseError(f"{source}:{lineno}: bad vertex count {parts[2]!r}") from None
            if n < 1:
                raise ParseError(f"{source}:{lineno}: vertex count must be >= 1")
        elif parts[0] == "e":
            if n < 0:
                raise ParseError(f"{source}:{lineno}: edge before 'p edge' header")
            if len(parts) != 3:
                raise ParseError(f"{source}:{lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"{source}:{lineno}: bad edge endpoints") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"{source}:{lineno}: endpoint outside 1..{n}")
            if u == v:
                raise ParseError(f"{source}:{lineno}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"{source}:{lineno}: unrecognised line {line!r}")
    if n < 0:
        raise ParseError(f"{source}: missing 'p edge <n> <m>' header")
    return build_graph(n, edges)


def write_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_colouring(text: str, source: str = "<colouring>") -> RoleColouring:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}: invalid JSON: {exc.msg}") from None
    if not isinstance(data, dict) or "k" not in data or "colours" not in data:
        raise ParseError(f'{source}: expected an object with "k" and "colours"')
    k, colours = data["k"], data["colours"]
    if not isinstance(k, int) or not isinstance(colours, list) or not all(
        isinstance(c, int) for c in colours
    ):
        raise ParseError(f"{source}: k must be an int and colours a list of ints")
    return RoleColouring(k=k, colours=tuple(colours))


def write_colouring(rc: RoleColouring) -> str:
    return json.dumps({"k": rc.k, "colours": list(rc.colours)}, sort_keys=True) + "\n"


def parse_cnf(text: str, source: str = "<cnf>") -> CnfFormula:
    num_vars = -1
    num_clauses = -1
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"{source}:{lineno}: expected 'p cnf <vars> <clauses>'")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"{source}:{lineno}: bad counts in problem line") from None
            continue
        if num_vars < 0:
            raise ParseError(f"{source}:{lineno}: clause before 'p cnf' header")
        for tok in parts:
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"{source}:{lineno}: bad literal {tok!r}") from None
            if lit == 0:
                if not current:
                    raise ParseError(f"{source}:{lineno}: empty clause")
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > num_vars:
                    raise ParseError(f"{source}:{lineno}: literal {lit} outside 1..{num_vars}")
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if num_vars < 0:
        raise ParseError(f"{source}: missing 'p cnf' header")
    if num_clauses >= 0 and len(clauses) != num_clauses:
        raise ParseError(
            f"{source}: header promises {num_clauses} clauses, found {len(clauses)}"
        )
    try:
        return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))
    except ValueError as exc:
        raise ParseError(f"{source}: {exc}") from None


def write_cnf(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in phi.clauses]
    return "\n".join(lines) + "\n"


def write_reduction_labels(rg: ReductionGraph) -> str:
    """JSON sidecar mapping file vertex ids (1-indexed) to role tags."""
    data = {
        "k": rg.k,
        "vertex_labels": {str(v + 1): rg.labels[v] for v in range(rg.graph.n)},
    }
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


_DOT_PALETTE = [
    "lightblue", "salmon", "palegreen", "gold", "orchid", "tan",
    "cyan", "yellowgreen", "pink", "lightgray", "orange", "violet",
]


def to_dot(
    g: Graph,
    colouring: RoleColouring | None = None,
    labels: dict[int, str] | None = None,
    name: str = "G",
) -> str:
    """Graphviz DOT text; an optional colouring fills vertices from a
    small palette and an optional label table renames them."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{labels[v]}"')
        if colouring is not None:
            col = _DOT_PALETTE[(colouring.colours[v] - 1) % len(_DOT_PALETTE)]
            attrs.append(f'style=filled fillcolor="{col}"')
        lines.append(f"  {v}" + (f" [{' '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def role_graph_to_dot(r: RoleGraph, name: str = "R") -> str:
    lines = [f"graph {name} {{"]
    for c in range(1, r.k + 1):
        lines.append(f"  {c};")
    for a, b in sorted(r.edges):
        lines.append(f"  {a} -- {b};")
    for c in sorted(r.loops):
        lines.append(f"  {c} -- {c};")
    lines.append("}")
    return "\n".join(lines) + "\n"
