"""Role-colouring validation and the quotient (role) graph.

A role colouring partitions the vertices into k non-empty classes such
that two vertices of the same colour always see the same *set* of colours
in their neighbourhoods.  Equivalently it is a locally surjective
homomorphism onto the role graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, _bfs_component


@dataclass(frozen=True)
class RoleColouring:
    """Assignment of colours 1..k to vertices 0..n-1.

    Every colour in 1..k must be used; colourings on fewer classes are
    rejected by validate() rather than renumbered.
    """

    k: int
    colours: tuple[int, ...]

    def colour_class(self, c: int) -> list[int]:
        return [v for v, col in enumerate(self.colours) if col == c]


@dataclass(frozen=True)
class RoleGraph:
    """Quotient graph on the colours of a valid role colouring.

    ``edges`` holds unordered pairs (c, d) with c < d; self-loops are kept
    separately in ``loops``.  The degree of a colour counts its distinct
    neighbouring colours, a loop contributing the colour itself once.
    """

    k: int
    edges: frozenset[tuple[int, int]]
    loops: frozenset[int]

    def neighbour_colours(self, c: int) -> set[int]:
        out = {d if a == c else a for a, d in self.edges if c in (a, d)}
        if c in self.loops:
            out.add(c)
        return out

    def degree(self, c: int) -> int:
        return len(self.neighbour_colours(c))

    def max_degree(self) -> int:
        return max((self.degree(c) for c in range(1, self.k + 1)), default=0)

    def min_degree(self) -> int:
        return min((self.degree(c) for c in range(1, self.k + 1)), default=0)

    def is_connected(self) -> bool:
        if self.k <= 1:
            return True
        adj: list[list[int]] = [[] for _ in range(self.k + 1)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return len(_bfs_component(adj, 1)) == self.k

    def is_tree_shaped(self) -> bool:
        """Tree on the colours with at most one self-loop."""
        return (
            len(self.edges) == self.k - 1
            and self.is_connected()
            and len(self.loops) <= 1
        )


def _check_lengths(g: Graph, rc: RoleColouring) -> None:
    if len(rc.colours) != g.n:
        raise ValueError(f"colouring has {len(rc.colours)} entries for {g.n} vertices")
    for v, c in enumerate(rc.colours):
        if not (1 <= c <= rc.k):
            raise ValueError(f"vertex {v} has colour {c} outside 1..{rc.k}")


def neighbourhood_colour_set(g: Graph, rc: RoleColouring, v: int) -> frozenset[int]:
    return frozenset(rc.colours[w] for w in g.adj[v])


def validate(g: Graph, rc: RoleColouring) -> bool:
    """True iff rc is a valid role colouring of g.

    Checks that all k classes are non-empty and that within each class
    every vertex has the same neighbourhood colour set.  Raises ValueError
    on length mismatch or out-of-range colours.
    """
    _check_lengths(g, rc)
    if len(set(rc.colours)) != rc.k:
        return False
    class_sig: dict[int, frozenset[int]] = {}
    for v in range(g.n):
        sig = neighbourhood_colour_set(g, rc, v)
        c = rc.colours[v]
        if c in class_sig:
            if class_sig[c] != sig:
                return False
        else:
            class_sig[c] = sig
    return True


def role_graph(g: Graph, rc: RoleColouring) -> RoleGraph:
    """Quotient of g by a valid colouring: edge {c,d} iff c-vertices see d.

    Raises ValueError if the colouring is invalid.
    """
    if not validate(g, rc):
        raise ValueError("colouring is not a valid role colouring")
    edges = set()
    loops = set()
    seen: set[int] = set()
    for v in range(g.n):
        c = rc.colours[v]
        if c in seen:
            continue
        seen.add(c)
        for d in neighbourhood_colour_set(g, rc, v):
            if d == c:
                loops.add(c)
            else:
                edges.add((min(c, d), max(c, d)))
    return RoleGraph(k=rc.k, edges=frozenset(edges), loops=frozenset(loops))


def role_graph_bounds_ok(g: Graph, r: RoleGraph) -> bool:
    """Structural sanity for a role graph computed from a valid colouring:
    degree bounds do not exceed the source graph's, and connectivity of the
    source implies connectivity of the quotient.
    """
    if r.max_degree() > g.max_degree():
        return False
    if r.min_degree() > g.min_degree():
        return False
    if g.is_connected() and not r.is_connected():
        return False
    return True
