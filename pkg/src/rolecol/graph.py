"""Immutable simple undirected graphs and structural classification.

Vertices are dense integer ids 0..n-1.  Any labelling (literal names,
clause names, ...) lives in side tables owned by the modules that need it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus sorted adjacency lists.

    Invariants: no self-loops, no multi-edges, adjacency symmetric,
    neighbour tuples sorted ascending.  Instances are immutable and safe
    to share across threads.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = _bfs_component(self.adj, 0)
        return len(seen) == self.n


@dataclass(frozen=True)
class GraphClass:
    """Structural classification of a graph.

    ``kind`` is the most specific of path < tree < cograph < general.
    A graph can be several of these at once (a star is a tree and a
    cograph); the boolean fields record each membership.
    """

    is_path: bool
    is_tree: bool
    is_cograph: bool
    connected: bool
    has_isolated_vertex: bool

    @property
    def kind(self) -> str:
        if self.is_path:
            return "path"
        if self.is_tree:
            return "tree"
        if self.is_cograph:
            return "cograph"
        return "general"


def build_graph(n: int, edges) -> Graph:
    """Build a Graph from a vertex count and an iterable of endpoint pairs.

    Duplicate edges (in either orientation) collapse; the result does not
    depend on the order of the edge list.

    Raises ValueError for n < 1, out-of-range endpoints, or self-loops.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n=n, adj=tuple(tuple(sorted(s)) for s in nbrs))


def path_graph(n: int) -> Graph:
    """Path on n vertices: 0-1-2-...-(n-1)."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and the given number of leaves."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _bfs_component(adj, start: int) -> set[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    comps = []
    assigned = [False] * g.n
    for v in range(g.n):
        if not assigned[v]:
            comp = _bfs_component(g.adj, v)
            for w in comp:
                assigned[w] = True
            comps.append(sorted(comp))
    return comps


def is_tree(g: Graph) -> bool:
    return g.is_connected() and g.m == g.n - 1


def is_path(g: Graph) -> bool:
    return is_tree(g) and g.max_degree() <= 2


def is_cograph(g: Graph) -> bool:
    """True iff the graph has no induced path on four vertices."""
    from .cographs import build_cotree  # local import: cographs builds on Graph

    return build_cotree(g) is not None


def classify(g: Graph) -> GraphClass:
    """Classify a graph as path / tree / cograph / general plus flags."""
    tree = is_tree(g)
    return GraphClass(
        is_path=tree and g.max_degree() <= 2,
        is_tree=tree,
        is_cograph=is_cograph(g),
        connected=g.is_connected(),
        has_isolated_vertex=any(len(a) == 0 for a in g.adj),
    )


def is_dangling_path(g: Graph, vs: list[int]) -> bool:
    """Check whether vs is a dangling path: an induced path whose first
    vertex has degree 1 in g and whose interior vertices have degree 2.

    The last vertex may have any degree.  The path need not be maximal.
    """
    if not vs or len(set(vs)) != len(vs):
        return False
    for a, b in itertools.combinations(range(len(vs)), 2):
        adjacent = g.has_edge(vs[a], vs[b])
        if adjacent != (b - a == 1):
            return False
    if g.degree(vs[0]) != 1:
        return False
    return all(g.degree(v) == 2 for v in vs[1:-1])


def dangling_paths_from_leaves(g: Graph, max_len: int) -> list[list[int]]:
    """All dangling paths of up to max_len vertices, one maximal extension
    per degree-1 start vertex, truncated to max_len.

    Every shorter prefix of a returned path is itself dangling.
    """
    paths = []
    for v in range(g.n):
        if g.degree(v) != 1:
            continue
        path = [v]
        prev, cur = v, g.adj[v][0]
        while len(path) < max_len:
            path.append(cur)
            if g.degree(cur) != 2:
                break
            nxt = g.adj[cur][0] if g.adj[cur][1] == prev else g.adj[cur][1]
            prev, cur = cur, nxt
        paths.append(path)
    return paths
