"""Cotree construction and constructive role colourings of cographs.

Cographs (the graphs with no induced 4-vertex path) decompose recursively
into disjoint unions and joins of single vertices.  Every cograph on at
least k >= 2 vertices admits a k-role-colouring, built here by splitting
the colour budget across the top of the cotree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, build_graph
from .roles import RoleColouring

LEAF = "leaf"
UNION = "union"
JOIN = "join"


@dataclass(frozen=True)
class CoTree:
    """Union/join decomposition: leaves carry original vertex ids, internal
    nodes have >= 2 children, and no union node has a union child (nor join
    a join child), which makes the form canonical."""

    kind: str
    vertex: int | None = None
    children: tuple["CoTree", ...] = ()

    def leaves(self) -> list[int]:
        if self.kind == LEAF:
            return [self.vertex]  # type: ignore[list-item]
        out: list[int] = []
        for ch in self.children:
            out.extend(ch.leaves())
        return out


def _components_within(g: Graph, vs: list[int], complement: bool) -> list[list[int]]:
    """Connected components of the induced subgraph (or of its complement)."""
    inset = set(vs)
    comps = []
    seen: set[int] = set()
    for v in vs:
        if v in seen:
            continue
        comp = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for x in frontier:
                if complement:
                    nbrs = inset - set(g.adj[x]) - {x}
                else:
                    nbrs = inset & set(g.adj[x])
                for y in nbrs:
                    if y not in comp:
                        comp.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= comp
        comps.append(sorted(comp))
    comps.sort()
    return comps


def build_cotree(g: Graph) -> CoTree | None:
    """Canonical cotree of g, or None when g has an induced P4.

    Recursive rule: a disconnected graph is the union of its components; a
    graph with disconnected complement is the join of its co-components;
    anything else beyond a single vertex is not a cograph.
    """

    def rec(vs: list[int]) -> CoTree | None:
        if len(vs) == 1:
            return CoTree(kind=LEAF, vertex=vs[0])
        comps = _components_within(g, vs, complement=False)
        if len(comps) > 1:
            kids = []
            for comp in comps:
                sub = rec(comp)
                if sub is None:
                    return None
                kids.append(sub)
            return CoTree(kind=UNION, children=tuple(kids))
        cocomps = _components_within(g, vs, complement=True)
        if len(cocomps) > 1:
            kids = []
            for comp in cocomps:
                sub = rec(comp)
                if sub is None:
                    return None
                kids.append(sub)
            return CoTree(kind=JOIN, children=tuple(kids))
        return None

    return rec(list(range(g.n)))


def cotree_to_graph(ct: CoTree, n: int) -> Graph:
    """Evaluate a cotree back into the graph it describes."""
    edges: list[tuple[int, int]] = []

    def rec(node: CoTree) -> list[int]:
        if node.kind == LEAF:
            return [node.vertex]  # type: ignore[list-item]
        groups = [rec(ch) for ch in node.children]
        if node.kind == JOIN:
            for i in range(len(groups)):
                for j in range(i + 1, len(groups)):
                    edges.extend((u, v) for u in groups[i] for v in groups[j])
        return [v for gp in groups for v in gp]

    rec(ct)
    return build_graph(n, edges)


def _one_role_colourable(g: Graph, vs: list[int]) -> bool:
    """Monochromatic colouring is valid iff no vertex is isolated within vs
    or the induced subgraph has no edge at all."""
    inset = set(vs)
    degs = [len(inset & set(g.adj[v])) for v in vs]
    return all(d > 0 for d in degs) or all(d == 0 for d in degs)


def one_role_colourable(g: Graph) -> bool:
    return _one_role_colourable(g, list(range(g.n)))


def _two_role(g: Graph, vs: list[int]) -> dict[int, int]:
    """Valid 2-role-colouring of the induced cograph on vs (needs >= 2
    vertices).  Follows the constructive case split on the top cotree node.
    """
    comps = _components_within(g, vs, complement=False)
    colour: dict[int, int] = {}
    if len(comps) > 1:
        isolated = [c for c in comps if len(c) == 1]
        bigs = [c for c in comps if len(c) > 1]
        if isolated and bigs:
            groups = [(isolated, 1), (bigs, 2)]
        elif isolated:
            groups = [(isolated[:1], 1), (isolated[1:], 2)]
        else:
            groups = [(bigs[:1], 1), (bigs[1:], 2)]
        for comp_list, col in groups:
            for comp in comp_list:
                for v in comp:
                    colour[v] = col
        return colour

    # Connected: top node is a join of co-components.
    cocomps = _components_within(g, vs, complement=True)
    if len(cocomps) < 2:
        raise ValueError("induced subgraph is not a cograph")
    g1 = cocomps[0]
    g2 = [v for comp in cocomps[1:] for v in comp]
    if len(g1) > 1 and len(g2) > 1:
        colour.update(_two_role(g, g1))
        colour.update(_two_role(g, g2))
        return colour
    if len(g1) == 1:
        apex, rest = g1[0], g2
    else:
        apex, rest = g2[0], g1
    colour[apex] = 1
    if _one_role_colourable(g, rest):
        for v in rest:
            colour[v] = 2
        return colour
    # rest is disconnected with both isolated vertices and larger
    # components: isolated ones turn colour 2; in each larger component a
    # maximal independent set turns colour 2 (so colour-2 vertices see only
    # colour 1, while every colour-1 vertex keeps a colour-2 neighbour).
    for comp in _components_within(g, rest, complement=False):
        if len(comp) == 1:
            colour[comp[0]] = 2
        else:
            blues: set[int] = set()
            for v in comp:
                if not blues & set(g.adj[v]):
                    blues.add(v)
            for v in comp:
                colour[v] = 2 if v in blues else 1
    return colour


def two_role_colour(g: Graph) -> RoleColouring:
    """Valid 2-role-colouring of a cograph with at least 2 vertices."""
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    if build_cotree(g) is None:
        raise ValueError("input graph is not a cograph")
    colour = _two_role(g, list(range(g.n)))
    return RoleColouring(k=2, colours=tuple(colour[v] for v in range(g.n)))


class CographSplitError(RuntimeError):
    """No admissible colour split at a cotree node; not expected to happen
    for genuine cographs with 2 <= k <= n."""


def _k_role(g: Graph, vs: list[int], k: int) -> dict[int, int]:
    n = len(vs)
    assert 1 <= k <= n
    if k == 1:
        return {v: 1 for v in vs}
    if k == 2:
        return _two_role(g, vs)
    if k == n:
        return {v: i + 1 for i, v in enumerate(sorted(vs))}

    comps = _components_within(g, vs, complement=False)
    if len(comps) > 1:
        parts = comps
        joined = False
    else:
        parts = _components_within(g, vs, complement=True)
        if len(parts) < 2:
            raise ValueError("induced subgraph is not a cograph")
        joined = True

    # Group the node's parts into two blocks and split the colour budget;
    # a block may take a single colour only if it is 1-role-colourable.
    for boundary in range(1, len(parts)):
        g1 = [v for comp in parts[:boundary] for v in comp]
        g2 = [v for comp in parts[boundary:] for v in comp]
        n1, n2 = len(g1), len(g2)
        for k1 in range(1, k):
            k2 = k - k1
            if k1 > n1 or k2 > n2:
                continue
            if k1 == 1 and not _one_role_colourable(g, g1):
                continue
            if k2 == 1 and not _one_role_colourable(g, g2):
                continue
            c1 = _k_role(g, g1, k1)
            c2 = _k_role(g, g2, k2)
            return {**c1, **{v: c + k1 for v, c in c2.items()}}

    # Disjoint budget splits can genuinely run out at a join (k = 3 with
    # neither side 1-role-colourable).  Reusing all k colours on both join
    # sides is then always valid: every vertex sees every colour.
    if joined:
        for boundary in range(1, len(parts)):
            g1 = sorted(v for comp in parts[:boundary] for v in comp)
            g2 = sorted(v for comp in parts[boundary:] for v in comp)
            if len(g1) >= k and len(g2) >= k:
                out = {}
                for side in (g1, g2):
                    for i, v in enumerate(side):
                        out[v] = i % k + 1
                return out
    raise CographSplitError(f"no feasible colour split for k={k} over {len(parts)} parts")


def k_role_colour(g: Graph, k: int) -> RoleColouring:
    """Valid k-role-colouring of a cograph, for any 2 <= k <= n.

    Recursively splits the colour budget at the top union/join of the
    cotree, keeping the two blocks' colour sets disjoint.
    """
    if not (2 <= k <= g.n):
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={g.n}")
    if build_cotree(g) is None:
        raise ValueError("input graph is not a cograph")
    colour = _k_role(g, list(range(g.n)), k)
    return RoleColouring(k=k, colours=tuple(colour[v] for v in range(g.n)))


def cograph_k_colourable(g: Graph, k: int) -> bool:
    """Decision: any 1 < k <= n works on a cograph; k = 1 needs every
    vertex busy or every vertex isolated."""
    if not (1 <= k <= g.n):
        return False
    if k == 1:
        return one_role_colourable(g)
    return True


def random_cograph(n: int, rng: random.Random) -> Graph:
    """Random cograph on n vertices from a random cotree."""
    edges: list[tuple[int, int]] = []

    def rec(ids: list[int], join: bool) -> None:
        if len(ids) <= 1:
            return
        cut = rng.randint(1, len(ids) - 1)
        left, right = ids[:cut], ids[cut:]
        if join:
            edges.extend((u, v) for u in left for v in right)
        rec(left, not join if rng.random() < 0.8 else join)
        rec(right, not join if rng.random() < 0.8 else join)

    rec(list(range(n)), rng.random() < 0.5)
    return build_graph(n, edges)
