"""Polynomial tree algorithms: role-tree enumeration plus homomorphism DP
for small colour counts, and duplicate-class search for small surplus n-k.

A valid role colouring of a tree always has a role graph that is a tree
with at most one self-loop, so the constant-k solver enumerates labelled
role trees (Prüfer decoding crossed with a loop choice) and checks each
with a rooted dynamic programme.  The constant-surplus solver exploits the
fact that duplicated colours can only live close to the fringe of the
tree: every same-coloured pair (u, v) has at most n-k vertices strictly
behind u away from v, and symmetrically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, build_graph, is_tree
from .roles import RoleColouring, validate


@dataclass(frozen=True)
class RoleTree:
    """Candidate role graph for a tree: a labelled tree on colours 1..k
    with at most one self-loop."""

    k: int
    edges: tuple[tuple[int, int], ...]
    loop: int | None = None

    def neighbour_sets(self) -> list[frozenset[int]]:
        """Neighbour colour set per colour, index 0 unused.  A loop puts
        the colour into its own set."""
        sets: list[set[int]] = [set() for _ in range(self.k + 1)]
        for a, b in self.edges:
            sets[a].add(b)
            sets[b].add(a)
        if self.loop is not None:
            sets[self.loop].add(self.loop)
        return [frozenset(s) for s in sets]


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence over labels 0..n-1 into tree edges."""
    if n == 1:
        return []
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be {n - 2}, got {len(seq)}")
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 0
    leaf = -1
    for v in seq:
        if leaf < 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, v))
        deg[leaf] -= 1
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    u = -1
    for i in range(n):
        if deg[i] == 1:
            if u < 0:
                u = i
            else:
                edges.append((u, i))
                break
    return edges


def enumerate_labelled_trees(n: int):
    """All n^(n-2) labelled trees on 0..n-1 as edge lists, in Prüfer
    lexicographic order."""
    if n == 1:
        yield []
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def enumerate_role_trees(k: int):
    """All (k+1) * k^(k-2) candidate role trees on colours 1..k.

    Labelled trees come from Prüfer decoding in lexicographic order, each
    crossed with a loop choice in (None, 1, ..., k).  No isomorphism
    reduction is attempted; duplicates cost time, not correctness.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    loops: list[int | None] = [None] + list(range(1, k + 1))
    for edges in enumerate_labelled_trees(k):
        shifted = tuple((a + 1, b + 1) for a, b in edges)
        for loop in loops:
            yield RoleTree(k=k, edges=shifted, loop=loop)


# ---------------------------------------------------------------------------
# Rooted tree plumbing


def _root_tree(g: Graph, root: int = 0) -> tuple[list[int], list[list[int]], list[int]]:
    """BFS rooting: (order, children, parent)."""
    parent = [-1] * g.n
    children: list[list[int]] = [[] for _ in range(g.n)]
    order = [root]
    seen = [False] * g.n
    seen[root] = True
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                children[v].append(w)
                order.append(w)
    return order, children, parent


def _subtree_sizes(g: Graph, order: list[int], children: list[list[int]]) -> list[int]:
    size = [1] * g.n
    for v in reversed(order):
        for w in children[v]:
            size[v] += size[w]
    return size


def tree_diameter(g: Graph) -> int:
    """Longest path length (edges) in a tree, via double BFS."""

    def far(start: int) -> tuple[int, int]:
        dist = {start: 0}
        frontier = [start]
        best = (0, start)
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        if (dist[w], -w) > (best[0], -best[1]):
                            best = (dist[w], w)
                        nxt.append(w)
            frontier = nxt
        return best

    _, a = far(0)
    d, _ = far(a)
    return d


def tree_canonical_form(adj: list[tuple[int, ...]] | list[list[int]], marked: int | None = None) -> str:
    """Canonical string for a free tree, rooted at its centroid.

    ``marked`` optionally distinguishes one vertex (used for the loop
    position of role trees); isomorphisms must preserve the mark.
    """
    n = len(adj)
    if n == 1:
        return "(*)" if marked == 0 else "()"
    deg = [len(a) for a in adj]
    removed = [False] * n
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            remaining -= 1
            for w in adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centres = [v for v in range(n) if not removed[v]]

    def enc(v: int, par: int) -> str:
        subs = sorted(enc(w, v) for w in adj[v] if w != par)
        mark = "*" if v == marked else ""
        return "(" + mark + "".join(subs) + ")"

    if len(centres) == 1:
        return enc(centres[0], -1)
    a, b = centres
    ea, eb = enc(a, b), enc(b, a)
    return min(ea + "|" + eb, eb + "|" + ea)


def enumerate_trees(n: int) -> list[Graph]:
    """All free trees on n vertices, one representative per isomorphism
    class, grown by attaching a leaf to every smaller tree and
    deduplicating on a canonical form.  Deterministic order.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    level: dict[str, list[list[int]]] = {"()": [[]]}
    for m in range(2, n + 1):
        nxt: dict[str, list[list[int]]] = {}
        for adj in level.values():
            for attach in range(m - 1):
                grown = [list(a) for a in adj] + [[attach]]
                grown[attach].append(m - 1)
                key = tree_canonical_form(grown)
                if key not in nxt:
                    nxt[key] = grown
        level = nxt
    out = []
    for key in sorted(level):
        adj = level[key]
        out.append(build_graph(n, [(v, w) for v in range(n) for w in adj[v] if v < w]))
    return out


# ---------------------------------------------------------------------------
# Locally surjective homomorphism DP


def locally_surjective_hom(t: Graph, r: RoleTree) -> RoleColouring | None:
    """Colouring of the tree t whose role graph is exactly r, or None.

    Rooted DP: vertex v taking colour c under a parent coloured p is
    feasible iff the children of v can be coloured from r's neighbour set
    of c so that their colours together with p cover that set exactly.
    Because r is connected, any solution automatically uses all k colours.
    """
    if not is_tree(t):
        raise ValueError("input graph is not a tree")
    k = r.k
    nsets = r.neighbour_sets()
    masks = [0] * (k + 1)  # colour c -> bitmask of nsets[c]
    for c in range(1, k + 1):
        m = 0
        for d in nsets[c]:
            m |= 1 << (d - 1)
        masks[c] = m

    order, children, parent = _root_tree(t)

    # reach[v][c] = set of achievable children-colour unions (bitmasks over
    # nsets[c]); None marks infeasibility for every parent colour.
    reach: list[list[set[int] | None]] = [[None] * (k + 1) for _ in range(t.n)]

    def child_options(v: int, c: int) -> list[list[int]] | None:
        opts = []
        for w in children[v]:
            sw = [d for d in range(1, k + 1) if masks[c] >> (d - 1) & 1 and _ok(w, d, c)]
            if not sw:
                return None
            opts.append(sw)
        return opts

    def _ok(v: int, c: int, p: int) -> bool:
        rs = reach[v][c]
        if rs is None:
            return False
        pb = 1 << (p - 1)
        if not masks[c] & pb:
            return False
        need = masks[c] & ~pb
        return any(m & need == need for m in rs)

    for v in reversed(order):
        for c in range(1, k + 1):
            opts = child_options(v, c)
            if opts is None:
                continue
            acc = {0}
            for sw in opts:
                acc = {m | (1 << (d - 1)) for m in acc for d in sw}
            reach[v][c] = acc

    root = order[0]
    root_colour = next(
        (c for c in range(1, k + 1) if reach[root][c] is not None and masks[c] in reach[root][c]),
        None,
    )
    if root_colour is None:
        return None

    # Reconstruct one witness top-down, preferring small colours.
    colours = [0] * t.n

    def assign(v: int, c: int, p: int | None) -> None:
        colours[v] = c
        if not children[v]:
            return
        need = masks[c] & ~(1 << (p - 1)) if p is not None else masks[c]
        opts = child_options(v, c)
        assert opts is not None
        # suffix-reachable unions to steer greedy choices
        suffix: list[set[int]] = [set() for _ in range(len(opts) + 1)]
        suffix[len(opts)] = {0}
        for i in range(len(opts) - 1, -1, -1):
            suffix[i] = {m | (1 << (d - 1)) for m in suffix[i + 1] for d in opts[i]}
        acc = 0
        chosen = []
        for i, sw in enumerate(opts):
            pick = None
            for d in sw:
                cand = acc | (1 << (d - 1))
                if any((cand | m) & need == need for m in suffix[i + 1]):
                    pick = d
                    break
            assert pick is not None
            chosen.append(pick)
            acc |= 1 << (pick - 1)
        for w, d in zip(children[v], chosen):
            assign(w, d, c)

    assign(root, root_colour, None)
    rc = RoleColouring(k=k, colours=tuple(colours))
    assert len(set(colours)) == k
    return rc


# ---------------------------------------------------------------------------
# Constant-k solver: role-tree class decision plus filtered labelled scan


def _degree_census_ok(rdeg_sorted: list[int], tdeg_sorted: list[int]) -> bool:
    """Every colour class needs a vertex at least as busy as the colour:
    matching sorted degree sequences greedily is necessary."""
    return all(rd <= td for rd, td in zip(rdeg_sorted, tdeg_sorted))


def _role_tree_classes(k: int) -> list[tuple[str, RoleTree]]:
    """One representative per isomorphism class of (free tree on k colours,
    loop position or none)."""
    out: dict[str, RoleTree] = {}
    for shape in enumerate_trees(k):
        adj = [list(a) for a in shape.adj]
        edges = tuple((a + 1, b + 1) for a, b in shape.edges())
        for loop in [None] + list(range(k)):
            key = tree_canonical_form(adj, marked=loop)
            if key not in out:
                out[key] = RoleTree(k=k, edges=edges, loop=None if loop is None else loop + 1)
    return sorted(out.items())


def solve_tree_constant_k(t: Graph, k: int) -> RoleColouring | None:
    """First role colouring of the tree t over the canonical role-tree
    enumeration, or None when no role tree admits one.

    Candidate role trees that provably cannot host t (degree census,
    diameter, or a known-infeasible isomorphism class) are skipped without
    changing which candidate succeeds first.
    """
    if not is_tree(t):
        raise ValueError("input graph is not a tree")
    if not (1 <= k <= t.n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={t.n}")

    if k == 1:
        for loop in (None, 1):
            rc = locally_surjective_hom(t, RoleTree(k=1, edges=(), loop=loop))
            if rc is not None:
                return rc
        return None

    # Feasibility is an isomorphism invariant of the role tree, so decide
    # it per class first; bail out early when every class fails.
    feasible_classes: set[str] = set()
    for key, rep in _role_tree_classes(k):
        if locally_surjective_hom(t, rep) is not None:
            feasible_classes.add(key)
    if not feasible_classes:
        return None

    tdeg = sorted((t.degree(v) for v in range(t.n)), reverse=True)
    tdiam = tree_diameter(t)
    loops: list[int | None] = [None] + list(range(1, k + 1))

    for seq in itertools.product(range(k), repeat=k - 2):
        base = [1] * k
        for x in seq:
            base[x] += 1
        if not _degree_census_ok(sorted(base, reverse=True), tdeg):
            continue  # a loop only raises colour degrees
        edges0 = prufer_decode(tuple(seq), k)
        adj0: list[list[int]] = [[] for _ in range(k)]
        for a, b in edges0:
            adj0[a].append(b)
            adj0[b].append(a)
        if tree_diameter(build_graph(k, edges0)) > tdiam:
            continue
        edges = tuple((a + 1, b + 1) for a, b in edges0)
        for loop in loops:
            if loop is not None:
                base[loop - 1] += 1
                census = _degree_census_ok(sorted(base, reverse=True), tdeg)
                base[loop - 1] -= 1
                if not census:
                    continue
            key = tree_canonical_form(adj0, marked=None if loop is None else loop - 1)
            if key not in feasible_classes:
                continue
            rc = locally_surjective_hom(t, RoleTree(k=k, edges=edges, loop=loop))
            if rc is not None:
                return rc
    return None


def double_role_tree(r: RoleTree) -> RoleTree:
    """Loopless stand-in for a looped role tree: two loop-free copies glued
    by an edge at the looped colour.  A tree has a colouring for r exactly
    when it has one for the doubled tree (merging mirror classes)."""
    if r.loop is None:
        raise ValueError("role tree has no loop to double")
    k = r.k
    edges = list(r.edges)
    edges += [(a + k, b + k) for a, b in r.edges]
    edges.append((r.loop, r.loop + k))
    return RoleTree(k=2 * k, edges=tuple(edges), loop=None)


# ---------------------------------------------------------------------------
# Constant-surplus solver


@dataclass(frozen=True)
class HubGadgetDecomposition:
    """Greedy decomposition of a tree into pendant gadgets of bounded size.

    A gadget is a maximal pendant subtree with at most 2*surplus + 1
    vertices whose removal keeps the rest connected; overlap ties are
    broken by taking larger vertex sets first, then lexicographically.
    Hubs are the non-gadget vertices adjacent to a gadget.
    """

    surplus: int
    gadgets: tuple[tuple[int, ...], ...]
    hubs: tuple[int, ...]
    free_vertices: tuple[int, ...]


def hub_gadget_decomposition(t: Graph, surplus: int) -> HubGadgetDecomposition:
    if not is_tree(t):
        raise ValueError("input graph is not a tree")
    if surplus < 1:
        raise ValueError("surplus must be >= 1")
    bound = 2 * surplus + 1
    order, children, parent = _root_tree(t)
    size = _subtree_sizes(t, order, children)

    def down_set(v: int) -> tuple[int, ...]:
        out = []
        stack = [v]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(children[x])
        return tuple(sorted(out))

    candidates: list[tuple[int, ...]] = []
    for v in range(t.n):
        if parent[v] < 0:
            continue
        if size[v] <= bound:
            candidates.append(down_set(v))
        if t.n - size[v] <= bound:
            candidates.append(tuple(sorted(set(range(t.n)) - set(down_set(v)))))
    candidates.sort(key=lambda s: (-len(s), s))

    taken: set[int] = set()
    gadgets: list[tuple[int, ...]] = []
    for cand in candidates:
        if taken.isdisjoint(cand):
            gadgets.append(cand)
            taken.update(cand)
    gadgets.sort()

    in_gadget = set(taken)
    hubs = sorted(
        v
        for v in range(t.n)
        if v not in in_gadget and any(w in in_gadget for w in t.adj[v])
    )
    free = sorted(v for v in range(t.n) if v not in in_gadget and v not in hubs)
    return HubGadgetDecomposition(
        surplus=surplus,
        gadgets=tuple(gadgets),
        hubs=tuple(hubs),
        free_vertices=tuple(free),
    )


def _far_side_sizes(t: Graph) -> list[list[int]]:
    """far[u][v]: vertices separated from v by u (excluding u itself).

    A vertex that cuts the tree into several large pieces can never share
    a colour: for any same-coloured pair, the far side behind each member
    holds at most n-k vertices.
    """
    n = t.n
    far = [[0] * n for _ in range(n)]
    for u in range(n):
        comp_of = [-1] * n
        comp_sizes = []
        for idx, w0 in enumerate(t.adj[u]):
            cnt = 0
            stack = [w0]
            comp_of[w0] = idx
            while stack:
                x = stack.pop()
                cnt += 1
                for y in t.adj[x]:
                    if y != u and comp_of[y] < 0:
                        comp_of[y] = idx
                        stack.append(y)
            comp_sizes.append(cnt)
        for v in range(n):
            if v != u:
                far[u][v] = (n - 1) - comp_sizes[comp_of[v]]
    return far


def solve_tree_constant_surplus(t: Graph, k: int) -> RoleColouring | None:
    """Role colouring of the tree t using k = n - surplus colours, or None.

    Searches assignments whose duplicated classes sum to exactly the
    surplus, restricting classes to mutually close vertex groups (each
    member's far side away from any classmate has at most surplus
    vertices); all other vertices are rainbow-coloured.  Every candidate
    is checked with validate() before being returned.
    """
    if not is_tree(t):
        raise ValueError("input graph is not a tree")
    if not (1 <= k <= t.n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={t.n}")
    n = t.n
    surplus = n - k
    if surplus == 0:
        return RoleColouring(k=n, colours=tuple(range(1, n + 1)))

    far = _far_side_sizes(t)
    allowed = [
        [far[u][v] <= surplus and far[v][u] <= surplus and u != v for v in range(n)]
        for u in range(n)
    ]

    def colouring_for(classes: list[tuple[int, ...]]) -> RoleColouring:
        in_class = {v for cl in classes for v in cl}
        groups = sorted(classes + [(v,) for v in range(n) if v not in in_class])
        colours = [0] * n
        for idx, cl in enumerate(groups, start=1):
            for v in cl:
                colours[v] = idx
        return RoleColouring(k=len(groups), colours=tuple(colours))

    used = [False] * n

    def extend_class(base: list[int], cands: list[int], max_extra: int):
        """Grow base by up to max_extra mutually allowed unused vertices."""
        yield tuple(base)
        if max_extra == 0:
            return
        for i, v in enumerate(cands):
            if not used[v] and all(allowed[v][u] for u in base):
                yield from extend_class(base + [v], cands[i + 1 :], max_extra - 1)

    def search(start: int, budget: int) -> RoleColouring | None:
        for v in range(start, n):
            if used[v]:
                continue
            partners = [u for u in range(v + 1, n) if allowed[v][u]]
            for cls in extend_class([v], partners, budget):
                if len(cls) < 2:
                    continue
                rest = budget - (len(cls) - 1)
                pending.append(cls)
                if rest == 0:
                    rc = colouring_for(pending)
                    pending.pop()
                    if validate(t, rc):
                        return rc
                else:
                    for u in cls:
                        used[u] = True
                    res = search(v + 1, rest)
                    for u in cls:
                        used[u] = False
                    pending.pop()
                    if res is not None:
                        return res
        return None

    pending: list[tuple[int, ...]] = []
    return search(0, surplus)
