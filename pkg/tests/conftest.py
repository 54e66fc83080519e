"""Shared test helpers: independent reference implementations used to
cross-check the library (brute-force subgraph checks, counting recurrences,
truth tables)."""

from __future__ import annotations

import itertools

import pytest

from rolecol.graph import Graph
from rolecol.oracle import enumerate_k_partitions
from rolecol.roles import RoleColouring, validate


def has_induced_p4(g: Graph) -> bool:
    """Reference cograph test: scan all 4-subsets for an induced path."""
    for sub in itertools.combinations(range(g.n), 4):
        edges = [(a, b) for a, b in itertools.combinations(sub, 2) if g.has_edge(a, b)]
        if len(edges) != 3:
            continue
        deg = {v: 0 for v in sub}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        if sorted(deg.values()) == [1, 1, 2, 2]:
            return True
    return False


def stirling2(n: int, k: int) -> int:
    """Partition numbers from the standard recurrence."""
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, min(i, k) + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def all_valid_colourings(g: Graph):
    """Every valid role colouring of g, by full enumeration."""
    for k in range(1, g.n + 1):
        for rgs in enumerate_k_partitions(g.n, k):
            rc = RoleColouring(k=k, colours=tuple(c + 1 for c in rgs))
            if validate(g, rc):
                yield rc


def tree_path(g: Graph, u: int, v: int) -> list[int]:
    """The unique u-v path in a tree."""
    prev: dict[int, int | None] = {u: None}
    frontier = [u]
    while v not in prev:
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    path = [v]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


@pytest.fixture(scope="session")
def small_trees():
    """All free trees up to 8 vertices, for reuse across test modules."""
    from rolecol.trees import enumerate_trees

    return {n: enumerate_trees(n) for n in range(1, 9)}
