"""Exhaustive exact solver over set partitions; ground truth for everything else.

Partitions of {0..n-1} into exactly k non-empty classes are enumerated as
restricted growth strings in lexicographic order, so results are
deterministic and reproducible.  solve_exact prunes partial partitions
whose finished vertices already disagree, which never changes which
partition is reported first.
"""

from __future__ import annotations

import os
from collections.abc import Iterator

from .graph import Graph
from .roles import RoleColouring, validate

#: Default vertex ceiling for CLI brute-force use; override with the
#: ROLECOL_ORACLE_LIMIT environment variable.
DEFAULT_VERTEX_LIMIT = 13


def oracle_vertex_limit() -> int:
    raw = os.environ.get("ROLECOL_ORACLE_LIMIT", "")
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_VERTEX_LIMIT


def enumerate_k_partitions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every partition of {0..n-1} into exactly k non-empty classes.

    Each partition is a restricted growth string: a tuple a with a[0] = 0
    and a[i] <= max(a[:i]) + 1, where a[i] is the class index of element i.
    Emitted in lexicographic order; the total count is the Stirling
    partition number S(n, k).
    """
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    a = [0] * n

    def rec(i: int, mx: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(a)
            return
        room = n - i - 1
        hi = min(mx + 1, k - 1)
        for c in range(hi + 1):
            nmx = mx if c <= mx else c
            if k - 1 - nmx > room:
                continue
            a[i] = c
            yield from rec(i + 1, nmx)

    return rec(1, 0) if n > 1 else iter([(0,)] if k == 1 else [])


def _rgs_to_colouring(rgs: tuple[int, ...], k: int) -> RoleColouring:
    return RoleColouring(k=k, colours=tuple(c + 1 for c in rgs))


def solve_exact(g: Graph, k: int) -> RoleColouring | None:
    """First valid k-role-colouring in canonical enumeration order, or None.

    An absent answer is certified by exhausting the (pruned) search space.
    Pruning only cuts branches in which two same-class vertices with fully
    assigned neighbourhoods already disagree, so the first partition found
    equals the first one a full enumeration would report.
    """
    if not (1 <= k <= g.n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={g.n}")
    n = g.n
    adj = g.adj
    # Vertex u's neighbourhood set is final once all of max(u, neighbours)
    # are assigned; assignment order is 0, 1, ..., n-1.
    finalized_at: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        finalized_at[max([u] + list(adj[u]))].append(u)

    colour = [0] * n  # class ids 0..k-1 during the search
    class_sig: dict[int, frozenset[int]] = {}

    def rec(i: int, mx: int) -> RoleColouring | None:
        if i == n:
            return _rgs_to_colouring(tuple(colour), k)
        room = n - i - 1
        hi = min(mx + 1, k - 1)
        for c in range(hi + 1):
            nmx = mx if c <= mx else c
            if k - 1 - nmx > room:
                continue
            colour[i] = c
            touched: list[tuple[int, frozenset[int] | None]] = []
            ok = True
            for u in finalized_at[i]:
                sig = frozenset(colour[w] for w in adj[u])
                cu = colour[u]
                prev = class_sig.get(cu)
                if prev is None:
                    class_sig[cu] = sig
                    touched.append((cu, None))
                elif prev != sig:
                    ok = False
                    break
            if ok:
                res = rec(i + 1, nmx)
                if res is not None:
                    return res
            for cu, prev in touched:
                if prev is None:
                    del class_sig[cu]
        return None

    if n == 1:
        rc = RoleColouring(k=1, colours=(1,))
        return rc if k == 1 else None
    # Vertex 0 is pinned to class 0; if it is isolated it is already final.
    for u in finalized_at[0]:
        class_sig[0] = frozenset()
    result = rec(1, 0)
    class_sig.clear()
    return result


def solvable_k_set(g: Graph) -> set[int]:
    """All k in 1..n for which g has a k-role-colouring."""
    return {k for k in range(1, g.n + 1) if solve_exact(g, k) is not None}


def certify(g: Graph, rc: RoleColouring | None) -> bool:
    """Convenience: a returned colouring must always validate."""
    return rc is None or validate(g, rc)
