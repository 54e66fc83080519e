"""Closed-form decision and construction of role colourings of paths.

A path on n vertices is k-role-colourable exactly when n = k + s(k-1)
(role graph is a loopless path on the colours) or n = 2k + s(2k-1) (role
graph is a path with one self-loop on a leaf colour), for some s >= 0.
The colouring itself is the corresponding walk on the role path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .roles import RoleColouring

NO_LOOP = "no_loop"
LEAF_LOOP = "leaf_loop"


@dataclass(frozen=True)
class PathWitness:
    """A path colouring together with the family that produced it.

    family == NO_LOOP:   n = k + s(k-1), loopless role path.
    family == LEAF_LOOP: n = 2k + s(2k-1), self-loop on the last colour.
    """

    family: str
    s: int
    colouring: RoleColouring


def _family_s(n: int, k: int) -> tuple[str, int] | None:
    """Smallest-s family matching (n, k), or None.

    When both families match, the one with the smaller repetition count
    wins (they can never tie).
    """
    best: tuple[int, str] | None = None
    if n >= k and (n - k) % (k - 1 if k > 1 else 1) == 0:
        if k > 1:
            best = ((n - k) // (k - 1), NO_LOOP)
        elif n == k:  # k == 1: only n == 1 fits the loopless family
            best = (0, NO_LOOP)
    step = 2 * k - 1
    if n >= 2 * k and (n - 2 * k) % step == 0:
        s2 = (n - 2 * k) // step
        if best is None or s2 < best[0]:
            best = (s2, LEAF_LOOP)
    if best is None:
        return None
    return best[1], best[0]


def path_k_colourable(n: int, k: int) -> bool:
    """Decide whether the path on n vertices has a k-role-colouring."""
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return _family_s(n, k) is not None


def colour_path(n: int, k: int) -> PathWitness | None:
    """Construct a witness colouring for the path on n vertices, or None.

    The colouring is the canonical walk on the role path: sweep colours
    1..k and reflect; in the leaf-loop family the final colour repeats at
    each far turning point.
    """
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    fam = _family_s(n, k)
    if fam is None:
        return None
    family, s = fam
    if family == NO_LOOP:
        walk = list(range(1, k + 1))
        direction = -1
        while len(walk) < n:
            last = walk[-1]
            nxt = last + direction
            if nxt < 1 or nxt > k:
                direction = -direction
                nxt = last + direction
            walk.append(nxt)
    else:
        walk = list(range(1, k + 1)) + [k] + list(range(k - 1, 0, -1))
        for _ in range(s):
            walk += list(range(2, k + 1)) + [k] + list(range(k - 1, 0, -1))
    assert len(walk) == n
    return PathWitness(family=family, s=s, colouring=RoleColouring(k=k, colours=tuple(walk)))
