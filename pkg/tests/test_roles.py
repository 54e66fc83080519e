import itertools
import random

import pytest

from rolecol.graph import build_graph, complete_graph, path_graph
from rolecol.oracle import solve_exact
from rolecol.roles import (
    RoleColouring,
    role_graph,
    role_graph_bounds_ok,
    validate,
)


def test_validate_p2_examples():
    p2 = path_graph(3)
    assert validate(p2, RoleColouring(2, (1, 2, 1)))
    assert not validate(p2, RoleColouring(2, (1, 1, 2)))


def test_validate_rainbow_and_mono():
    for g in [path_graph(4), complete_graph(4), build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])]:
        assert validate(g, RoleColouring(g.n, tuple(range(1, g.n + 1))))
        assert validate(g, RoleColouring(1, (1,) * g.n))
    # isolated vertex breaks the monochromatic colouring
    assert not validate(build_graph(3, [(1, 2)]), RoleColouring(1, (1, 1, 1)))


def test_validate_requires_all_classes_used():
    p2 = path_graph(3)
    assert not validate(p2, RoleColouring(3, (1, 2, 1)))


def test_validate_errors():
    p2 = path_graph(3)
    with pytest.raises(ValueError):
        validate(p2, RoleColouring(2, (1, 2)))
    with pytest.raises(ValueError):
        validate(p2, RoleColouring(2, (1, 3, 1)))
    with pytest.raises(ValueError):
        validate(p2, RoleColouring(2, (0, 1, 2)))


def test_validate_invariant_under_colour_renaming():
    rng = random.Random(11)
    g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)])
    for _ in range(200):
        k = rng.randint(1, g.n)
        colours = tuple(rng.randint(1, k) for _ in range(g.n))
        rc = RoleColouring(k, colours)
        perm = list(range(1, k + 1))
        rng.shuffle(perm)
        renamed = RoleColouring(k, tuple(perm[c - 1] for c in colours))
        assert validate(g, rc) == validate(g, renamed)


def test_role_graph_examples():
    p2 = path_graph(3)
    r = role_graph(p2, RoleColouring(3, (1, 2, 3)))
    assert sorted(r.edges) == [(1, 2), (2, 3)] and not r.loops

    p3 = path_graph(4)
    r = role_graph(p3, RoleColouring(2, (1, 2, 2, 1)))
    assert sorted(r.edges) == [(1, 2)] and set(r.loops) == {2}

    with pytest.raises(ValueError):
        role_graph(p2, RoleColouring(2, (1, 1, 2)))


def test_role_graph_mono_loop():
    r = role_graph(path_graph(3), RoleColouring(1, (1, 1, 1)))
    assert not r.edges and set(r.loops) == {1}
    assert r.degree(1) == 1
    assert r.is_tree_shaped()


def test_bounds_examples():
    k2 = build_graph(2, [(0, 1)])
    assert role_graph_bounds_ok(k2, role_graph(k2, RoleColouring(2, (1, 2))))
    p2 = path_graph(3)
    assert role_graph_bounds_ok(p2, role_graph(p2, RoleColouring(1, (1, 1, 1))))


def test_bounds_hold_for_all_oracle_colourings():
    # degree bounds and connectivity inheritance across an exhaustive sweep
    rng = random.Random(3)
    graphs = [path_graph(6), complete_graph(5), build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3)])]
    for _ in range(20):
        n = rng.randint(2, 7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        graphs.append(build_graph(n, edges))
    for g in graphs:
        for k in range(1, g.n + 1):
            rc = solve_exact(g, k)
            if rc is not None:
                assert role_graph_bounds_ok(g, role_graph(g, rc))


def test_within_class_signature_equality():
    # restatement of the definition, checked explicitly on oracle output
    g = build_graph(6, [(0, 1), (0, 2), (1, 3), (2, 4), (4, 5)])
    for k in range(1, 7):
        rc = solve_exact(g, k)
        if rc is None:
            continue
        for u, v in itertools.combinations(range(g.n), 2):
            if rc.colours[u] == rc.colours[v]:
                nsu = {rc.colours[w] for w in g.adj[u]}
                nsv = {rc.colours[w] for w in g.adj[v]}
                assert nsu == nsv
