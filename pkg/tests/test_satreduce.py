import itertools

import pytest

from rolecol.graph import connected_components
from rolecol.oracle import solve_exact
from rolecol.roles import role_graph, validate
from rolecol.satreduce import (
    CnfFormula,
    assignment_to_colouring,
    build_reduction_k,
    build_reduction_k2,
    colouring_to_assignment,
    formula_graph,
    planar_tovey_transform,
    satisfiable_by_truth_table,
    tovey_transform,
    verify_reduction_small,
)

EXAMPLE = CnfFormula(num_vars=2, clauses=((1, 2), (-2,)))


def brute_sat(phi):
    for bits in itertools.product([False, True], repeat=phi.num_vars):
        if phi.evaluate({v + 1: b for v, b in enumerate(bits)}):
            return True
    return False


def test_formula_invariants():
    with pytest.raises(ValueError):
        CnfFormula(1, ((),))
    with pytest.raises(ValueError):
        CnfFormula(1, ((1, -1),))
    with pytest.raises(ValueError):
        CnfFormula(1, ((2,),))


def test_formula_graph_examples():
    fg = formula_graph(EXAMPLE)
    assert fg.n == 4
    assert fg.edges() == [(0, 2), (1, 2), (1, 3)]
    assert formula_graph(CnfFormula(1, ((1,),))).edges() == [(0, 1)]
    fg2 = formula_graph(CnfFormula(2, ((1,), (2,))))
    assert len(connected_components(fg2)) == 2


def test_tovey_four_occurrences():
    phi = CnfFormula(2, ((1, 2), (1,), (-1, 2), (1, -2)))
    out = tovey_transform(phi)
    assert out.num_vars == 1 + 4  # one copy per occurrence of x1, plus x2
    assert len(out.clauses) == 4 + 4  # plus the cyclic binding clauses
    assert out.is_tovey_form()


def test_tovey_noop_on_conforming_input():
    assert tovey_transform(EXAMPLE) == EXAMPLE


@pytest.mark.parametrize("transform", [tovey_transform, planar_tovey_transform])
def test_transform_equisatisfiable(transform):
    formulas = [
        EXAMPLE,
        CnfFormula(2, ((1, 2), (1,), (-1, 2), (1, -2))),
        CnfFormula(2, ((1,), (-1,), (1, 2), (-1, 2), (1, -2))),
        CnfFormula(3, ((1, 2, 3), (-1, -2), (2, -3), (1, -2, 3), (-1, 3))),
    ]
    for phi in formulas:
        out = transform(phi)
        assert out.is_tovey_form()
        assert brute_sat(phi) == brute_sat(out)


def test_planar_tovey_splits_pairs():
    phi = CnfFormula(1, ((1,), (-1,)))
    out = planar_tovey_transform(phi)
    assert out.num_vars == 2  # two copies replace the split variable
    assert len(out.clauses) == 4
    assert out.clauses[:2] == ((1,), (-2,))


def test_reduction_k2_structure():
    rg = build_reduction_k2(EXAMPLE)
    assert rg.graph.n == 12  # 3 per variable + 3 per clause
    by_label = {lab: v for v, lab in rg.labels.items()}
    e = rg.graph.has_edge
    # variable triangles
    for i in (1, 2):
        x, nx, y = by_label[f"x{i}"], by_label[f"~x{i}"], by_label[f"y{i}"]
        assert e(x, nx) and e(x, y) and e(nx, y)
    # clause pendant paths
    for j in (1, 2):
        assert e(by_label[f"a{j}"], by_label[f"b{j}"])
        assert e(by_label[f"b{j}"], by_label[f"C{j}"])
    # literal-clause incidences: x1 and x2 in C1, negated x2 in C2
    assert e(by_label["x1"], by_label["C1"])
    assert e(by_label["x2"], by_label["C1"])
    assert e(by_label["~x2"], by_label["C2"])
    assert not e(by_label["~x1"], by_label["C1"])
    assert rg.graph.m == 13


def test_reduction_k2_census():
    phi = CnfFormula(3, ((1, 2, 3), (-1, -2), (-3,)))
    rg = build_reduction_k2(phi)
    assert rg.graph.n == 3 * (3 + 3)


def test_reduction_k_census():
    phi = CnfFormula(1, ((1,),))
    for k in (3, 4, 5):
        rg = build_reduction_k(phi, k)
        assert rg.graph.n == (3 * k - 3) + (k + 3)


def test_reduction_rejects_bad_input():
    with pytest.raises(ValueError):
        build_reduction_k2(CnfFormula(1, ((1,), (1,), (1,), (1,))))  # 4 occurrences
    with pytest.raises(ValueError):
        build_reduction_k2(CnfFormula(2, ((1,),)))  # unused variable
    with pytest.raises(ValueError):
        build_reduction_k2(CnfFormula(2, ((1,), (2,))))  # disconnected formula graph
    with pytest.raises(ValueError):
        build_reduction_k(EXAMPLE, 2)


def test_canonical_colouring_roundtrip_k2():
    rg = build_reduction_k2(EXAMPLE)
    rc = assignment_to_colouring(rg, {1: True, 2: False})
    assert rc.colours == (1, 2, 2, 2, 1, 2, 2, 2, 1, 2, 2, 1)
    assert validate(rg.graph, rc)
    r = role_graph(rg.graph, rc)
    assert sorted(r.edges) == [(1, 2)] and set(r.loops) == {2}
    assert colouring_to_assignment(rg, rc) == {1: True, 2: False}


def test_canonical_colouring_roundtrip_k3():
    rg = build_reduction_k(EXAMPLE, 3)
    rc = assignment_to_colouring(rg, {1: True, 2: False})
    assert validate(rg.graph, rc)
    assert colouring_to_assignment(rg, rc) == {1: True, 2: False}
    # canonical pattern: pendant clause path counts 1..k, helpers take k,
    # the clause vertex k-1, true literals k-2
    lab = {v: l for v, l in rg.labels.items()}
    for v in range(rg.graph.n):
        if lab[v] == "x1":
            assert rc.colours[v] == 1
        if lab[v] == "~x2":
            assert rc.colours[v] == 1
        if lab[v].startswith("C"):
            assert rc.colours[v] == 2
        if lab[v].startswith("u"):
            assert rc.colours[v] == 3


def test_unsatisfying_assignment_rejected():
    rg = build_reduction_k2(EXAMPLE)
    with pytest.raises(ValueError):
        assignment_to_colouring(rg, {1: False, 2: True})


def test_unsat_formula_not_colourable():
    phi = CnfFormula(2, ((1, 2), (-1,), (-2,)))
    rg = build_reduction_k2(phi)
    assert solve_exact(rg.graph, 2) is None


def test_oracle_colouring_extracts_satisfying_assignment():
    phi = CnfFormula(2, ((1,), (-1, 2)))
    rg = build_reduction_k2(phi)
    rc = solve_exact(rg.graph, 2)
    assert rc is not None
    assignment = colouring_to_assignment(rg, rc)
    assert phi.evaluate(assignment)


def connected_small_formulas(max_clauses=3):
    literals = [1, -1, 2, -2]
    pool = []
    for size in (1, 2):
        for combo in itertools.combinations(literals, size):
            if not any(-l in combo for l in combo):
                pool.append(tuple(sorted(combo, key=abs)))
    for m in range(1, max_clauses + 1):
        for clauses in itertools.combinations(pool, m):
            used = sorted({abs(l) for c in clauses for l in c})
            remap = {v: i + 1 for i, v in enumerate(used)}
            cl = tuple(
                tuple((1 if l > 0 else -1) * remap[abs(l)] for l in c) for c in clauses
            )
            phi = CnfFormula(num_vars=len(used), clauses=cl)
            if phi.is_tovey_form() and formula_graph(phi).is_connected():
                yield phi


def test_verify_reduction_small_sweep_k2():
    count = 0
    for phi in connected_small_formulas():
        assert verify_reduction_small(phi, 2), phi
        count += 1
    assert count >= 80


def test_verify_reduction_small_k3():
    assert verify_reduction_small(CnfFormula(1, ((1,),)), 3)


def test_verify_reduction_refuses_oversized():
    phi = CnfFormula(3, ((1, 2, 3), (-1, -2), (-3, 1)))
    with pytest.raises(ValueError):
        verify_reduction_small(phi, 7, work_limit=1000)


def test_satisfiable_by_truth_table():
    assert satisfiable_by_truth_table(EXAMPLE) == {1: True, 2: False}
    unsat = CnfFormula(1, ((1,), (-1,)))
    assert satisfiable_by_truth_table(unsat) is None
