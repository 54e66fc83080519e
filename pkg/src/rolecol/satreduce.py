"""Executable SAT-to-role-colouring reductions.

From a CNF formula in 3,3-form (clauses of up to three literals, each
variable occurring at most three times) these constructions build a graph
that has a k-role-colouring exactly when the formula is satisfiable, for
any target k >= 2, together with the translations between satisfying
assignments and valid colourings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import Graph, build_graph
from .roles import RoleColouring, role_graph, validate


@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables 1..num_vars; clauses are tuples of signed ints."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for i, clause in enumerate(self.clauses):
            if not clause:
                raise ValueError(f"clause {i + 1} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {i + 1} has bad literal {lit}")
            if any(-lit in clause for lit in clause):
                raise ValueError(f"clause {i + 1} contains a variable and its negation")

    def occurrence_count(self, var: int) -> int:
        return sum(1 for clause in self.clauses for lit in clause if abs(lit) == var)

    def is_tovey_form(self) -> bool:
        """Clauses of at most three literals, each variable in at most
        three clauses."""
        if any(len(c) > 3 for c in self.clauses):
            return False
        return all(self.occurrence_count(v) <= 3 for v in range(1, self.num_vars + 1))

    def evaluate(self, assignment: dict[int, bool]) -> bool:
        return all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause)
            for clause in self.clauses
        )


def satisfiable_by_truth_table(phi: CnfFormula, max_vars: int = 20) -> dict[int, bool] | None:
    """Exhaustive satisfiability check; first satisfying assignment or None."""
    if phi.num_vars > max_vars:
        raise ValueError(f"truth table refused beyond {max_vars} variables")
    for bits in itertools.product([True, False], repeat=phi.num_vars):
        assignment = {v + 1: b for v, b in enumerate(bits)}
        if phi.evaluate(assignment):
            return assignment
    return None


def formula_graph(phi: CnfFormula) -> Graph:
    """Bipartite incidence graph: vertices 0..num_vars-1 are variables,
    the rest are clauses; variable and clause are adjacent when the
    variable occurs in the clause with either sign."""
    nv = phi.num_vars
    edges = []
    for j, clause in enumerate(phi.clauses):
        for lit in clause:
            edges.append((abs(lit) - 1, nv + j))
    return build_graph(nv + len(phi.clauses), edges)


def tovey_transform(phi: CnfFormula) -> CnfFormula:
    """Split every variable occurring in more than three clauses into one
    fresh variable per occurrence, chained by cyclic implication clauses
    (x_i or not x_{i+1}) that force all copies equal.  Equisatisfiable;
    output variables occur at most three times.
    """
    return _split_variables(phi, threshold=4)


def planar_tovey_transform(phi: CnfFormula) -> CnfFormula:
    """Variant that splits every variable with at least two occurrences,
    mirroring the cycle-of-copies construction that keeps the formula
    graph planar; copies are ordered by input clause order."""
    return _split_variables(phi, threshold=2)


def _split_variables(phi: CnfFormula, threshold: int) -> CnfFormula:
    occurrences: dict[int, int] = {v: phi.occurrence_count(v) for v in range(1, phi.num_vars + 1)}
    fresh = phi.num_vars
    replacement: dict[int, list[int]] = {}
    for v in range(1, phi.num_vars + 1):
        if occurrences[v] >= threshold:
            replacement[v] = [fresh + i + 1 for i in range(occurrences[v])]
            fresh += occurrences[v]
    if not replacement:
        return phi

    new_clauses: list[tuple[int, ...]] = []
    used: dict[int, int] = {v: 0 for v in replacement}
    for clause in phi.clauses:
        out = []
        for lit in clause:
            v = abs(lit)
            if v in replacement:
                copy = replacement[v][used[v]]
                used[v] += 1
                out.append(copy if lit > 0 else -copy)
            else:
                out.append(lit)
        new_clauses.append(tuple(out))
    for v, copies in sorted(replacement.items()):
        cnt = len(copies)
        for i in range(cnt):
            new_clauses.append((copies[i], -copies[(i + 1) % cnt]))
    # split variables leave their original ids unused; renumber compactly
    occurring = sorted({abs(lit) for clause in new_clauses for lit in clause})
    remap = {v: i + 1 for i, v in enumerate(occurring)}
    compact = tuple(
        tuple((1 if lit > 0 else -1) * remap[abs(lit)] for lit in clause)
        for clause in new_clauses
    )
    return CnfFormula(num_vars=len(occurring), clauses=compact)


@dataclass(frozen=True)
class ReductionGraph:
    """Reduction output: the constructed graph, the target colour count,
    and a role tag per vertex (x1, ~x1, y1, C1, ... as in the build)."""

    graph: Graph
    k: int
    labels: dict[int, str] = field(compare=False)
    phi: CnfFormula = field(compare=False)

    def vertex(self, label: str) -> int:
        for v, lab in self.labels.items():
            if lab == label:
                return v
        raise KeyError(label)


def _check_form(phi: CnfFormula) -> None:
    if not phi.is_tovey_form():
        raise ValueError(
            "formula must be in 3,3-form (clauses of <= 3 literals, "
            "each variable in <= 3 clauses); apply tovey_transform first"
        )
    for v in range(1, phi.num_vars + 1):
        if phi.occurrence_count(v) == 0:
            raise ValueError(
                f"variable x{v} occurs in no clause; a floating variable gadget "
                "would break the colouring-to-assignment correspondence"
            )
    if not formula_graph(phi).is_connected():
        raise ValueError(
            "formula graph is disconnected; a disconnected reduction graph is "
            "role-colourable regardless of satisfiability (colour one component "
            "monochromatically) -- reduce each connected subformula separately"
        )


def build_reduction_k2(phi: CnfFormula) -> ReductionGraph:
    """Graph with a 2-role-colouring iff phi is satisfiable.

    Per variable i: a triangle x_i, ~x_i, y_i.  Per clause j: a pendant
    path a_j - b_j - C_j.  Each literal occurrence adds an edge between its
    literal vertex and the clause vertex; a literal with no occurrences
    simply keeps its triangle seat.  Vertex count is 3*(vars + clauses).
    """
    _check_form(phi)
    nv, m = phi.num_vars, len(phi.clauses)
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []

    def xv(i):  # variable index 1..nv -> positive literal vertex
        return 3 * (i - 1)

    for i in range(1, nv + 1):
        x, nx, y = xv(i), xv(i) + 1, xv(i) + 2
        labels[x] = f"x{i}"
        labels[nx] = f"~x{i}"
        labels[y] = f"y{i}"
        edges += [(x, nx), (x, y), (nx, y)]
    base = 3 * nv
    for j in range(1, m + 1):
        c, b, a = base + 3 * (j - 1), base + 3 * (j - 1) + 1, base + 3 * (j - 1) + 2
        labels[c] = f"C{j}"
        labels[b] = f"b{j}"
        labels[a] = f"a{j}"
        edges += [(a, b), (b, c)]
        for lit in phi.clauses[j - 1]:
            lv = xv(abs(lit)) if lit > 0 else xv(abs(lit)) + 1
            edges.append((lv, c))
    return ReductionGraph(
        graph=build_graph(3 * (nv + m), edges), k=2, labels=labels, phi=phi
    )


def build_reduction_k(phi: CnfFormula, k: int) -> ReductionGraph:
    """Graph with a k-role-colouring iff phi is satisfiable, for k >= 3.

    Per variable i: literal vertices x_i and ~x_i joined by a path of
    2k-4 inner vertices z_{i,1..2k-4}, plus an apex y_{i,k-1} adjacent to
    both literals carrying a pendant path y_{i,1..k-2} below it.  Per
    clause j: the clause vertex C_j with a pendant path v_{j,1..k} entering
    at v_{j,k}, and two vertices u_{j,1}, u_{j,2} adjacent to both v_{j,k}
    and C_j.  Literal occurrences add literal-clause edges.
    """
    _check_form(phi)
    if k < 3:
        raise ValueError("this construction needs k >= 3; use build_reduction_k2")
    nv, m = phi.num_vars, len(phi.clauses)
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    per_var = 3 * k - 3  # x, ~x, z * (2k-4), y * (k-1)

    def xv(i):
        return per_var * (i - 1)

    for i in range(1, nv + 1):
        x, nx = xv(i), xv(i) + 1
        labels[x] = f"x{i}"
        labels[nx] = f"~x{i}"
        zs = [xv(i) + 2 + t for t in range(2 * k - 4)]
        for t, z in enumerate(zs, start=1):
            labels[z] = f"z{i},{t}"
        chain = [x] + zs + [nx]
        edges += list(zip(chain, chain[1:]))
        ys = [xv(i) + 2 + (2 * k - 4) + t for t in range(k - 1)]
        for t, y in enumerate(ys, start=1):
            labels[y] = f"y{i},{t}"
        edges += list(zip(ys, ys[1:]))  # y_{i,1} - ... - y_{i,k-1}
        edges += [(ys[-1], x), (ys[-1], nx)]
    base = per_var * nv
    per_clause = k + 3  # C, v * k, u * 2
    for j in range(1, m + 1):
        c = base + per_clause * (j - 1)
        labels[c] = f"C{j}"
        vs = [c + 1 + t for t in range(k)]
        for t, v in enumerate(vs, start=1):
            labels[v] = f"v{j},{t}"
        edges += list(zip(vs, vs[1:]))
        edges.append((vs[-1], c))
        u1, u2 = c + k + 1, c + k + 2
        labels[u1] = f"u{j},1"
        labels[u2] = f"u{j},2"
        edges += [(u1, vs[-1]), (u1, c), (u2, vs[-1]), (u2, c)]
        for lit in phi.clauses[j - 1]:
            lv = xv(abs(lit)) if lit > 0 else xv(abs(lit)) + 1
            edges.append((lv, c))
    n = per_var * nv + per_clause * m
    return ReductionGraph(graph=build_graph(n, edges), k=k, labels=labels, phi=phi)


def build_reduction(phi: CnfFormula, k: int) -> ReductionGraph:
    if k == 2:
        return build_reduction_k2(phi)
    return build_reduction_k(phi, k)


def _true_z_colours(k: int) -> list[int]:
    """Colours along the z-path from a TRUE positive literal (colour k-2)
    toward its partner (colour k): descend k-3..1 then ascend 2..k."""
    return list(range(k - 3, 0, -1)) + list(range(2, k + 1))


def assignment_to_colouring(rg: ReductionGraph, assignment: dict[int, bool]) -> RoleColouring:
    """The canonical colouring encoding a satisfying assignment.

    k = 2: every a_j takes colour 1 and b_j, C_j colour 2; the true literal
    of each variable takes colour 1, the two other triangle vertices 2.
    k >= 3: pendant paths count up 1..k, u vertices take k and C_j takes
    k-1; the true literal takes k-2, its partner k, with the z- and y-path
    colours forced accordingly.

    Raises ValueError when the assignment does not satisfy the formula.
    """
    phi = rg.phi
    if not phi.evaluate(assignment):
        raise ValueError("assignment does not satisfy the formula")
    k = rg.k
    n = rg.graph.n
    colours = [0] * n
    lab = rg.labels
    pos = {lab[v]: v for v in range(n)}
    if k == 2:
        for i in range(1, phi.num_vars + 1):
            true_lab, false_lab = (f"x{i}", f"~x{i}") if assignment[i] else (f"~x{i}", f"x{i}")
            colours[pos[true_lab]] = 1
            colours[pos[false_lab]] = 2
            colours[pos[f"y{i}"]] = 2
        for j in range(1, len(phi.clauses) + 1):
            colours[pos[f"a{j}"]] = 1
            colours[pos[f"b{j}"]] = 2
            colours[pos[f"C{j}"]] = 2
    else:
        for i in range(1, phi.num_vars + 1):
            zcols = _true_z_colours(k)
            if assignment[i]:
                colours[pos[f"x{i}"]] = k - 2
                colours[pos[f"~x{i}"]] = k
            else:
                colours[pos[f"x{i}"]] = k
                colours[pos[f"~x{i}"]] = k - 2
                zcols = zcols[::-1]
            for t, col in enumerate(zcols, start=1):
                colours[pos[f"z{i},{t}"]] = col
            for t in range(1, k):
                colours[pos[f"y{i},{t}"]] = t
        for j in range(1, len(phi.clauses) + 1):
            colours[pos[f"C{j}"]] = k - 1
            colours[pos[f"u{j},1"]] = k
            colours[pos[f"u{j},2"]] = k
            for t in range(1, k + 1):
                colours[pos[f"v{j},{t}"]] = t
    rc = RoleColouring(k=k, colours=tuple(colours))
    if not validate(rg.graph, rc):
        raise ValueError("internal error: canonical colouring failed validation")
    return rc


def colouring_to_assignment(rg: ReductionGraph, rc: RoleColouring) -> dict[int, bool]:
    """Read a satisfying assignment off any valid k-colouring of the
    reduction graph.

    The role graph of such a colouring is always a path of colours with a
    self-loop at one end; renaming colours from the loopless end as
    1, ..., k, variable i is TRUE exactly when its positive literal vertex
    holds colour k-2 (k >= 3) or the colour of the degree-1 vertices
    (k = 2).
    """
    if not validate(rg.graph, rc):
        raise ValueError("colouring is not a valid role colouring of the reduction graph")
    if rc.k != rg.k:
        raise ValueError(f"colouring uses {rc.k} colours, reduction targets {rg.k}")
    rgq = role_graph(rg.graph, rc)
    canonical = _canonical_path_order(rgq)
    if canonical is None:
        raise ValueError("colouring's role graph is not a looped colour path")
    rank = {col: idx + 1 for idx, col in enumerate(canonical)}
    k = rg.k
    true_colour = 1 if k == 2 else k - 2
    assignment: dict[int, bool] = {}
    pos = {rg.labels[v]: v for v in range(rg.graph.n)}
    for i in range(1, rg.phi.num_vars + 1):
        assignment[i] = rank[rc.colours[pos[f"x{i}"]]] == true_colour
    if not rg.phi.evaluate(assignment):
        raise ValueError("internal error: extracted assignment does not satisfy the formula")
    return assignment


def _canonical_path_order(r) -> list[int] | None:
    """Order the colours of a role graph that is a path with exactly one
    self-loop on one end, starting from the loopless end; None otherwise."""
    if len(r.loops) != 1 or len(r.edges) != r.k - 1:
        return None
    nbr: dict[int, list[int]] = {c: [] for c in range(1, r.k + 1)}
    for a, b in r.edges:
        nbr[a].append(b)
        nbr[b].append(a)
    looped = next(iter(r.loops))
    if r.k == 1:
        return [looped]
    ends = [c for c in nbr if len(nbr[c]) == 1]
    if any(len(nbr[c]) > 2 for c in nbr) or len(ends) != 2 or looped not in ends:
        return None
    start = next(e for e in ends if e != looped)
    order = [start]
    prev = None
    while len(order) < r.k:
        nxt = [c for c in nbr[order[-1]] if c != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order if order[-1] == looped else None


def verify_reduction_small(phi: CnfFormula, k: int, work_limit: int = 2_000_000) -> bool:
    """Cross-check the reduction on a small instance: the truth table and
    the exhaustive colouring oracle must agree on (un)satisfiability.

    Refuses (rather than silently grinding) when the partition search
    space S(n, k) exceeds the work limit.
    """
    from .oracle import solve_exact

    rg = build_reduction(phi, k)
    n = rg.graph.n
    if _stirling(n, k) > work_limit:
        raise ValueError(
            f"instance too large: S({n},{k}) partitions exceed the work limit"
        )
    model = satisfiable_by_truth_table(phi)
    rc = solve_exact(rg.graph, k)
    if (rc is not None) != (model is not None):
        return False
    if rc is not None:
        assignment = colouring_to_assignment(rg, rc)
        if not phi.evaluate(assignment):
            return False
    if model is not None and not validate(rg.graph, assignment_to_colouring(rg, model)):
        return False
    return True


def _stirling(n: int, k: int) -> int:
    prev = [1] + [0] * k  # S(0, j)
    for i in range(1, n + 1):
        cur = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            cur[j] = j * prev[j] + prev[j - 1]
        prev = cur
    return prev[k]
