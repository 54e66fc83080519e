"""Self-test sweeps with an optional file report.

Each check cross-validates a structured solver against the exhaustive
oracle on a small corpus and prints one PASS/FAIL line.  With an output
directory the same results land in ``selftest.csv`` next to a handful of
rendered figures (path feasibility map, a coloured tree, a coloured
reduction graph).
"""

from __future__ import annotations

import csv
import sys
from dataclasses import dataclass
from pathlib import Path
from random import Random

from .cographs import k_role_colour, random_cograph
from .graph import Graph, connected_components, path_graph
from .oracle import solve_exact
from .paths import path_k_colourable
from .roles import RoleColouring, validate
from .satreduce import (
    CnfFormula,
    assignment_to_colouring,
    build_reduction_k2,
    colouring_to_assignment,
)
from .trees import enumerate_trees, solve_tree_constant_k, solve_tree_constant_surplus


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _check_paths(max_n: int) -> CheckResult:
    cases = failures = 0
    for n in range(1, max_n + 1):
        g = path_graph(n)
        for k in range(1, n + 1):
            cases += 1
            if path_k_colourable(n, k) != (solve_exact(g, k) is not None):
                failures += 1
    return CheckResult("path-lemma-vs-oracle", cases, failures)


def _check_trees(max_n: int) -> CheckResult:
    cases = failures = 0
    for n in range(1, max_n + 1):
        for t in enumerate_trees(n):
            for k in range(1, n + 1):
                cases += 1
                want = solve_exact(t, k) is not None
                got_k = solve_tree_constant_k(t, k)
                got_s = solve_tree_constant_surplus(t, k)
                bad = (got_k is not None) != want or (got_s is not None) != want
                if not bad:
                    for rc in (got_k, got_s):
                        if rc is not None and not validate(t, rc):
                            bad = True
                if bad:
                    failures += 1
    return CheckResult("tree-solvers-vs-oracle", cases, failures)


def _check_cographs(max_n: int, samples: int) -> CheckResult:
    rng = Random(20240831)
    cases = failures = 0
    graphs = [random_cograph(rng.randint(2, max_n), rng) for _ in range(samples)]
    for g in graphs:
        for k in range(2, g.n + 1):
            cases += 1
            rc = k_role_colour(g, k)
            if not validate(g, rc):
                failures += 1
    return CheckResult("cograph-totality", cases, failures)


def _example_formula() -> CnfFormula:
    return CnfFormula(num_vars=2, clauses=((1, 2), (-2,)))


def _check_reduction() -> CheckResult:
    cases = failures = 0
    rg = build_reduction_k2(_example_formula())
    cases += 1
    if rg.graph.n != 12:
        failures += 1
    rc = assignment_to_colouring(rg, {1: True, 2: False})
    cases += 1
    if not validate(rg.graph, rc):
        failures += 1
    cases += 1
    if colouring_to_assignment(rg, rc) != {1: True, 2: False}:
        failures += 1
    found = solve_exact(rg.graph, 2)
    cases += 1
    if found is None or not rg.phi.evaluate(colouring_to_assignment(rg, found)):
        failures += 1
    return CheckResult("reduction-roundtrip", cases, failures)


def _write_figures(out: Path, max_n: int) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    written = []

    # Feasibility map of the closed-form path decision.
    grid = [[1.0 if k <= n and path_k_colourable(n, k) else 0.0 for k in range(1, max_n + 1)]
            for n in range(1, max_n + 1)]
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.imshow(grid, origin="lower", cmap="Greens", extent=(0.5, max_n + 0.5, 0.5, max_n + 0.5))
    ax.set_xlabel("colours k")
    ax.set_ylabel("path vertices n")
    ax.set_title("k-role-colourability of paths")
    fig.tight_layout()
    p = out / "path_feasibility.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    written.append(p)

    # A coloured spider tree.
    spider = Graph(
        n=7,
        adj=((1, 3, 5), (0, 2), (1,), (0, 4), (3,), (0, 6), (5,)),
    )
    rc = solve_tree_constant_k(spider, 3)
    if rc is not None:
        p = out / "tree_colouring.png"
        _draw_graph(plt, spider, rc, p, title="3-role-colouring of a spider tree")
        written.append(p)

    # The 2-colouring of the canonical reduction instance.
    rg = build_reduction_k2(_example_formula())
    rc2 = assignment_to_colouring(rg, {1: True, 2: False})
    p = out / "reduction_colouring.png"
    _draw_graph(plt, rg.graph, rc2, p, labels=rg.labels,
                title="2-role-colouring of the reduction graph")
    written.append(p)
    return written


def _layout(g: Graph) -> dict[int, tuple[float, float]]:
    """Deterministic layout: circular per connected component, components
    side by side."""
    import math

    pos = {}
    x_off = 0.0
    for comp in connected_components(g):
        r = max(1.0, len(comp) / 3.0)
        for i, v in enumerate(comp):
            ang = 2 * math.pi * i / len(comp)
            pos[v] = (x_off + r * math.cos(ang), r * math.sin(ang))
        x_off += 2.5 * r
    return pos


def _draw_graph(plt, g: Graph, rc: RoleColouring, path: Path,
                labels: dict[int, str] | None = None, title: str = "") -> None:
    pos = _layout(g)
    fig, ax = plt.subplots(figsize=(6, 5))
    for u, v in g.edges():
        ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]],
                color="gray", zorder=1, linewidth=1)
    cmap = plt.get_cmap("tab10")
    xs = [pos[v][0] for v in range(g.n)]
    ys = [pos[v][1] for v in range(g.n)]
    cols = [cmap((rc.colours[v] - 1) % 10) for v in range(g.n)]
    ax.scatter(xs, ys, c=cols, s=320, zorder=2, edgecolors="black")
    for v in range(g.n):
        text = labels[v] if labels else str(rc.colours[v])
        ax.annotate(text, pos[v], ha="center", va="center", fontsize=7, zorder=3)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def run_selftest(out_dir: str | None = None, quick: bool = False) -> int:
    max_path_n = 8 if quick else 10
    max_tree_n = 5 if quick else 6
    results = [
        _check_paths(max_path_n),
        _check_trees(max_tree_n),
        _check_cographs(12 if quick else 18, 10 if quick else 30),
        _check_reduction(),
    ]
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        print(f"{status} {res.name}: {res.cases - res.failures}/{res.cases} cases")

    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        csv_path = out / "selftest.csv"
        with csv_path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["check", "cases", "failures", "status"])
            for res in results:
                writer.writerow([res.name, res.cases, res.failures,
                                 "pass" if res.ok else "fail"])
        written = [csv_path] + _write_figures(out, 14)
        for p in written:
            print(f"wrote {p}", file=sys.stderr)
    return 0 if all(r.ok for r in results) else 1
