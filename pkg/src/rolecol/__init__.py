"""Role colourings of graphs: exact solvers, verification, and reductions.

A role colouring partitions the vertices of a graph into non-empty colour
classes so that same-coloured vertices see identical colour sets in their
neighbourhoods.  The package offers closed-form solvers for paths, tree
algorithms for small colour count or small surplus, constructive
colourings for cographs, an exhaustive oracle, and executable
SAT-to-role-colouring reductions, all behind a deterministic CLI.
"""

from .cographs import CoTree, build_cotree, k_role_colour, two_role_colour
from .graph import (
    Graph,
    GraphClass,
    build_graph,
    classify,
    connected_components,
    is_dangling_path,
)
from .oracle import enumerate_k_partitions, solvable_k_set, solve_exact
from .paths import PathWitness, colour_path, path_k_colourable
from .roles import RoleColouring, RoleGraph, role_graph, role_graph_bounds_ok, validate
from .satreduce import (
    CnfFormula,
    ReductionGraph,
    assignment_to_colouring,
    build_reduction,
    build_reduction_k,
    build_reduction_k2,
    colouring_to_assignment,
    formula_graph,
    tovey_transform,
    verify_reduction_small,
)
from .trees import (
    HubGadgetDecomposition,
    RoleTree,
    enumerate_role_trees,
    hub_gadget_decomposition,
    locally_surjective_hom,
    solve_tree_constant_k,
    solve_tree_constant_surplus,
)

__version__ = "0.1.0"

__all__ = [
    "CnfFormula",
    "CoTree",
    "Graph",
    "GraphClass",
    "HubGadgetDecomposition",
    "PathWitness",
    "ReductionGraph",
    "RoleColouring",
    "RoleGraph",
    "RoleTree",
    "assignment_to_colouring",
    "build_cotree",
    "build_graph",
    "build_reduction",
    "build_reduction_k",
    "build_reduction_k2",
    "classify",
    "colour_path",
    "colouring_to_assignment",
    "connected_components",
    "enumerate_k_partitions",
    "enumerate_role_trees",
    "formula_graph",
    "hub_gadget_decomposition",
    "is_dangling_path",
    "k_role_colour",
    "locally_surjective_hom",
    "path_k_colourable",
    "role_graph",
    "role_graph_bounds_ok",
    "solvable_k_set",
    "solve_exact",
    "solve_tree_constant_k",
    "solve_tree_constant_surplus",
    "tovey_transform",
    "two_role_colour",
    "validate",
    "verify_reduction_small",
]
