"""Periodic colouring numbers of simple connected graphs.

``chi_o`` is the largest k for which the oriented edges split into k nonempty
classes that advance by one along every non-backtracking step; ``chi_t`` is
the largest number of vertex colours for which every simple path with t edges
has equally coloured ends.
"""

from .chroma import ChromaResult, chi, chi_star, chroma_summary
from .families import ExpectedValues, FamilySpec, generate, parse_family, subdivide
from .graph_core import (
    Graph,
    GraphClass,
    GraphError,
    branch_vertices,
    classify,
    distance,
    girth,
    is_bipartite,
    parse_edge_list,
)
from .oracles import oracle_chi_o, oracle_chi_t
from .oriented import (
    CircularPartition,
    ConstraintComponent,
    chi_o,
    circular_witness,
    constraint_components,
    feasible_k_set,
    is_circularly_k_partite,
    nb_arcs,
    oriented_edges,
    verify_partition,
)
from .vertex import (
    PathRelation,
    VertexColouring,
    build_t_periodic_colouring,
    chi_t,
    path_relation,
    tau_shape,
    verify_t_periodic,
)

__all__ = [
    "ChromaResult", "chi", "chi_star", "chroma_summary",
    "ExpectedValues", "FamilySpec", "generate", "parse_family", "subdivide",
    "Graph", "GraphClass", "GraphError", "branch_vertices", "classify", "distance",
    "girth", "is_bipartite", "parse_edge_list",
    "oracle_chi_o", "oracle_chi_t",
    "CircularPartition", "ConstraintComponent", "chi_o", "circular_witness", "constraint_components",
    "feasible_k_set", "is_circularly_k_partite", "nb_arcs", "oriented_edges", "verify_partition",
    "PathRelation", "VertexColouring", "build_t_periodic_colouring", "chi_t", "path_relation",
    "tau_shape", "verify_t_periodic",
]  # fmt: skip
