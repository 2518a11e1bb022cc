"""Indeque number toolkit.

The indeque number of a graph is the size of a largest vertex set
whose induced subgraph is a disjoint union of cliques (equivalently,
has no induced 3-vertex path); it is the complement of minimum
cluster vertex deletion.  The package provides exact solvers with
verifiable certificates, constructive approximations with proven
guarantees (2/3 on forests, 1/2 on graphs whose blocks carry the
narrow-block structure, ceil(4n/15) from 5-class acyclic colorings),
the graph families behind the extremal bounds, and graph6 tooling
for computer-search workflows.
"""

from .blocks import BlockDecomposition, decompose, leaf_blocks
from .coloring import (
    AcyclicColoring,
    ColoringViolation,
    coloring_guarantee,
    greedy_acyclic_coloring,
    indeque_via_coloring,
    parse_coloring,
    serialize_coloring,
    verify_acyclic_coloring,
)
from .exact import (
    CapExceededError,
    SolveResult,
    SolveStats,
    brute_force,
    enumerate_maximum_sets,
    solve,
)
from .forest import CyclicInputError, indeque_forest, indeque_forest_detailed
from .generators import (
    TriangularGridCoords,
    apexiated_octahedron,
    complete,
    cycle,
    matching_with_isolated,
    path,
    random_forest,
    random_pw2,
    star,
    triangular_grid,
    triangular_indeque_pattern,
)
from .graph import (
    Graph,
    GraphError,
    OracleLimitError,
    alpha_brute,
    connected_components,
    disjoint_union,
    find_induced_p3,
    from_edge_list,
    induced_subgraph,
    omega_brute,
    oracle_limit,
)
from .graph6 import (
    EdgeListError,
    Graph6Error,
    UnsupportedFormatError,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    serialize_graph6,
)
from .pathwidth2 import (
    BlockStructure,
    CPath,
    EndCap,
    Pw2Result,
    Pw2Step,
    StructureMismatch,
    extract_structure,
    indeque_pw2,
    indeque_pw2_detailed,
)
from .verify import (
    ClusterCertificate,
    P3Witness,
    certificate_partition,
    is_cluster,
    verify_indeque,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
