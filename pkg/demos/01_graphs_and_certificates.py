#!/usr/bin/env python3
"""Graphs, the indeque property, and checkable certificates.

A vertex set is an *indeque set* when the subgraph it induces is a
disjoint union of cliques - no two cliques joined by an edge.  The
handy test: such graphs are exactly the graphs with no induced
3-vertex path.
"""

from indeque import (
    ClusterCertificate,
    disjoint_union,
    find_induced_p3,
    from_edge_list,
    is_cluster,
    parse_graph6,
    serialize_graph6,
    verify_indeque,
)
from indeque.generators import complete, cycle, path

# Build a 4-cycle explicitly.
square = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("the 4-cycle:", square, "edges:", square.edges())

# A triangle together with an edge is a cluster graph; the 4-cycle is not.
print("\nK3 + K2 a cluster?", is_cluster(disjoint_union(complete(3), path(2))))
print("C4 a cluster?", is_cluster(square))
print("its least induced 3-path:", find_induced_p3(square))

# verify_indeque either partitions the set into cliques or pinpoints
# an induced 3-path inside it.
print("\n{0,1} in C4 ->", verify_indeque(square, {0, 1}))
outcome = verify_indeque(square, {0, 1, 2})
print("{0,1,2} in C4 ->", outcome)
assert not isinstance(outcome, ClusterCertificate)

# Certificates are normalized, so they compare structurally and
# serialize stably.
cert = verify_indeque(path(6), {4, 3, 0, 1})
print("\n{0,1,3,4} in P6 ->", cert.to_json())

# graph6 is the interchange format for computer-search pipelines.
line = serialize_graph6(square)
print("\nC4 as graph6:", line)
print("round-trips exactly:", parse_graph6(line) == square)
