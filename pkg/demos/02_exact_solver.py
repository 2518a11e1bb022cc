#!/usr/bin/env python3
"""Exact indeque numbers: the search, the oracle, and a 10-vertex star.

The branch-and-bound deletes one vertex of some induced 3-path at a
time; the subset oracle enumerates everything.  They always agree,
and both return certificates that re-verify.
"""

from indeque import (
    alpha_brute,
    brute_force,
    certificate_partition,
    enumerate_maximum_sets,
    omega_brute,
    solve,
    verify_indeque,
)
from indeque.generators import apexiated_octahedron, matching_with_isolated, path

# The independence number and the clique number both bound the indeque
# number, but the gaps can be made as large as you like:
for n in (1, 2, 3, 4):
    g = matching_with_isolated(n)
    print(
        f"n={n}: alpha={alpha_brute(g)} omega={omega_brute(g)}"
        f" indeque={solve(g).value} (3n={3 * n})"
    )

# Paths show the forest-tight ratio 2/3.
print("\npath P12 ->", solve(path(12)).value, "= 2*12/3")

# The octahedron with apexes on alternating faces is the smallest
# known planar graph with indeque ratio 2/5.
g = apexiated_octahedron()
exact = brute_force(g)  # exhaustive over all 2^10 subsets
fast = solve(g)
print("\napexiated octahedron:", g)
print("oracle value:", exact.value, "| branch-and-bound:", fast.value,
      f"({fast.stats.nodes} branch nodes)")

# Every partition of 4 is realized by some maximum set.
certs = enumerate_maximum_sets(g)
partitions = sorted({certificate_partition(c) for c in certs}, reverse=True)
print(f"{len(certs)} maximum sets; clique-size partitions: {partitions}")

some = certs[0]
print("one of them:", some.to_json(),
      "re-verifies:", verify_indeque(g, some.covered) == some)
