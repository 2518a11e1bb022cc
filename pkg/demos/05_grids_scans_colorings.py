#!/usr/bin/env python3
"""Triangular grids, acyclic colorings, and graph6 stream scans.

Three ways to chase extremal ratios: a periodic pattern on the
triangular grid achieving density 2/5, the coloring route to a
ceil(4n/15) bound on any graph with a 5-class acyclic coloring, and
a scanner that hunts for low-ratio graphs in graph6 streams.
"""

import math

from indeque import (
    brute_force,
    greedy_acyclic_coloring,
    indeque_via_coloring,
    serialize_graph6,
    solve,
    triangular_grid,
    triangular_indeque_pattern,
    verify_indeque,
)
from indeque.coloring import coloring_guarantee
from indeque.generators import apexiated_octahedron, cycle, path

# The grid T_n has (n+1)(n+2)/2 vertices; the pattern keeps >= 2/5 of
# them, exactly matching the best known density for planar graphs.
print("n  |V|  pattern  exact?  ratio")
for n in range(0, 8):
    g, _ = triangular_grid(n)
    pat = triangular_indeque_pattern(n)
    assert verify_indeque(g, pat).size == len(pat)
    exact = brute_force(g).value if g.n <= 16 else None
    print(f"{n}  {g.n:3d}  {len(pat):4d}     {exact}   {len(pat) / g.n:.3f}")

# The pattern tiles two of every three diagonals with triangles;
# larger grids keep the density.
for n in (15, 30):
    g, _ = triangular_grid(n)
    pat = triangular_indeque_pattern(n)
    print(f"n={n}: {len(pat)}/{g.n} = {len(pat) / g.n:.4f} (>= 0.4)")

# Acyclic colorings: the two largest classes induce a forest, and the
# forest construction keeps 2/3 of it.
g = apexiated_octahedron()
col = greedy_acyclic_coloring(g)
s = indeque_via_coloring(g, col)
print(f"\noctahedron coloring with {col.count} classes ->",
      f"indeque set of {len(s)} (guarantee {coloring_guarantee(g.n, col.count)})")

# Scan workflow: pipe any graph6 stream through the solver and track
# the per-size minima.  (The CLI `indeque scan` does this with
# worker processes; here is the library loop.)
stream = [cycle(4), path(6), apexiated_octahedron()]
best = min(
    (solve(g).value / g.n, i, serialize_graph6(g)) for i, g in enumerate(stream)
)
print("\nscanned", len(stream), "graphs; minimum ratio",
      f"{best[0]:.3f} at stream index {best[1]} ({best[2]})")
print("matches 2/5:", math.isclose(best[0], 0.4))
