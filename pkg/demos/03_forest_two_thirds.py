#!/usr/bin/env python3
"""Forests: a linear-time indeque set covering 2/3 of the vertices.

The construction peels a deepest leaf v and its neighbor u: three
vertices leave, two join the answer.  On paths with 3 | n this is
exactly optimal, so 2/3 is the forest ratio - no algorithm can
promise more on every forest.
"""

import math
from collections import Counter

from indeque import indeque_forest, random_forest, solve, verify_indeque
from indeque.forest import indeque_forest_detailed
from indeque.generators import path, star

# Tight on paths:
for n in (3, 6, 9, 12):
    print(f"P{n}: kept {len(indeque_forest(path(n)))} of {n}")

# On a star the algorithm keeps all the leaves.
print("\nstar with 3 leaves ->", sorted(indeque_forest(star(3))))

# The step trace shows the 3-out/2-in rhythm.
f = random_forest(7, 20)
kept, steps = indeque_forest_detailed(f)
print(f"\nrandom forest on {f.n} vertices:")
for st in steps:
    print(f"  removed {list(st.removed)} kept {list(st.added)}")
print("total kept:", len(kept), ">= ceil(2n/3) =", math.ceil(2 * f.n / 3))

# Against the exact solver the construction is often optimal and
# never beats it.
gaps = Counter()
for seed in range(300):
    f = random_forest(seed, 4 + seed % 12)
    s = indeque_forest(f)
    assert verify_indeque(f, s).size == len(s)
    gaps[solve(f).value - len(s)] += 1
print("\ngap to optimal over 300 small forests:", dict(sorted(gaps.items())))
