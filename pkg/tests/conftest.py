"""Shared test helpers: seeded graphs and independent oracles.

Each oracle here deliberately re-derives its answer from first
principles (exhaustive enumeration, direct definition checks) so
that the library code is validated by an independent route.
"""

from __future__ import annotations

import random
from itertools import combinations

from indeque.graph import Graph


def random_graph(seed: int, n: int, p: float) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def is_cluster_by_components(g: Graph) -> bool:
    """Definition check: every connected component induces a clique."""
    seen = set()
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        for u in comp:
            for w in comp:
                if u < w and not g.has_edge(u, w):
                    return False
    return True


def subset_is_cluster(g: Graph, sub: set[int]) -> bool:
    """No induced 3-path inside ``sub``, checked pair by pair."""
    sub = set(sub)
    for b in sub:
        nbrs = [u for u in g.adj[b] if u in sub]
        for a, c in combinations(nbrs, 2):
            if not g.has_edge(a, c):
                return False
    return True


def indeque_by_enumeration(g: Graph) -> int:
    """Maximum indeque set size by scanning all vertex subsets."""
    best = 0
    verts = list(range(g.n))
    for r in range(g.n, 0, -1):
        if r <= best:
            break
        for sub in combinations(verts, r):
            if subset_is_cluster(g, set(sub)):
                best = r
                break
    return best


def alpha_by_enumeration(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        if r <= best:
            break
        for sub in combinations(range(g.n), r):
            if all(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = r
                break
    return best


def omega_by_enumeration(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        if r <= best:
            break
        for sub in combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = r
                break
    return best


def pathwidth_by_vertex_separation(g: Graph) -> int:
    """Pathwidth via the vertex-separation DP over subsets (n <= ~14)."""
    n = g.n
    if n == 0:
        return 0
    masks = g.masks
    full = (1 << n) - 1
    INF = n + 1
    f = [0] * (1 << n)
    for sub in range(1, 1 << n):
        boundary = 0
        probe = sub
        while probe:
            bit = probe & -probe
            if masks[bit.bit_length() - 1] & ~sub & full:
                boundary += 1
            probe ^= bit
        best = INF
        probe = sub
        while probe:
            bit = probe & -probe
            prev = f[sub ^ bit]
            if prev < best:
                best = prev
            probe ^= bit
        f[sub] = max(boundary, best)
    return f[full]


def make_five_colorable(seed: int, n: int):
    """Random sparse graph built around a known 5-class acyclic coloring.

    Edges are only accepted when they keep every two-class subgraph a
    forest (tracked by a union-find per class pair), so the returned
    coloring is acyclic by construction.
    """
    from indeque.coloring import AcyclicColoring

    rng = random.Random(seed)
    classes = [[] for _ in range(5)]
    color = {}
    for v in range(n):
        c = rng.randrange(5)
        classes[c].append(v)
        color[v] = c
    parents = {}

    def find(d, x):
        d.setdefault(x, x)
        while d[x] != x:
            d[x] = d[d[x]]
            x = d[x]
        return x

    edges = []
    for _ in range(3 * n):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or color[u] == color[v]:
            continue
        key = tuple(sorted((color[u], color[v])))
        d = parents.setdefault(key, {})
        ru, rv = find(d, u), find(d, v)
        if ru == rv:
            continue
        d[ru] = rv
        edges.append((u, v))
    col = AcyclicColoring(tuple(tuple(sorted(c)) for c in classes))
    return Graph(n, edges), col
