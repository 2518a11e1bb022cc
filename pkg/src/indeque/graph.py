"""Simple undirected graphs with dense vertex ids 0..n-1.

Graphs are immutable after construction and safe to share between
threads.  Adjacency is exposed as sorted neighbor tuples; per-vertex
bitmasks are kept internally so that the solvers can work on subsets
of vertices with integer bit operations.
"""

from __future__ import annotations

import os
from typing import Iterable, Optional


class GraphError(ValueError):
    """Malformed graph input (bad vertex id, self-loop, ...)."""


class OracleLimitError(ValueError):
    """A brute-force operation was asked to exceed its size limit."""


_DEFAULT_ORACLE_LIMIT = 20


def oracle_limit() -> int:
    """Size cap for exhaustive operations.

    Defaults to 20 vertices; the INDEQUE_ORACLE_LIMIT environment
    variable overrides it.
    """
    raw = os.environ.get("INDEQUE_ORACLE_LIMIT")
    if raw is None:
        return _DEFAULT_ORACLE_LIMIT
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"INDEQUE_ORACLE_LIMIT is not an integer: {raw!r}") from exc


def _check_oracle_size(n: int, limit: Optional[int], what: str) -> None:
    cap = oracle_limit() if limit is None else limit
    if n > cap:
        raise OracleLimitError(f"{what}: {n} vertices exceeds the limit of {cap}")


class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has a vertex id outside [0,{n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in sets)
        masks = []
        for s in sets:
            m = 0
            for v in s:
                m |= 1 << v
            masks.append(m)
        self.masks: tuple[int, ...] = tuple(masks)

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an explicit edge list; duplicates are merged."""
    return Graph(n, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on vertex set ``s``.

    Returns the subgraph (with dense ids assigned in ascending order of
    the original ids) and the old-id -> new-id mapping.
    """
    vs = sorted(set(s))
    for v in vs:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex id {v} outside [0,{g.n})")
    index = {v: i for i, v in enumerate(vs)}
    chosen = set(vs)
    edges = [
        (index[u], index[w])
        for u in vs
        for w in g.adj[u]
        if u < w and w in chosen
    ]
    return Graph(len(vs), edges), index


def _least_p3_masked(masks, n: int, alive: int) -> Optional[tuple[int, int, int]]:
    """Least (a,b,c) induced path a-b-c with a<c inside the alive set."""
    rest = alive
    while rest:
        abit = rest & -rest
        a = abit.bit_length() - 1
        rest ^= abit
        above_a = -1 << (a + 1)
        na = masks[a]
        nbrs = na & alive
        while nbrs:
            bbit = nbrs & -nbrs
            b = bbit.bit_length() - 1
            nbrs ^= bbit
            cand = masks[b] & alive & ~na & above_a & ~abit
            if cand:
                c = (cand & -cand).bit_length() - 1
                return a, b, c
    return None


def find_induced_p3(g: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically least induced 3-vertex path (a, b, c).

    ``b`` is the middle vertex; a < c.  Returns ``None`` exactly when
    every connected component of ``g`` is a clique.
    """
    if g.n == 0:
        return None
    return _least_p3_masked(g.masks, g.n, (1 << g.n) - 1)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted up by ``g1.n``."""
    shift = g1.n
    edges = g1.edges() + [(u + shift, v + shift) for u, v in g2.edges()]
    return Graph(g1.n + g2.n, edges)


def _component_masks(masks, alive: int) -> list[int]:
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = 0
        frontier = seed
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                nxt |= masks[bit.bit_length() - 1]
                f ^= bit
            frontier = nxt & alive & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


def alpha_brute(g: Graph, limit: Optional[int] = None) -> int:
    """Exact maximum independent set size by branch and bound."""
    _check_oracle_size(g.n, limit, "alpha_brute")
    if g.n == 0:
        return 0
    masks = g.masks
    best = 0

    def rec(mask: int, cur: int) -> None:
        nonlocal best
        if cur + mask.bit_count() <= best:
            return
        if mask == 0:
            best = cur
            return
        # pivot on a highest-degree live vertex (ties: least id)
        v = -1
        vdeg = -1
        m = mask
        while m:
            bit = m & -m
            u = bit.bit_length() - 1
            d = (masks[u] & mask).bit_count()
            if d > vdeg:
                vdeg = d
                v = u
            m ^= bit
        vbit = 1 << v
        rec(mask & ~masks[v] & ~vbit, cur + 1)
        rec(mask ^ vbit, cur)

    rec((1 << g.n) - 1, 0)
    return best


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def omega_brute(g: Graph, limit: Optional[int] = None) -> int:
    """Exact maximum clique size (independent set of the complement)."""
    _check_oracle_size(g.n, limit, "omega_brute")
    return alpha_brute(complement(g), limit=max(g.n, 1))
