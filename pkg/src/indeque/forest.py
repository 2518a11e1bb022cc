"""Constructive two-thirds indeque algorithm for forests.

Repeatedly takes a deepest leaf v (an endpoint of a longest path of
its tree) with neighbor u: if u has degree 2 the edge uv is kept and
u's other neighbor discarded; if u branches, v and a second leaf
hanging off u are kept and u discarded.  Either way three vertices
leave and two stay, so the kept set covers at least ceil(2n/3)
vertices, which is tight on paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph


class CyclicInputError(ValueError):
    """The input graph contains a cycle (attached as ``.cycle``)."""

    def __init__(self, cycle: list[int]):
        super().__init__(f"input contains a cycle: {cycle}")
        self.cycle = cycle


def find_cycle(g: Graph) -> list[int] | None:
    """Some cycle of ``g`` as a vertex list, or None if acyclic."""
    parent = [-1] * g.n
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [(root, -1)]
        while stack:
            u, pu = stack.pop()
            for w in g.adj[u]:
                if w == pu:
                    continue
                if seen[w]:
                    # close the cycle through the two tree paths
                    pa = {u}
                    x = u
                    while parent[x] != -1:
                        x = parent[x]
                        pa.add(x)
                    y = w
                    tail = [w]
                    while y not in pa:
                        y = parent[y]
                        tail.append(y)
                    cyc = [u]
                    x = u
                    while x != y:
                        x = parent[x]
                        cyc.append(x)
                    return cyc[::-1] + tail[:-1][::-1] if len(tail) > 1 else cyc[::-1]
                seen[w] = True
                parent[w] = u
                stack.append((w, u))
    return None


@dataclass(frozen=True)
class ForestStep:
    removed: tuple[int, ...]
    added: tuple[int, ...]


def _farthest(adj: dict[int, set[int]], start: int) -> int:
    """BFS-farthest vertex from ``start`` (ties broken by least id)."""
    dist = {start: 0}
    q = deque([start])
    best, best_d = start, 0
    while q:
        u = q.popleft()
        for w in sorted(adj[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                if dist[w] > best_d or (dist[w] == best_d and w < best):
                    best, best_d = w, dist[w]
                q.append(w)
    return best


def _component_of(adj: dict[int, set[int]], start: int) -> list[int]:
    comp = {start}
    q = deque([start])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in comp:
                comp.add(w)
                q.append(w)
    return sorted(comp)


def indeque_forest_detailed(f: Graph) -> tuple[set[int], list[ForestStep]]:
    cyc = find_cycle(f)
    if cyc is not None:
        raise CyclicInputError(cyc)
    adj: dict[int, set[int]] = {v: set(f.adj[v]) for v in range(f.n)}
    selected: set[int] = set()
    steps: list[ForestStep] = []

    def act(removed, added) -> None:
        for v in removed:
            for u in adj[v]:
                adj[u].discard(v)
            del adj[v]
        selected.update(added)
        steps.append(ForestStep(tuple(sorted(removed)), tuple(sorted(added))))

    while adj:
        comp = _component_of(adj, min(adj))
        if len(comp) <= 2:
            act(comp, comp)
            continue
        if len(comp) == 3:
            ends = [v for v in comp if len(adj[v]) == 1]
            act(comp, ends)
            continue
        # double sweep: endpoint of a longest path of this tree
        far = _farthest(adj, comp[0])
        v = _farthest(adj, far)
        (u,) = adj[v]
        if len(adj[u]) == 2:
            (w,) = adj[u] - {v}
            act((u, v, w), (u, v))
        else:
            leaves = sorted(x for x in adj[u] if x != v and len(adj[x]) == 1)
            if not leaves:
                raise AssertionError("no leaf beside a longest-path endpoint")
            act((u, v, leaves[0]), (v, leaves[0]))

    return selected, steps


def indeque_forest(f: Graph) -> set[int]:
    """Indeque set of an acyclic graph covering at least ceil(2n/3) vertices."""
    selected, _ = indeque_forest_detailed(f)
    return selected
