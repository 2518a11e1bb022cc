"""Acyclic colorings and the coloring -> induced forest -> indeque pipeline.

An acyclic coloring is a proper coloring in which the union of any
two color classes induces a forest.  Given one with c classes, the
two largest classes hold at least ceil(2n/c) vertices and induce a
forest, so the forest algorithm yields an indeque set of size at
least ceil((2/3)*ceil(2n/c)) - for five classes, ceil(4n/15).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .forest import indeque_forest
from .graph import Graph, induced_subgraph


@dataclass(frozen=True)
class AcyclicColoring:
    """Color classes indexed 0..c-1; each class is a sorted vertex tuple."""

    classes: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def color_of(self) -> dict[int, int]:
        return {v: c for c, cls in enumerate(self.classes) for v in cls}


@dataclass(frozen=True)
class ColoringViolation:
    """Either a monochromatic edge or a cycle using only two classes."""

    kind: str  # "edge" | "cycle"
    vertices: tuple[int, ...]


def _check_partition(g: Graph, col: AcyclicColoring) -> dict[int, int]:
    owner: dict[int, int] = {}
    for c, cls in enumerate(col.classes):
        for v in cls:
            if not (0 <= v < g.n):
                raise ValueError(f"vertex id {v} outside [0,{g.n})")
            if v in owner:
                raise ValueError(f"vertex {v} appears in classes {owner[v]} and {c}")
            owner[v] = c
    if len(owner) != g.n:
        missing = [v for v in range(g.n) if v not in owner]
        raise ValueError(f"classes do not cover vertices {missing[:10]}")
    return owner


def _two_class_cycle(g: Graph, members: list[int], allowed: set[int]) -> Optional[list[int]]:
    parent: dict[int, int] = {}
    seen: set[int] = set()
    for root in members:
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, -1)]
        while stack:
            u, pu = stack.pop()
            for w in g.adj[u]:
                if w not in allowed or w == pu:
                    continue
                if w in seen:
                    chain = {u}
                    x = u
                    while x in parent:
                        x = parent[x]
                        chain.add(x)
                    tail = [w]
                    y = w
                    while y not in chain:
                        y = parent[y]
                        tail.append(y)
                    cyc = [u]
                    x = u
                    while x != tail[-1]:
                        x = parent[x]
                        cyc.append(x)
                    return cyc[::-1] + tail[:-1][::-1]
                seen.add(w)
                parent[w] = u
                stack.append((w, u))
    return None


def verify_acyclic_coloring(g: Graph, col: AcyclicColoring) -> Optional[ColoringViolation]:
    """``None`` when valid; otherwise the first violation found."""
    owner = _check_partition(g, col)
    for u, v in g.edges():
        if owner[u] == owner[v]:
            return ColoringViolation("edge", (u, v))
    for a in range(col.count):
        for b in range(a + 1, col.count):
            allowed = set(col.classes[a]) | set(col.classes[b])
            cyc = _two_class_cycle(g, sorted(allowed), allowed)
            if cyc is not None:
                return ColoringViolation("cycle", tuple(cyc))
    return None


class _PairForest:
    """Union-find per color pair tracking the two-class forest."""

    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        p = self.parent.setdefault(x, x)
        while p != x:
            self.parent[x] = p = self.parent.setdefault(p, p)
            x, p = p, self.parent[p]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def greedy_acyclic_coloring(
    g: Graph, order: Optional[Iterable[int]] = None
) -> AcyclicColoring:
    """Greedy acyclic coloring, verified before returning.

    Default order is descending degree (ties: least id).  Each vertex
    takes the least color that keeps the coloring proper and closes
    no two-colored cycle; the latter is tracked with a union-find per
    color pair, so a candidate color is rejected as soon as two
    already-connected neighbors share the other color.  No bound on
    the class count is claimed.
    """
    if order is None:
        seq = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    else:
        seq = list(order)
        if sorted(seq) != list(range(g.n)):
            raise ValueError("order is not a permutation of the vertices")
    color: dict[int, int] = {}
    classes: list[list[int]] = []
    forests: dict[tuple[int, int], _PairForest] = {}

    def pair(a: int, b: int) -> _PairForest:
        key = (a, b) if a < b else (b, a)
        return forests.setdefault(key, _PairForest())

    for v in seq:
        nbr_colors: dict[int, list[int]] = {}
        for u in g.adj[v]:
            if u in color:
                nbr_colors.setdefault(color[u], []).append(u)
        c = 0
        while True:
            if c == len(classes):
                break  # fresh color is always safe
            if c not in nbr_colors:
                ok = True
                for d, nbrs in nbr_colors.items():
                    pf = pair(c, d)
                    roots = [pf.find(u) for u in nbrs]
                    if len(roots) != len(set(roots)):
                        ok = False
                        break
                if ok:
                    break
            c += 1
        if c == len(classes):
            classes.append([])
        classes[c].append(v)
        color[v] = c
        for d, nbrs in nbr_colors.items():
            if d == c:
                raise AssertionError("proper-coloring bookkeeping failed")
            pf = pair(c, d)
            for u in nbrs:
                pf.union(v, u)
    result = AcyclicColoring(tuple(tuple(sorted(cls)) for cls in classes))
    violation = verify_acyclic_coloring(g, result)
    if violation is not None:
        raise AssertionError(f"greedy coloring failed verification: {violation}")
    return result


def indeque_via_coloring(g: Graph, col: AcyclicColoring) -> set[int]:
    """Indeque set from the two largest classes of an acyclic coloring.

    The class union induces a forest, so the forest algorithm applies;
    the pigeonhole size bound on the union is asserted on every run.
    """
    violation = verify_acyclic_coloring(g, col)
    if violation is not None:
        raise ValueError(f"coloring fails verification: {violation}")
    if g.n == 0:
        return set()
    by_size = sorted(range(col.count), key=lambda c: (-len(col.classes[c]), c))
    chosen = by_size[:2] if col.count >= 2 else by_size[:1]
    union = sorted(v for c in chosen for v in col.classes[c])
    if len(union) * col.count < 2 * g.n and col.count >= 2:
        raise AssertionError("two largest classes fall below the pigeonhole bound")
    sub, index = induced_subgraph(g, union)
    back = {i: v for v, i in index.items()}
    return {back[v] for v in indeque_forest(sub)}


def coloring_guarantee(n: int, c: int) -> int:
    """ceil((2/3) * ceil(2n/c)): the pipeline's size guarantee."""
    if n == 0:
        return 0
    inner = math.ceil(2 * n / c)
    return math.ceil(2 * inner / 3)


def parse_coloring(text: str) -> AcyclicColoring:
    """Read "vertexId colorId" lines; color ids are densified by sorted order."""
    entries: dict[int, int] = {}
    for ln in text.splitlines():
        s = ln.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'vertexId colorId', got {s!r}")
        v, c = int(parts[0]), int(parts[1])
        if v in entries:
            raise ValueError(f"vertex {v} listed twice")
        entries[v] = c
    palette = sorted(set(entries.values()))
    dense = {c: i for i, c in enumerate(palette)}
    classes: list[list[int]] = [[] for _ in palette]
    for v, c in entries.items():
        classes[dense[c]].append(v)
    return AcyclicColoring(tuple(tuple(sorted(cls)) for cls in classes))


def serialize_coloring(col: AcyclicColoring) -> str:
    pairs = sorted((v, c) for c, cls in enumerate(col.classes) for v in cls)
    return "\n".join(f"{v} {c}" for v, c in pairs) + "\n"
