"""Graph families: standard graphs, extremal witnesses, random inputs.

Everything here is a deterministic function of its parameters (and
seed, for the random families).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, GraphError
from .pathwidth2 import StructureMismatch, extract_structure


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(k: int) -> Graph:
    """Center 0 with k leaves."""
    if k < 0:
        raise GraphError("star needs a non-negative leaf count")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def matching_with_isolated(n: int) -> Graph:
    """3n vertices: n disjoint edges (2i, 2i+1) plus n isolated vertices.

    The whole vertex set is already a disjoint union of cliques, so
    the indeque number is 3n while the independence and clique
    numbers stay at 2n and 2.
    """
    if n < 1:
        raise GraphError("matching family needs n >= 1")
    return Graph(3 * n, [(2 * i, 2 * i + 1) for i in range(n)])


# -- triangular grids ----------------------------------------------------


@dataclass(frozen=True)
class TriangularGridCoords:
    """Bijection between grid coordinates (i, j), i+j <= n, and vertex ids.

    Ids are assigned row-major: by j, then i.
    """

    n: int

    def id_of(self, i: int, j: int) -> int:
        n = self.n
        if i < 0 or j < 0 or i + j > n:
            raise GraphError(f"({i},{j}) outside the grid of side {n}")
        # rows 0..j-1 hold n+1, n, ... cells
        return j * (n + 1) - j * (j - 1) // 2 + i

    def coord_of(self, v: int) -> tuple[int, int]:
        n = self.n
        j = 0
        offset = 0
        while v - offset > n - j:
            offset += n - j + 1
            j += 1
        return v - offset, j

    def cells(self):
        n = self.n
        for j in range(n + 1):
            for i in range(n - j + 1):
                yield i, j

    @property
    def size(self) -> int:
        return (self.n + 1) * (self.n + 2) // 2


def triangular_grid(n: int) -> tuple[Graph, TriangularGridCoords]:
    """Triangle of side n: cells (i,j) with i+j <= n.

    (i,j) ~ (i',j') when the pair differs by one step along a row, a
    column, or the anti-diagonal (i+1,j-1).
    """
    if n < 0:
        raise GraphError("triangular grid needs n >= 0")
    coords = TriangularGridCoords(n)
    edges = []
    for i, j in coords.cells():
        me = coords.id_of(i, j)
        if i + 1 + j <= n:
            edges.append((me, coords.id_of(i + 1, j)))
        if i + j + 1 <= n:
            edges.append((me, coords.id_of(i, j + 1)))
        if j >= 1 and i + 1 + (j - 1) <= n:
            edges.append((me, coords.id_of(i + 1, j - 1)))
    return Graph(coords.size, edges), coords


_STRIP_X = (0, 2, 3)  # lower diagonal of a strip, residues mod 5
_STRIP_Y = (0, 1, 3)  # upper diagonal of a strip


def _strip_cells(length_x: int | None, length_y: int | None, offset: int):
    """Cells kept on one strip (two adjacent diagonals) for an offset.

    The infinite pattern keeps triangles {x0,y0,y1} and {x2,x3,y3}
    per period of five; any truncation or shift of it stays a valid
    cluster, so offsets are chosen freely per strip.
    """
    xs = [] if length_x is None else [
        i for i in range(length_x) if (i - offset) % 5 in _STRIP_X
    ]
    ys = [] if length_y is None else [
        i for i in range(length_y) if (i - offset) % 5 in _STRIP_Y
    ]
    return xs, ys


def _pattern_for_phase(n: int, phase: int) -> list[tuple[int, int]]:
    """Pattern cells for one strip phasing; diagonals d = i + j."""
    cells: list[tuple[int, int]] = []
    for d in range(n + 1):
        role = (d - phase) % 3
        if role == 1 and d == 0:
            # orphan upper diagonal at the bottom corner
            best = max(range(5), key=lambda o: (len(_strip_cells(None, 1, o)[1]), -o))
            _, ys = _strip_cells(None, 1, best)
            cells.extend((i, 0 - i) for i in ys)
        elif role == 0:
            lx = d + 1
            ly = d + 2 if d + 1 <= n else None
            best = max(
                range(5),
                key=lambda o: (sum(map(len, _strip_cells(lx, ly, o))), -o),
            )
            xs, ys = _strip_cells(lx, ly, best)
            cells.extend((i, d - i) for i in xs)
            if ly is not None:
                cells.extend((i, d + 1 - i) for i in ys)
    return cells


def triangular_indeque_pattern(n: int) -> set[int]:
    """An indeque set of the side-n grid with at least 2/5 of the cells.

    Diagonals i+j = d interact only with diagonals d+-1, so the grid
    is covered by independent two-diagonal strips (every third
    diagonal is skipped).  Each strip carries a period-five triangle
    packing holding 3/5 of its cells; 2 of every 3 diagonals in
    strips gives the 2/5 density.  The strip phasing (mod 3) and the
    per-strip shifts (mod 5) are chosen to maximize the cell count,
    which absorbs the boundary losses.
    """
    if n < 0:
        raise GraphError("triangular grid needs n >= 0")
    coords = TriangularGridCoords(n)
    best: list[tuple[int, int]] | None = None
    for phase in range(3):
        cells = _pattern_for_phase(n, phase)
        if best is None or len(cells) > len(best):
            best = cells
    assert best is not None
    return {coords.id_of(i, j) for i, j in best}


# -- extremal witness -----------------------------------------------------


def apexiated_octahedron() -> Graph:
    """Octahedron with an apex vertex on each face of one parity class.

    Vertices 0..5 form the octahedron (antipodal pairs (0,1), (2,3),
    (4,5) non-adjacent); apexes 6..9 attach to the pairwise
    edge-disjoint faces {0,2,4}, {0,3,5}, {1,2,5}, {1,3,4}.
    """
    anti = {frozenset((0, 1)), frozenset((2, 3)), frozenset((4, 5))}
    edges = [
        (u, v)
        for u in range(6)
        for v in range(u + 1, 6)
        if frozenset((u, v)) not in anti
    ]
    faces = [(0, 2, 4), (0, 3, 5), (1, 2, 5), (1, 3, 4)]
    for apex, face in enumerate(faces, start=6):
        edges.extend((apex, v) for v in face)
    return Graph(10, edges)


APEX_OCTAHEDRON_FACES = ((0, 2, 4), (0, 3, 5), (1, 2, 5), (1, 3, 4))


# -- random families -------------------------------------------------------


def random_forest(seed: int, n: int) -> Graph:
    """Random forest on n vertices; each vertex joins an earlier one or
    starts a new tree."""
    if n < 0:
        raise GraphError("forest size must be non-negative")
    rng = random.Random(seed)
    attach_prob = 0.55 + 0.4 * rng.random()
    edges = []
    for v in range(1, n):
        if rng.random() < attach_prob:
            edges.append((rng.randrange(v), v))
    return Graph(n, edges)


def _monotone_cpaths(rng: random.Random, k: int, ell: int, budget: int):
    """Strictly increasing (i, j) endpoint pairs, avoiding the two
    cycle corners (1,1) and (k, ell) where the path would parallel a
    cycle edge."""
    count = min(budget, k, ell)
    if count <= 0:
        return []
    count = rng.randint(0, count)
    if count == 0:
        return []
    i_choices = sorted(rng.sample(range(1, k + 1), count))
    j_choices = sorted(rng.sample(range(1, ell + 1), count))
    pairs = [
        (i, j)
        for i, j in zip(i_choices, j_choices)
        if (i, j) != (1, 1) and (i, j) != (k, ell)
    ]
    return [(i, j, rng.random() < 0.5) for i, j in pairs]


def _build_block(rng: random.Random, attach: int | None, fresh_start: int, cpath_budget: int):
    """One 2-connected block as local structure; returns (edges, cycle,
    internals, used) in global ids or None if no valid draw was found."""
    for _ in range(24):
        length = rng.randint(3, 9)
        diamond = length == 4 and cpath_budget > 0 and rng.random() < 0.6
        cyc = []
        nxt = fresh_start
        for t in range(length):
            if t == 0 and attach is not None:
                cyc.append(attach)
            else:
                cyc.append(nxt)
                nxt += 1
        edges = [(cyc[t], cyc[(t + 1) % length]) for t in range(length)]
        internals: list[int] = []
        if diamond:
            edges.append((cyc[0], cyc[2]))
        elif cpath_budget > 0 and length >= 4 and rng.random() < 0.75:
            k = rng.randint(1, length - 1)
            ell = length - k
            for i, j, long in _monotone_cpaths(rng, k, ell, cpath_budget):
                vi = cyc[i - 1]
                wj = cyc[length - j]
                if long:
                    edges.append((vi, nxt))
                    edges.append((nxt, wj))
                    internals.append(nxt)
                    nxt += 1
                else:
                    edges.append((vi, wj))
        # relabel to a standalone graph and check every attachment works
        verts = sorted({v for e in edges for v in e})
        index = {v: t for t, v in enumerate(verts)}
        candidate = Graph(len(verts), [(index[a], index[b]) for a, b in edges])
        try:
            for v in cyc:
                extract_structure(candidate, index[v])
            extract_structure(candidate, None)
        except StructureMismatch:
            continue
        return edges, cyc, internals, nxt
    return None


def random_pw2(seed: int, size_budget: int, cpath_budget: int | None = None) -> Graph:
    """Random graph whose 2-connected blocks all pass structure extraction.

    Blocks (cycles, diamonds, cycles with nested chords and ears) are
    glued at cycle vertices into a block forest, with pendant trees
    and isolated vertices mixed in.  Every block is validated with
    :func:`extract_structure` for each potential attachment before it
    is used, so the output is safe input for :func:`indeque_pw2`.
    With ``cpath_budget=0`` the blocks degenerate to plain cycles.
    """
    if size_budget < 1:
        raise GraphError("size budget must be positive")
    rng = random.Random(seed)
    remaining_cpaths = 10**9 if cpath_budget is None else cpath_budget
    edges: list[tuple[int, int]] = []
    attachable: list[int] = []
    nverts = 0

    while nverts < size_budget:
        room = size_budget - nverts
        glue = attachable and rng.random() < 0.7
        kind = rng.random()
        if room >= 3 and kind < 0.55:
            attach = rng.choice(attachable) if glue else None
            built = _build_block(rng, attach, nverts, remaining_cpaths)
            if built is None:
                continue
            bedges, cyc, internals, nxt = built
            new_count = nxt - nverts
            if new_count > room:
                continue
            used_paths = sum(
                1 for a, b in bedges if a in internals or b in internals
            ) // 2
            chords = len(bedges) - len(cyc) - 2 * used_paths
            remaining_cpaths -= used_paths + chords
            edges.extend(bedges)
            nverts = nxt
            if attach is None and cyc:
                attachable.append(cyc[0])
            attachable.extend(v for v in cyc if v != attach and v != cyc[0])
        elif kind < 0.85:
            size = rng.randint(1, min(room, 5))
            base = rng.choice(attachable) if glue else None
            members = []
            for _ in range(size):
                if members:
                    parent = rng.choice(members)
                elif base is not None:
                    parent = base
                else:
                    parent = None
                if parent is not None:
                    edges.append((parent, nverts))
                members.append(nverts)
                nverts += 1
            attachable.extend(members)
        else:
            nverts += 1  # isolated vertex
            attachable.append(nverts - 1)
    return Graph(nverts, edges)
