"""Structure of narrow 2-connected blocks and the halving algorithm.

A 2-connected block of a graph of pathwidth at most 2 carries a
rigid shape: a longest cycle v1..vk,wl..w1 plus chords and length-2
ears ("C-paths") that run from the v-side to the w-side with strictly
nested endpoints.  :func:`extract_structure` recovers that shape or
reports :class:`StructureMismatch`; :func:`indeque_pw2` consumes it
to build a verified indeque set covering at least half the vertices.

Extraction success is used instead of a pathwidth certificate: the
halving argument needs only the shape, so the guarantee holds for any
graph whose blocks pass extraction.  Success is not claimed to imply
pathwidth at most 2.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .blocks import decompose, leaf_blocks
from .graph import Graph, induced_subgraph
from .verify import ClusterCertificate, verify_indeque


class StructureMismatch(Exception):
    """The block does not fit the longest-cycle-plus-nested-ears shape."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class CPath:
    """A chord (no internal vertex) or length-2 ear from v_i to w_j."""

    i: int
    j: int
    internal: tuple[int, ...]


@dataclass(frozen=True)
class EndCap:
    """An extremal C-path plus the cycle arc closing it (w_j ... v_i)."""

    path_index: int
    q_arc: tuple[int, ...]


@dataclass(frozen=True)
class BlockStructure:
    """Labeled longest cycle v1..vk,wl..w1 with its ordered C-paths."""

    cycle: tuple[int, ...]
    k: int
    ell: int
    cpaths: tuple[CPath, ...]
    left_cap: Optional[EndCap]
    right_cap: Optional[EndCap]

    @property
    def length(self) -> int:
        return len(self.cycle)

    def v_vertex(self, i: int) -> int:
        return self.cycle[i - 1]

    def w_vertex(self, j: int) -> int:
        return self.cycle[len(self.cycle) - j]


def _all_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle, once, rooted at its least vertex.

    The orientation with the smaller second vertex is kept, so the
    output is canonical; intended for desk-scale blocks.
    """
    cycles: list[tuple[int, ...]] = []
    n = g.n
    adj = g.adj
    on_path = [False] * n
    path: list[int] = []

    def extend(u: int, s: int) -> None:
        for w in adj[u]:
            if w == s and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(tuple(path))
            elif w > s and not on_path[w]:
                on_path[w] = True
                path.append(w)
                extend(w, s)
                path.pop()
                on_path[w] = False

    for s in range(n):
        path = [s]
        on_path[s] = True
        extend(s, s)
        on_path[s] = False
    return cycles


def _offcycle_paths(g: Graph, cycle: tuple[int, ...]):
    """Chords and one-internal-vertex ears relative to a cycle, or None.

    Returns a list of (end, end, internals) with internals empty for a
    chord.  Fails (None) when some edge or vertex cannot be covered by
    a C-path of length at most 2.
    """
    on_cycle = set(cycle)
    L = len(cycle)
    cycle_edges = {frozenset((cycle[t], cycle[(t + 1) % L])) for t in range(L)}
    paths = []
    for x in range(g.n):
        if x in on_cycle:
            continue
        nbrs = g.adj[x]
        if len(nbrs) != 2 or any(w not in on_cycle for w in nbrs):
            return None
        paths.append((nbrs[0], nbrs[1], (x,)))
    for u in cycle:
        for w in g.adj[u]:
            if u < w and w in on_cycle and frozenset((u, w)) not in cycle_edges:
                paths.append((u, w, ()))
    return paths


def _label_cycle(cycle, raw_paths, b):
    """Try rotations/reflections/splits; return labeling candidates.

    A labeling assigns positions 0..k-1 to v1..vk and the rest to
    wl..w1; every off-cycle path must join the two sides with both
    endpoint indices strictly increasing along the path list.
    """
    L = len(cycle)
    least = min(cycle)
    candidates = []
    for r in range(L):
        for d in (1, -1):
            seq = tuple(cycle[(r + d * t) % L] for t in range(L))
            pos = {v: t for t, v in enumerate(seq)}
            for k in range(1, L):
                assigned = []
                ok = True
                for a, bb, internal in raw_paths:
                    pa, pb = pos[a], pos[bb]
                    if pa > pb:
                        pa, pb = pb, pa
                    if pa < k <= pb:
                        i = pa + 1
                        j = L - pb
                        assigned.append(CPath(i, j, internal))
                    else:
                        ok = False
                        break
                if not ok:
                    continue
                assigned.sort(key=lambda p: p.i)
                mono = all(
                    p1.i < p2.i and p1.j < p2.j
                    for p1, p2 in zip(assigned, assigned[1:])
                )
                if not mono:
                    continue
                vpart = seq[:k]
                key = (0 if least in vpart else 1, vpart, seq[k:])
                candidates.append((key, seq, k, tuple(assigned)))
    return candidates


def _arc(seq, start_pos, count, step):
    L = len(seq)
    return tuple(seq[(start_pos + step * t) % L] for t in range(count))


def extract_structure(block: Graph, b: Optional[int] = None) -> BlockStructure:
    """Recover the labeled longest-cycle structure of a 2-connected block.

    When ``b`` (the vertex attaching the block to the rest of its
    graph) is given, only longest cycles through ``b`` are accepted.
    All longest cycles are tried in canonical order; among the valid
    labelings of the first workable cycle, the one whose v-side arc
    contains the least vertex id (then lexicographically least) wins,
    so repeated runs label identically.
    """
    n = block.n
    if n < 3:
        raise ValueError("block is not 2-connected: fewer than 3 vertices")
    dec = decompose(block)
    if len(dec.blocks) != 1 or len(dec.blocks[0]) != n:
        raise ValueError("block is not 2-connected")
    if b is not None and not (0 <= b < n):
        raise ValueError(f"attachment vertex {b} outside [0,{n})")

    cycles = _all_cycles(block)
    if not cycles:
        raise StructureMismatch("block has no cycle")
    longest = max(len(c) for c in cycles)
    for cycle in sorted(c for c in cycles if len(c) == longest):
        if b is not None and b not in cycle:
            continue
        raw_paths = _offcycle_paths(block, cycle)
        if raw_paths is None:
            continue
        candidates = _label_cycle(cycle, raw_paths, b)
        if not candidates:
            continue
        _, seq, k, cpaths = min(candidates, key=lambda c: c[0])
        L = len(seq)
        left_cap = right_cap = None
        if cpaths:
            first, last = cpaths[0], cpaths[-1]
            left_cap = EndCap(0, _arc(seq, L - first.j, first.i + first.j, 1))
            right_cap = EndCap(
                len(cpaths) - 1,
                _arc(seq, L - last.j, L - last.i - last.j + 2, -1),
            )
        return BlockStructure(seq, k, L - k, cpaths, left_cap, right_cap)
    raise StructureMismatch(
        "no longest cycle admits a v/w labeling with nested C-paths"
        + ("" if b is None else f" through attachment {b}")
    )


# -- the halving algorithm ----------------------------------------------


@dataclass(frozen=True)
class Pw2Step:
    case: int
    removed: tuple[int, ...]
    added: tuple[int, ...]


@dataclass(frozen=True)
class Pw2Result:
    selected: frozenset[int]
    steps: tuple[Pw2Step, ...]
    case_counts: dict[int, int]


def _audit_piece(g: Graph, live_adj, removed, added) -> None:
    """Each kept piece must be a cluster whose live neighbors all go away."""
    removed_set = set(removed)
    added_set = set(added)
    for a in added:
        stray = live_adj[a] - removed_set - added_set
        if stray:
            raise AssertionError(
                f"kept vertex {a} still touches live vertices {sorted(stray)}"
            )
    if not isinstance(verify_indeque(g, added), ClusterCertificate):
        raise AssertionError(f"kept piece {sorted(added)} is not a cluster")


def indeque_pw2_detailed(g: Graph) -> Pw2Result:
    """Constructive indeque set of size at least ceil(n/2).

    Case machine per iteration (first applicable rule fires):
      1. an isolated vertex is kept;
      2. a leaf is kept, its neighbor removed with it;
      3. a leaf block that is a single cycle keeps two of every
         three vertices walking away from the attachment;
      4. an end-cap arc with >= 2 internal vertices keeps its first
         two internals, removing them with the arc's w-end and a
         third vertex;
      5. an end-cap whose ear and arc carry one internal vertex each
         keeps both internals, removing the whole cap;
      6. an end-cap with a single internal vertex (on the arc) keeps
         that vertex and the v-end, unless the v-end is the
         attachment;
      7. when the attachment blocks case 6 at both end-caps the block
         is a 4-vertex diamond; it is removed whole, keeping the arc
         vertex and the w-end.

    Vertices removed by rules 1/2 re-expose leaves, so those rules
    re-run before every block decomposition.
    """
    live_adj: dict[int, set[int]] = {v: set(g.adj[v]) for v in range(g.n)}
    selected: set[int] = set()
    steps: list[Pw2Step] = []
    counts: Counter = Counter()

    def act(case: int, removed, added) -> None:
        removed_t = tuple(sorted(removed))
        added_t = tuple(sorted(added))
        _audit_piece(g, live_adj, removed_t, added_t)
        for v in removed_t:
            for u in live_adj[v]:
                live_adj[u].discard(v)
            del live_adj[v]
        selected.update(added_t)
        steps.append(Pw2Step(case, removed_t, added_t))
        counts[case] += 1

    while live_adj:
        iso = min((v for v, nb in live_adj.items() if not nb), default=None)
        if iso is not None:
            act(1, (iso,), (iso,))
            continue
        leaf = min((v for v, nb in live_adj.items() if len(nb) == 1), default=None)
        if leaf is not None:
            act(2, (leaf, next(iter(live_adj[leaf]))), (leaf,))
            continue

        live = sorted(live_adj)
        sub, sub_index = induced_subgraph(g, live)
        dec = decompose(sub)
        block_new, b_new = leaf_blocks(dec)[0]
        if len(block_new) < 3:
            raise AssertionError("leaf block of a min-degree-2 graph must be 2-connected")
        bsub, bidx = induced_subgraph(sub, block_new)
        back = {bi: live[si] for si, bi in bidx.items()}
        b_orig = live[b_new] if b_new is not None else None
        st = extract_structure(bsub, bidx[b_new] if b_new is not None else None)
        block_orig = sorted(back[x] for x in range(bsub.n))

        if not st.cpaths:
            cyc = [back[x] for x in st.cycle]
            anchor = b_orig if b_orig is not None else min(cyc)
            apos = cyc.index(anchor)
            nxt, prv = cyc[(apos + 1) % len(cyc)], cyc[(apos - 1) % len(cyc)]
            step_dir = 1 if nxt < prv else -1
            walk = [cyc[(apos + step_dir * t) % len(cyc)] for t in range(len(cyc))]
            pattern = [walk[t] for t in range(1, len(walk)) if t % 3 != 0]
            act(3, block_orig, pattern)
            continue

        done = False
        for cap in (st.left_cap, st.right_cap):
            path = st.cpaths[cap.path_index]
            q_arc = [back[x] for x in cap.q_arc]
            wend, vend = q_arc[0], q_arc[-1]
            q_int = q_arc[1:-1]
            p_int = [back[x] for x in path.internal]
            if b_orig is not None and b_orig in q_int:
                continue
            m = len(q_int)
            if m >= 2:
                u3 = q_int[2] if m >= 3 else vend
                act(4, (wend, q_int[0], q_int[1], u3), (q_int[0], q_int[1]))
                done = True
                break
            if m == 1 and len(p_int) == 1:
                act(5, (vend, wend, p_int[0], q_int[0]), (p_int[0], q_int[0]))
                done = True
                break
            if m == 1:
                if b_orig is None or b_orig != vend:
                    vpos = path.i - 1
                    nb1 = st.cycle[(vpos + 1) % st.length]
                    nb2 = st.cycle[(vpos - 1) % st.length]
                    u_block = cap.q_arc[-2]
                    if u_block not in (nb1, nb2):
                        raise AssertionError("cycle neighbor bookkeeping failed")
                    z = back[nb1 if nb2 == u_block else nb2]
                    act(6, (vend, wend, q_int[0], z), (vend, q_int[0]))
                    done = True
                    break
                continue
            raise AssertionError(
                "lone internal vertex sits on the ear: the cycle was not longest"
            )
        if not done:
            # the attachment is the v-end of the only C-path at both caps
            if len(block_orig) != 4:
                raise AssertionError("doubly blocked end-caps outside a 4-vertex block")
            cap = st.left_cap
            q_arc = [back[x] for x in cap.q_arc]
            if len(q_arc) != 3:
                raise AssertionError("diamond end-cap arc must have one internal vertex")
            act(7, block_orig, (q_arc[1], q_arc[0]))

    return Pw2Result(frozenset(selected), tuple(steps), dict(counts))


def indeque_pw2(g: Graph) -> set[int]:
    """Indeque set of size at least ceil(n/2) for graphs whose
    2-connected blocks pass :func:`extract_structure`."""
    return set(indeque_pw2_detailed(g).selected)
