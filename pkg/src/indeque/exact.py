"""Exact indeque number: a subset-enumeration oracle and branch-and-bound.

Both methods return the maximum size of a vertex set whose induced
subgraph is a disjoint union of cliques, together with a verified
clique-partition certificate.  The oracle enumerates all subsets and
is capped by :func:`indeque.graph.oracle_limit`; the branch-and-bound
deletes vertices of induced 3-paths and has no hard size cap.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    OracleLimitError,
    _check_oracle_size,
    _component_masks,
    _least_p3_masked,
)
from .verify import ClusterCertificate, verify_indeque


class CapExceededError(RuntimeError):
    """More maximum sets exist than the requested cap; partial results attached."""

    def __init__(self, found: list[ClusterCertificate], cap: int):
        super().__init__(f"more than {cap} maximum indeque sets")
        self.found = found
        self.cap = cap


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    ms: int


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: ClusterCertificate
    optimal: bool
    stats: SolveStats

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "certificate": self.certificate.to_json(),
            "optimal": self.optimal,
            "stats": {"nodes": self.stats.nodes, "ms": self.stats.ms},
        }


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length() - 1)
        mask ^= bit
    return out


def _cluster_subset_table(g: Graph) -> bytearray:
    """ok[S] == 1 iff the subset S (bitmask) induces a cluster graph.

    Peels the closed neighborhood of the least vertex: S is a cluster
    iff that neighborhood is a clique with no edges to the rest and
    the rest is a cluster.
    """
    n = g.n
    masks = g.masks
    ok = bytearray(1 << n)
    ok[0] = 1
    for sub in range(1, 1 << n):
        vbit = sub & -sub
        v = vbit.bit_length() - 1
        part = (masks[v] & sub) | vbit
        rest = sub & ~part
        if not ok[rest]:
            continue
        good = 1
        probe = part
        while probe:
            ubit = probe & -probe
            if masks[ubit.bit_length() - 1] & sub != part ^ ubit:
                good = 0
                break
            probe ^= ubit
        ok[sub] = good
    return ok


def _certify(g: Graph, mask: int) -> ClusterCertificate:
    cert = verify_indeque(g, _bits(mask))
    if not isinstance(cert, ClusterCertificate):
        raise AssertionError(f"solver produced a non-cluster set {_bits(mask)}")
    return cert


def brute_force(g: Graph, limit: Optional[int] = None) -> SolveResult:
    """Exhaustive maximization over all vertex subsets.

    The certificate covers the lexicographically least maximum set
    (compared as sorted id sequences).
    """
    _check_oracle_size(g.n, limit, "brute_force")
    t0 = time.perf_counter()
    ok = _cluster_subset_table(g)
    best_size = 0
    best_tuple: tuple[int, ...] = ()
    best_mask = 0
    for sub in range(1 << g.n):
        if not ok[sub]:
            continue
        size = sub.bit_count()
        if size < best_size:
            continue
        if size > best_size:
            best_size = size
            best_mask = sub
            best_tuple = tuple(_bits(sub))
        else:
            tup = tuple(_bits(sub))
            if tup < best_tuple:
                best_tuple = tup
                best_mask = sub
    ms = int((time.perf_counter() - t0) * 1000)
    return SolveResult(best_size, _certify(g, best_mask), True, SolveStats(0, ms))


def enumerate_maximum_sets(
    g: Graph, cap: Optional[int] = None, limit: Optional[int] = None
) -> list[ClusterCertificate]:
    """All maximum indeque sets, certified, in ascending sorted-id order.

    Raises :class:`CapExceededError` (carrying the first ``cap``
    certificates) when the count exceeds ``cap``.
    """
    _check_oracle_size(g.n, limit, "enumerate_maximum_sets")
    ok = _cluster_subset_table(g)
    best = 0
    for sub in range(1 << g.n):
        if ok[sub]:
            size = sub.bit_count()
            if size > best:
                best = size
    chosen = sorted(
        (tuple(_bits(sub)) for sub in range(1 << g.n) if ok[sub] and sub.bit_count() == best),
    )
    if cap is not None and len(chosen) > cap:
        partial = [
            _certify(g, sum(1 << v for v in tup)) for tup in chosen[:cap]
        ]
        raise CapExceededError(partial, cap)
    return [_certify(g, sum(1 << v for v in tup)) for tup in chosen]


def _commit_clique_components(masks, alive: int) -> tuple[int, int]:
    """Move components that are already cliques out of the live set."""
    kept = 0
    for comp in _component_masks(masks, alive):
        good = True
        probe = comp
        while probe:
            ubit = probe & -probe
            if masks[ubit.bit_length() - 1] & comp != comp ^ ubit:
                good = False
                break
            probe ^= ubit
        if good:
            kept |= comp
            alive &= ~comp
    return alive, kept


def _greedy_p3_packing(masks, n: int, alive: int) -> int:
    """Vertex-disjoint induced 3-paths, packed greedily in id order.

    Every packed path forces at least one deletion, so the count is a
    lower bound on the deletions still needed inside ``alive``.
    """
    count = 0
    rest = alive
    while True:
        hit = _least_p3_masked(masks, n, rest)
        if hit is None:
            return count
        a, b, c = hit
        rest &= ~(1 << a | 1 << b | 1 << c)
        count += 1


def solve(g: Graph, deterministic: bool = True) -> SolveResult:
    """Branch and bound on induced 3-paths.

    Maintains a deletion set implicitly: whenever the live subgraph
    has an induced path a-b-c, one of the three vertices must be
    deleted; children are explored middle-first (b, a, c).  Clique
    components are committed to the solution without branching, and a
    branch is pruned when even deleting nothing further cannot beat
    the incumbent (greedy 3-path packing gives the deletion lower
    bound).  The ``deterministic`` flag is part of the interface for
    parallel exploration; this implementation always runs the
    sequential order, which satisfies the deterministic contract.
    """
    del deterministic  # sequential execution is always deterministic
    t0 = time.perf_counter()
    n = g.n
    masks = g.masks
    best_size = -1
    best_mask = 0
    nodes = 0

    def explore(alive: int, kept: int) -> None:
        nonlocal best_size, best_mask, nodes
        alive, committed = _commit_clique_components(masks, alive)
        kept |= committed
        if alive == 0:
            size = kept.bit_count()
            if size > best_size:
                best_size = size
                best_mask = kept
            return
        bound = kept.bit_count() + alive.bit_count() - _greedy_p3_packing(masks, n, alive)
        if bound <= best_size:
            return
        a, b, c = _least_p3_masked(masks, n, alive)
        nodes += 1
        explore(alive & ~(1 << b), kept)
        explore(alive & ~(1 << a), kept)
        explore(alive & ~(1 << c), kept)

    explore((1 << n) - 1 if n else 0, 0)
    ms = int((time.perf_counter() - t0) * 1000)
    return SolveResult(best_size, _certify(g, best_mask), True, SolveStats(nodes, ms))
