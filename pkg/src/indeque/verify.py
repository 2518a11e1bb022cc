"""Certify that a vertex set induces a disjoint union of cliques.

A set is accepted exactly when its induced subgraph has no induced
3-vertex path.  Acceptance produces a :class:`ClusterCertificate`
(the clique partition); rejection produces a :class:`P3Witness`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .graph import Graph, GraphError, connected_components, find_induced_p3, induced_subgraph


@dataclass(frozen=True)
class ClusterCertificate:
    """Partition of a vertex set into pairwise non-adjacent cliques.

    Cliques are sorted ascending internally and listed by least
    element, so equal certificates compare equal structurally.
    """

    cliques: tuple[tuple[int, ...], ...]

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for c in self.cliques for v in c)

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cliques)

    def to_json(self) -> dict:
        return {"size": self.size, "cliques": [list(c) for c in self.cliques]}


@dataclass(frozen=True)
class P3Witness:
    """An induced path a-b-c inside the tested set (ab, bc edges; ac not)."""

    a: int
    b: int
    c: int

    def to_json(self) -> dict:
        return {"p3": [self.a, self.b, self.c]}


def _normalize(cliques: Iterable[Iterable[int]]) -> ClusterCertificate:
    parts = sorted(tuple(sorted(c)) for c in cliques if c)
    return ClusterCertificate(tuple(parts))


def is_cluster(g: Graph) -> bool:
    """True when every component of ``g`` is a clique."""
    return find_induced_p3(g) is None


def verify_indeque(g: Graph, s: Iterable[int]) -> Union[ClusterCertificate, P3Witness]:
    """Certify ``s`` as an indeque set of ``g`` or refute it.

    The certificate's cliques are the components of the induced
    subgraph; the witness is the lexicographically least induced
    3-path of the induced subgraph, reported in ``g``'s vertex ids.
    """
    chosen = sorted(set(s))
    for v in chosen:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex id {v} outside [0,{g.n})")
    sub, index = induced_subgraph(g, chosen)
    back = {i: v for v, i in index.items()}
    for comp in connected_components(sub):
        want = len(comp) - 1
        if any(sub.degree(v) != want for v in comp):
            p3 = find_induced_p3(sub)
            assert p3 is not None
            a, b, c = p3
            return P3Witness(back[a], back[b], back[c])
    cliques = [
        [back[v] for v in comp] for comp in connected_components(sub)
    ]
    return _normalize(cliques)


def certificate_partition(cert: ClusterCertificate) -> tuple[int, ...]:
    """Clique sizes of a certificate, sorted descending."""
    return tuple(sorted((len(c) for c in cert.cliques), reverse=True))
