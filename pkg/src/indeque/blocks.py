"""Block / cut-vertex decomposition and the block forest.

A block is a maximal 2-connected subgraph, a bridge with its two
ends, or an isolated vertex.  Two blocks share at most one vertex and
every shared vertex is a cut vertex; the bipartite incidence between
blocks and cut vertices is always a forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (sorted vertex tuples, ordered by least vertex) and cut vertices."""

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]

    def cuts_in_block(self, idx: int) -> tuple[int, ...]:
        return tuple(v for v in self.blocks[idx] if v in self.cut_vertices)

    def blocks_at(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.blocks) if v in b)


def decompose(g: Graph) -> BlockDecomposition:
    """Depth-first lowpoint search for blocks and cut vertices."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_cut = [False] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[set[int]] = []
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            blocks.append({root})
            disc[root] = timer
            timer += 1
            continue
        root_children = 0
        # iterative DFS; each frame tracks the next neighbor index
        stack: list[tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, i = stack[-1]
            if i < len(g.adj[u]):
                stack[-1] = (u, i + 1)
                w = g.adj[u][i]
                if disc[w] == -1:
                    parent[w] = u
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                elif w != parent[u] and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if not stack:
                    continue
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if p == root:
                    root_children += 1
                if low[u] >= disc[p]:
                    # edges above (p, u) form one block
                    comp: set[int] = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        comp.add(a)
                        comp.add(b)
                        if (a, b) == (p, u):
                            break
                    blocks.append(comp)
                    if p != root:
                        is_cut[p] = True
        if root_children > 1:
            is_cut[root] = True

    ordered = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
    cuts = frozenset(v for v in range(n) if is_cut[v])
    return BlockDecomposition(tuple(ordered), cuts)


def leaf_blocks(d: BlockDecomposition) -> list[tuple[tuple[int, ...], Optional[int]]]:
    """Blocks of block-forest degree at most one, with their attachment.

    The attachment is the unique cut vertex inside the block, or
    ``None`` when the block is a whole component.
    """
    out = []
    for b in d.blocks:
        cuts = [v for v in b if v in d.cut_vertices]
        if len(cuts) <= 1:
            out.append((b, cuts[0] if cuts else None))
    return out


def format_block_forest(d: BlockDecomposition) -> str:
    """Indented text dump of the block forest (for --explain output)."""
    lines = []
    for i, b in enumerate(d.blocks):
        cuts = d.cuts_in_block(i)
        kind = "isolated" if len(b) == 1 else ("bridge" if len(b) == 2 else "2-connected")
        lines.append(f"block {i} [{kind}] vertices={list(b)}")
        for c in cuts:
            peers = [j for j in d.blocks_at(c) if j != i]
            lines.append(f"  cut {c} -> blocks {peers}")
    if not lines:
        lines.append("(empty graph)")
    return "\n".join(lines)
