"""Blocks and cut vertices of an undirected graph."""
import dataclasses
from typing import Tuple

import networkx as nx

from orienthull.graph.digraph import UndirectedGraph
from orienthull.graph.vertex_set import VertexSet


@dataclasses.dataclass(frozen=True)
class BlockDecomposition:
    n: int

    # Vertex set of every block, ordered by smallest member
    blocks: Tuple[VertexSet, ...]

    # Edges of every block, parallel to blocks
    block_edges: Tuple[Tuple[Tuple[int, int], ...], ...]

    cut_vertices: VertexSet

    # (block index, cut vertex) for every cut vertex lying in a block
    incidence: Tuple[Tuple[int, int], ...]

    def blocks_of(self, v: int) -> Tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.blocks) if v in b)

    def is_cycle_block(self, i: int) -> bool:
        return len(self.blocks[i]) >= 3


def block_decomposition(G: UndirectedGraph) -> BlockDecomposition:
    g = G.to_networkx()
    edge_blocks = [
        tuple(sorted((min(u, v), max(u, v)) for u, v in comp))
        for comp in nx.biconnected_component_edges(g)
    ]
    edge_blocks.sort(key=lambda es: (min(min(e) for e in es), es))

    blocks = tuple(
        VertexSet.of(G.n, {x for e in es for x in e}) for es in edge_blocks
    )
    cut = VertexSet.of(G.n, nx.articulation_points(g))
    incidence = tuple(
        (i, v) for i, b in enumerate(blocks) for v in b if v in cut
    )
    return BlockDecomposition(
        n=G.n,
        blocks=blocks,
        block_edges=tuple(edge_blocks),
        cut_vertices=cut,
        incidence=incidence,
    )


def cycle_order(block_edges: Tuple[Tuple[int, int], ...]) -> Tuple[int, ...]:
    """Cyclic vertex order of a block that is a cycle.

    Starts at the smallest vertex and continues through its smaller
    neighbour. Raises ValueError when the edges do not form one cycle.
    """
    nbrs = {}
    for u, v in block_edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    if any(len(a) != 2 for a in nbrs.values()):
        raise ValueError("Block is not a cycle")

    start = min(nbrs)
    order = [start]
    prev, cur = start, min(nbrs[start])
    while cur != start:
        order.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(order) != len(nbrs):
        raise ValueError("Block is not a cycle")
    return tuple(order)
