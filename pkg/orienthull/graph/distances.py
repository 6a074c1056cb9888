"""All-pairs distances and geodesic membership."""
import dataclasses
from typing import Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from orienthull.graph.digraph import OrientedGraph, UndirectedGraph
from orienthull.graph.vertex_set import VertexSet


# Marks pairs joined by no directed path. Never compared arithmetically.
UNREACHABLE = -1


@dataclasses.dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Directed distances d[u][v], UNREACHABLE where v cannot be reached."""

    d: np.ndarray  # [n, n], int64

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __getitem__(self, uv: Tuple[int, int]) -> int:
        return int(self.d[uv])

    def reachable(self, u: int, v: int) -> bool:
        return self.d[u, v] != UNREACHABLE

    def diameter(self) -> int:
        """Largest finite distance (0 on graphs without arcs)."""
        finite = self.d[self.d != UNREACHABLE]
        return int(finite.max()) if finite.size else 0


@dataclasses.dataclass(frozen=True, eq=False)
class GeodesicTable:
    """Bitmask of the vertices on some (u, v)-geodesic, for every pair."""

    n: int

    # masks[u][v]; 0 when v is unreachable from u
    masks: Tuple[Tuple[int, ...], ...]

    def between(self, u: int, v: int) -> VertexSet:
        return VertexSet(self.n, self.masks[u][v])


def _adjacency_matrix(G: Union[OrientedGraph, UndirectedGraph]) -> csr_matrix:
    pairs = G.arcs if isinstance(G, OrientedGraph) else G.edges
    rows = np.array([u for u, _ in pairs], dtype=np.int64)
    cols = np.array([v for _, v in pairs], dtype=np.int64)
    data = np.ones(len(pairs), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(G.n, G.n))


def all_pairs_distances(
    G: Union[OrientedGraph, UndirectedGraph]
) -> DistanceMatrix:
    """BFS distances; directed for an OrientedGraph, symmetric otherwise."""
    if G.n == 0:
        return DistanceMatrix(np.zeros((0, 0), dtype=np.int64))

    directed = isinstance(G, OrientedGraph)
    raw = shortest_path(
        _adjacency_matrix(G), directed=directed, unweighted=True
    )
    d = np.full(raw.shape, UNREACHABLE, dtype=np.int64)
    finite = np.isfinite(raw)
    d[finite] = raw[finite].astype(np.int64)
    return DistanceMatrix(d)


def geodesic_vertices(
    D: Union[OrientedGraph, UndirectedGraph],
    u: int,
    v: int,
    dist: DistanceMatrix,
) -> VertexSet:
    """Vertices x with d(u,x) + d(x,v) = d(u,v), all three finite."""
    d = dist.d
    if d[u, v] == UNREACHABLE:
        return VertexSet.empty(D.n)
    on_path = (
        (d[u] != UNREACHABLE)
        & (d[:, v] != UNREACHABLE)
        & (d[u] + d[:, v] == d[u, v])
    )
    return VertexSet.of(D.n, np.flatnonzero(on_path).tolist())


def _pack_columns(through: np.ndarray) -> Tuple[int, ...]:
    """Column v of a boolean [n, n] array -> int with bit x set for row x."""
    packed = np.packbits(through, axis=0, bitorder="little")
    return tuple(
        int.from_bytes(packed[:, v].tobytes(), "little")
        for v in range(through.shape[1])
    )


def geodesic_table(dist: DistanceMatrix) -> GeodesicTable:
    d = dist.d
    n = dist.n
    finite = d != UNREACHABLE
    masks = []
    for u in range(n):
        # through[x, v]: x lies on a (u, v)-geodesic
        through = (
            finite[u][:, None]
            & finite
            & finite[u][None, :]
            & (d[u][:, None] + d == d[u][None, :])
        )
        masks.append(_pack_columns(through))

    return GeodesicTable(n=n, masks=tuple(masks))
