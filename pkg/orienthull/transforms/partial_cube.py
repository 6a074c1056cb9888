"""Hypercube labelings: isometry checks and the label-doubling construction.

Labels are stored as an [n, k] uint8 array; column j is coordinate j and is
printed as the j-th character of the 0/1 string.
"""
import dataclasses
from typing import Tuple, Union

import networkx as nx
import numpy as np

from orienthull import errors
from orienthull.graph.digraph import (
    OrientedGraph,
    UndirectedGraph,
    underlying,
)
from orienthull.graph.distances import all_pairs_distances
from orienthull.transforms import generators
from orienthull.transforms.c4 import C4Mapping, orient_c4


@dataclasses.dataclass(frozen=True, eq=False)
class HypercubeLabeling:
    labels: np.ndarray  # [n, dim], uint8

    @property
    def dim(self) -> int:
        return self.labels.shape[1]

    @property
    def n(self) -> int:
        return self.labels.shape[0]

    def label(self, v: int) -> str:
        return "".join(str(int(b)) for b in self.labels[v])

    def hamming(self) -> np.ndarray:
        """[n, n] pairwise Hamming distances."""
        return (self.labels[:, None, :] != self.labels[None, :, :]).sum(axis=-1)


def verify_isometric_labeling(
    G: Union[UndirectedGraph, OrientedGraph], L: HypercubeLabeling
) -> bool:
    """True iff d_G(u, v) equals the Hamming distance of the labels.

    Distinct labels and "adjacent iff Hamming distance 1" both follow. A
    disconnected graph never passes.
    """
    if isinstance(G, OrientedGraph):
        G = underlying(G)
    if L.n != G.n:
        return False
    d = all_pairs_distances(G).d
    return bool(np.array_equal(d, L.hamming()))


def doubling_labels(
    G: UndirectedGraph, L: HypercubeLabeling
) -> Tuple[OrientedGraph, C4Mapping, HypercubeLabeling]:
    """G_C4 together with an isometric labeling in dimension 2k.

    Every coordinate of a base label is written twice. For an edge whose
    endpoints differ in coordinate t, v_{i,j} copies the label of v_i except
    for coordinate 2t + 1, which it takes from v_j.

    The result is isometric only when G is a tree. A cycle in G puts two
    subdivided squares on a common cycle of G_C4 and breaks the Θ-classes,
    so the final check raises LabelingNotIsometricError there.
    """
    if not nx.is_bipartite(G.to_networkx()):
        raise errors.NotBipartiteError("Label doubling needs a bipartite graph")
    if not verify_isometric_labeling(G, L):
        raise errors.LabelingNotIsometricError(
            f"Labeling of dimension {L.dim} is not isometric"
        )

    D, mapping = orient_c4(G)
    doubled = np.zeros((D.n, 2 * L.dim), dtype=np.uint8)
    doubled[:G.n] = np.repeat(L.labels, 2, axis=1)
    for (i, j), s in mapping.subdivision.items():
        t = int(np.flatnonzero(L.labels[i] != L.labels[j])[0])
        doubled[s] = doubled[i]
        doubled[s, 2 * t + 1] = L.labels[j, t]

    out = HypercubeLabeling(labels=doubled)
    if not verify_isometric_labeling(D, out):
        raise errors.LabelingNotIsometricError("Doubled labeling is not isometric")
    return D, mapping, out


def standard_labeling(kind: str, k: int) -> Tuple[UndirectedGraph, HypercubeLabeling]:
    """A named partial cube with its canonical labeling.

    Args:
        kind:
            "k2"; "path" (P_k, unary code in dimension k - 1);
            "cycle" (C_{2k}, cyclic shift code in dimension k);
            "hypercube" (Q_k, binary code)
        k:
            Size parameter; ignored for "k2"
    """
    if kind == "k2":
        return generators.path_graph(2), HypercubeLabeling(
            np.array([[0], [1]], dtype=np.uint8)
        )
    elif kind == "path":
        G = generators.path_graph(k)
        labels = np.tri(k, k - 1, -1, dtype=np.uint8)
    elif kind == "cycle":
        G = generators.cycle_graph(2 * k)
        # Vertex i <= k: i leading ones; vertex k + i: i leading zeros
        ones = np.tri(k + 1, k, -1, dtype=np.uint8)
        labels = np.concatenate([ones, 1 - ones[1:k]], axis=0)
    elif kind == "hypercube":
        G = generators.hypercube_graph(k)
        idx = np.arange(1 << k)
        labels = ((idx[:, None] >> np.arange(k)[None, :]) & 1).astype(np.uint8)
    else:
        raise errors.BadParameterError(f"Unknown labeling kind {kind}")

    return G, HypercubeLabeling(labels)
