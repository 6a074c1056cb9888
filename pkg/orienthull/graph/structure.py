"""Class-membership tests on oriented graphs and their underlying graphs."""
import itertools
from typing import Dict, Iterable

import networkx as nx

from orienthull.graph.blocks import block_decomposition
from orienthull.graph.digraph import OrientedGraph, underlying


def is_tournament(D: OrientedGraph) -> bool:
    # No digons and no repeats, so every pair is joined iff m = C(n, 2)
    return D.m == D.n * (D.n - 1) // 2


def is_dag(D: OrientedGraph) -> bool:
    return nx.is_directed_acyclic_graph(D.to_networkx())


def is_connected(D: OrientedGraph) -> bool:
    """Weak connectivity; the empty graph counts as connected."""
    return D.n == 0 or nx.is_connected(underlying(D).to_networkx())


def is_tree_underlying(D: OrientedGraph) -> bool:
    return D.n > 0 and nx.is_tree(underlying(D).to_networkx())


def is_bipartite_underlying(D: OrientedGraph) -> bool:
    return nx.is_bipartite(underlying(D).to_networkx())


def is_clique(D: OrientedGraph, vertices: Iterable[int]) -> bool:
    return all(
        D.adjacent(u, v) for u, v in itertools.combinations(vertices, 2)
    )


def is_stable(D: OrientedGraph, vertices: Iterable[int]) -> bool:
    return not any(
        D.adjacent(u, v) for u, v in itertools.combinations(vertices, 2)
    )


def _is_partition(D: OrientedGraph, a: Iterable[int], b: Iterable[int]) -> bool:
    a, b = list(a), list(b)
    return sorted(a + b) == list(range(D.n))


def is_split_underlying(
    D: OrientedGraph, stable: Iterable[int], clique: Iterable[int]
) -> bool:
    stable, clique = list(stable), list(clique)
    return (
        _is_partition(D, stable, clique)
        and is_stable(D, stable)
        and is_clique(D, clique)
    )


def is_cobipartite_underlying(
    D: OrientedGraph, first: Iterable[int], second: Iterable[int]
) -> bool:
    first, second = list(first), list(second)
    return (
        _is_partition(D, first, second)
        and is_clique(D, first)
        and is_clique(D, second)
    )


def is_cactus(D: OrientedGraph) -> bool:
    """True iff every block of the underlying graph is an edge or a cycle.

    Connectivity is not required; solvers check it separately.
    """
    blocks = block_decomposition(underlying(D))
    return all(
        len(es) == 1 or len(es) == len(b)
        for b, es in zip(blocks.blocks, blocks.block_edges)
    )


def structural_queries(D: OrientedGraph) -> Dict[str, bool]:
    """Partition-free class flags, as reported by the CLI."""
    return {
        "is_tournament": is_tournament(D),
        "is_dag": is_dag(D),
        "is_bipartite_underlying": is_bipartite_underlying(D),
        "is_cactus": is_cactus(D),
        "is_connected": is_connected(D),
        "is_tree": is_tree_underlying(D),
    }
