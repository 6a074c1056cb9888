"""Lexicographic products of oriented graphs."""
from orienthull.graph.digraph import OrientedGraph, build_graph


def lex_product(D1: OrientedGraph, D2: OrientedGraph) -> OrientedGraph:
    """Lexicographic product D1 o D2.

    Vertex (u, v) gets index u * n(D2) + v. There is an arc
    (u1, v1) -> (u2, v2) iff (u1, u2) is an arc of D1, or u1 = u2 and
    (v1, v2) is an arc of D2.
    """
    n2 = D2.n
    arcs = []
    for u1, u2 in D1.arcs:
        for v1 in range(n2):
            for v2 in range(n2):
                arcs.append((u1 * n2 + v1, u2 * n2 + v2))
    for u in range(D1.n):
        for v1, v2 in D2.arcs:
            arcs.append((u * n2 + v1, u * n2 + v2))

    return build_graph(D1.n * n2, arcs)
