"""Functions for parsing and writing the plain-text instance formats."""
import hashlib
from typing import FrozenSet, List, Sequence, Tuple

import numpy as np

from orienthull import errors
from orienthull.graph.digraph import (
    OrientedGraph,
    UndirectedGraph,
    build_graph,
    build_undirected,
)
from orienthull.graph.vertex_set import VertexSet


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    """(1-based line number, tokens) for every nonblank line."""
    out = []
    for i, line in enumerate(text.split("\n"), start=1):
        tokens = line.split()
        if tokens:
            out.append((i, tokens))
    return out


def _ints(tokens: Sequence[str], line: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise errors.ParseError(f"expected integers, got {' '.join(tokens)}", line)


def _parse_pairs(text: str) -> Tuple[int, List[Tuple[int, int]]]:
    lines = _content_lines(text)
    if not lines:
        raise errors.ParseError("empty input", 1)

    line_no, header = lines[0]
    if len(header) != 2:
        raise errors.ParseError("header must be 'n m'", line_no)
    n, m = _ints(header, line_no)
    if n < 0 or m < 0:
        raise errors.ParseError("negative count in header", line_no)

    body = lines[1:]
    if len(body) < m:
        last = body[-1][0] if body else line_no
        raise errors.ParseError(f"expected {m} pairs, found {len(body)}", last)
    if len(body) > m:
        raise errors.ParseError("trailing content after the last pair", body[m][0])

    pairs = []
    for line_no, tokens in body:
        if len(tokens) != 2:
            raise errors.ParseError("expected 'u v'", line_no)
        u, v = _ints(tokens, line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise errors.ParseError(f"vertex outside 0..{n - 1}", line_no)
        pairs.append((u, v))

    return n, pairs


def parse_graph(text: str) -> OrientedGraph:
    """Parses the arc-list format: 'n m' then m lines 'u v' (0-based).

    Structural violations (loops, digons, repeats) surface as the
    corresponding errors from build_graph.
    """
    n, arcs = _parse_pairs(text)
    return build_graph(n, arcs)


def parse_undirected(text: str) -> UndirectedGraph:
    n, edges = _parse_pairs(text)
    return build_undirected(n, edges)


def format_graph(G) -> str:
    pairs = G.arcs if isinstance(G, OrientedGraph) else G.edges
    lines = [f"{G.n} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


def instance_hash(G) -> str:
    return hashlib.sha256(format_graph(G).encode("ascii")).hexdigest()[:16]


def parse_labeling(text: str) -> np.ndarray:
    """Parses 'n k' then n lines of k-character 0/1 strings.

    Returns:
        [n, k] uint8 array; column j is coordinate j of every label
    """
    lines = _content_lines(text)
    if not lines:
        raise errors.ParseError("empty input", 1)
    line_no, header = lines[0]
    if len(header) != 2:
        raise errors.ParseError("header must be 'n k'", line_no)
    n, k = _ints(header, line_no)

    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] if body else line_no)
        raise errors.ParseError(f"expected {n} labels, found {len(body)}", where)

    labels = np.zeros((n, k), dtype=np.uint8)
    for i, (line_no, tokens) in enumerate(body):
        if len(tokens) != 1 or len(tokens[0]) != k or set(tokens[0]) - {"0", "1"}:
            raise errors.ParseError(f"expected a {k}-bit 0/1 string", line_no)
        labels[i] = [int(c) for c in tokens[0]]

    return labels


def format_labeling(labels: np.ndarray) -> str:
    n, k = labels.shape
    lines = [f"{n} {k}"]
    lines.extend("".join(str(int(b)) for b in row) for row in labels)
    return "\n".join(lines) + "\n"


def parse_set_cover(text: str) -> Tuple[int, List[FrozenSet[int]], int]:
    """Parses 'n m k' then m lines 's e_1 ... e_s' (1-based elements)."""
    lines = _content_lines(text)
    if not lines:
        raise errors.ParseError("empty input", 1)
    line_no, header = lines[0]
    if len(header) != 3:
        raise errors.ParseError("header must be 'n m k'", line_no)
    n, m, k = _ints(header, line_no)

    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else line_no)
        raise errors.ParseError(f"expected {m} sets, found {len(body)}", where)

    family = []
    for line_no, tokens in body:
        values = _ints(tokens, line_no)
        s, elements = values[0], values[1:]
        if s != len(elements):
            raise errors.ParseError(
                f"set size {s} but {len(elements)} elements listed", line_no
            )
        family.append(frozenset(elements))

    return n, family, k


def format_set_cover(n: int, family: Sequence[FrozenSet[int]], k: int) -> str:
    lines = [f"{n} {len(family)} {k}"]
    for f in family:
        elements = sorted(f)
        lines.append(" ".join(str(x) for x in [len(elements), *elements]))
    return "\n".join(lines) + "\n"


def parse_vertex_list(text: str, n: int) -> VertexSet:
    """Comma-separated 0-based indices, e.g. '0,2,5'. Empty means empty set."""
    text = text.strip()
    if not text:
        return VertexSet.empty(n)
    try:
        vertices = [int(t) for t in text.split(",")]
    except ValueError:
        raise errors.ParseError(f"bad vertex list '{text}'", 1)
    bad = [v for v in vertices if not 0 <= v < n]
    if bad:
        raise errors.ParseError(f"vertices {bad} outside 0..{n - 1}", 1)
    return VertexSet.of(n, vertices)


def parse_partition(text: str, n: int) -> Tuple[VertexSet, VertexSet]:
    """Two nonblank lines, each a comma-separated vertex list."""
    lines = [l for l in text.split("\n") if l.strip()]
    if len(lines) != 2:
        raise errors.ParseError("partition files hold exactly two lines", len(lines) + 1)
    first = parse_vertex_list(lines[0], n)
    second = parse_vertex_list(lines[1], n)
    return first, second


def format_role_map(roles: Sequence[str]) -> str:
    return "".join(f"{i} {r}\n" for i, r in enumerate(roles))


def dot_string(D: OrientedGraph, highlight: VertexSet = None) -> str:
    """Graphviz description; highlighted vertices are drawn filled."""
    lines = ["digraph D {"]
    for v in range(D.n):
        style = ' [style=filled]' if highlight is not None and v in highlight else ""
        lines.append(f"  {v}{style};")
    lines.extend(f"  {u} -> {v};" for u, v in D.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"
