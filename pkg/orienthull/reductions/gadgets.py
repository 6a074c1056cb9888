"""Gadgets turning a set-cover instance into an oriented graph.

A cover of size k exists iff the gadget has a geodetic set of size k + 3.
Vertices are numbered set vertices f_1..f_m first (0..m-1), then element
vertices u_1..u_n (m..m+n-1), then the apexes in the order listed in
APEXES.
"""
import dataclasses
import enum
from typing import Dict, Iterable, List, Sequence, Tuple

from orienthull.graph.digraph import OrientedGraph, build_graph
from orienthull.graph.vertex_set import VertexSet
from orienthull.reductions.set_cover import SetCoverInstance


BIPARTITE = "bipartite"
SPLIT = "split"
COBIPARTITE = "cobipartite"
CORE = "core"

KINDS = (BIPARTITE, SPLIT, COBIPARTITE)

APEXES = {
    CORE: (),
    BIPARTITE: ("u", "v", "w"),
    SPLIT: ("u", "w", "x", "y"),
    COBIPARTITE: ("u", "v", "w"),
}

# Apexes that are sources or sinks, hence in every geodetic set
FORCED_APEXES = {
    CORE: (),
    BIPARTITE: ("u", "v", "w"),
    SPLIT: ("u", "w", "y"),
    COBIPARTITE: ("u", "v", "w"),
}


class RoleKind(enum.Enum):
    SET = "set"
    ELEMENT = "element"
    APEX = "apex"


@dataclasses.dataclass(frozen=True)
class VertexRole:
    kind: RoleKind

    # 1-based set or element number; 0 for apexes
    index: int = 0

    # Apex name
    name: str = ""

    def __str__(self) -> str:
        if self.kind == RoleKind.APEX:
            return f"apex:{self.name}"
        return f"{self.kind.value}:{self.index}"


@dataclasses.dataclass(frozen=True)
class GadgetMapping:
    kind: str
    m: int
    n: int
    roles: Tuple[VertexRole, ...]

    def set_vertex(self, i: int) -> int:
        """Vertex f_{i+1} of the 0-based family index i."""
        return i

    def element_vertex(self, j: int) -> int:
        """Vertex u_j of the 1-based element j."""
        return self.m + j - 1

    @property
    def apex(self) -> Dict[str, int]:
        base = self.m + self.n
        return {name: base + k for k, name in enumerate(APEXES[self.kind])}

    def forced(self) -> Tuple[int, ...]:
        return tuple(self.apex[a] for a in FORCED_APEXES[self.kind])

    def role(self, v: int) -> VertexRole:
        return self.roles[v]


def _mapping(kind: str, instance: SetCoverInstance) -> GadgetMapping:
    roles: List[VertexRole] = [
        VertexRole(RoleKind.SET, i + 1) for i in range(instance.m)
    ]
    roles += [
        VertexRole(RoleKind.ELEMENT, j)
        for j in range(1, instance.universe_size + 1)
    ]
    roles += [VertexRole(RoleKind.APEX, name=a) for a in APEXES[kind]]
    return GadgetMapping(
        kind=kind, m=instance.m, n=instance.universe_size, roles=tuple(roles)
    )


def _membership_arcs(instance: SetCoverInstance, mp: GadgetMapping):
    return [
        (mp.set_vertex(i), mp.element_vertex(j))
        for i, f in enumerate(instance.family)
        for j in sorted(f)
    ]


def _clique_arcs(vertices: Sequence[int]) -> List[Tuple[int, int]]:
    """Transitive orientation of a clique by increasing index."""
    return [
        (a, b) for k, a in enumerate(vertices) for b in vertices[k + 1:]
    ]


def core_gadget(instance: SetCoverInstance) -> Tuple[OrientedGraph, GadgetMapping]:
    """The membership digraph: f_i -> u_j whenever j is in F_i."""
    instance.validate()
    mp = _mapping(CORE, instance)
    return build_graph(len(mp.roles), _membership_arcs(instance, mp)), mp


def to_bipartite_dag(
    instance: SetCoverInstance,
) -> Tuple[OrientedGraph, GadgetMapping, int]:
    """Acyclic gadget with a bipartite underlying graph.

    Adds u -> f_i -> w for every set, u_j -> v for every element and
    u -> v.
    """
    instance.validate()
    mp = _mapping(BIPARTITE, instance)
    u, v, w = (mp.apex[a] for a in ("u", "v", "w"))
    sets = [mp.set_vertex(i) for i in range(instance.m)]
    elements = [mp.element_vertex(j) for j in range(1, instance.universe_size + 1)]

    arcs = _membership_arcs(instance, mp)
    arcs += [(u, f) for f in sets] + [(f, w) for f in sets]
    arcs += [(e, v) for e in elements]
    arcs.append((u, v))
    return build_graph(len(mp.roles), arcs), mp, instance.budget + 3


def to_split(
    instance: SetCoverInstance,
) -> Tuple[OrientedGraph, GadgetMapping, int]:
    """Gadget with a split underlying graph.

    The set vertices form a transitive clique together with u and x; the
    element vertices, w and y are pairwise non-adjacent. Arcs u -> f_i,
    x -> f_i, f_i -> w, u_j -> x, u -> x and x -> y close directed cycles
    f_i -> u_j -> x -> f_i.
    """
    instance.validate()
    mp = _mapping(SPLIT, instance)
    u, w, x, y = (mp.apex[a] for a in ("u", "w", "x", "y"))
    sets = [mp.set_vertex(i) for i in range(instance.m)]
    elements = [mp.element_vertex(j) for j in range(1, instance.universe_size + 1)]

    arcs = _membership_arcs(instance, mp) + _clique_arcs(sets)
    arcs += [(u, f) for f in sets] + [(x, f) for f in sets]
    arcs += [(f, w) for f in sets]
    arcs += [(e, x) for e in elements]
    arcs += [(u, x), (x, y)]
    return build_graph(len(mp.roles), arcs), mp, instance.budget + 3


def to_cobipartite(
    instance: SetCoverInstance,
) -> Tuple[OrientedGraph, GadgetMapping, int]:
    """Acyclic gadget whose underlying graph is two cliques.

    X + {w} and Y + {u, v} are cliques; u precedes the set vertices, which
    precede the element vertices, which precede v, and w comes after the
    set vertices.
    """
    instance.validate()
    mp = _mapping(COBIPARTITE, instance)
    u, v, w = (mp.apex[a] for a in ("u", "v", "w"))
    sets = [mp.set_vertex(i) for i in range(instance.m)]
    elements = [mp.element_vertex(j) for j in range(1, instance.universe_size + 1)]

    arcs = _membership_arcs(instance, mp)
    arcs += _clique_arcs(sets) + _clique_arcs(elements)
    arcs += [(u, f) for f in sets] + [(f, w) for f in sets]
    arcs += [(u, e) for e in elements] + [(e, v) for e in elements]
    arcs.append((u, v))
    return build_graph(len(mp.roles), arcs), mp, instance.budget + 3


BUILDERS = {
    BIPARTITE: to_bipartite_dag,
    SPLIT: to_split,
    COBIPARTITE: to_cobipartite,
}


def build_gadget(kind: str, instance: SetCoverInstance):
    if kind not in BUILDERS:
        raise ValueError(f"Unknown gadget kind {kind}")
    return BUILDERS[kind](instance)


def partition(mapping: GadgetMapping) -> Tuple[VertexSet, VertexSet]:
    """The two sides the underlying graph splits into.

    Bipartite: X + {v} and Y + {u, w}. Split: stable Y + {w, y} and clique
    X + {u, x}. Cobipartite: cliques X + {w} and Y + {u, v}.
    """
    n_total = len(mapping.roles)
    sets = [mapping.set_vertex(i) for i in range(mapping.m)]
    elements = [mapping.element_vertex(j) for j in range(1, mapping.n + 1)]
    a = mapping.apex
    if mapping.kind == BIPARTITE:
        first, second = sets + [a["v"]], elements + [a["u"], a["w"]]
    elif mapping.kind == SPLIT:
        first, second = elements + [a["w"], a["y"]], sets + [a["u"], a["x"]]
    elif mapping.kind == COBIPARTITE:
        first, second = sets + [a["w"]], elements + [a["u"], a["v"]]
    else:
        raise ValueError(f"No partition for gadget kind {mapping.kind}")
    return VertexSet.of(n_total, first), VertexSet.of(n_total, second)


def forward_geodetic_set(
    kind: str, instance: SetCoverInstance, cover: Iterable[int]
) -> VertexSet:
    """{f_i : i in cover} plus the forced apexes of the gadget."""
    _, mp, _ = build_gadget(kind, instance)
    vertices = [mp.set_vertex(i) for i in cover] + list(mp.forced())
    return VertexSet.of(len(mp.roles), vertices)
