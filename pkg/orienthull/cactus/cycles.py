"""Classification of the cycles of an oriented cactus.

A cycle is unsatisfactory when every hull set needs one of its
non-extreme vertices:

  * a trap cycle is directed and all its external arcs point the same
    way, into the cycle (receiver) or out of it (transmitter);
  * UC2 is a directed cycle with a single cut vertex that is not a trap;
  * UC3 has exactly one source u1 and one sink u2, the two (u1, u2)-paths
    have different lengths and the longer has no internal cut vertex.

Among the remaining (satisfactory) cycles, a falsely satisfactory cycle
keeps some vertices out of the first interval step of any hull set built
from the extreme vertices, so a geodetic set needs one more vertex there.
Everything else is truly satisfactory.
"""
import dataclasses
import enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from orienthull import errors
from orienthull.convexity.extreme import ExtremeKind, ext_set, extreme_kind
from orienthull.graph.blocks import block_decomposition, cycle_order
from orienthull.graph.digraph import OrientedGraph, induced_subgraph, underlying
from orienthull.graph.structure import is_cactus


class CycleClass(enum.Enum):
    TRAP_RECEIVER = "trap_receiver"
    TRAP_TRANSMITTER = "trap_transmitter"
    UC2 = "uc2"
    UC3 = "uc3"
    FSC1 = "fsc1"
    FSC2 = "fsc2"
    TSC = "tsc"

    @property
    def unsatisfactory(self) -> bool:
        return self in (
            CycleClass.TRAP_RECEIVER,
            CycleClass.TRAP_TRANSMITTER,
            CycleClass.UC2,
            CycleClass.UC3,
        )

    @property
    def falsely_satisfactory(self) -> bool:
        return self in (CycleClass.FSC1, CycleClass.FSC2)


@dataclasses.dataclass(frozen=True)
class CycleInfo:
    # Index of the block in the block decomposition
    block: int

    # Cyclic order; for directed cycles, the order the arcs run in
    vertices: Tuple[int, ...]

    is_directed: bool

    # Cut vertices of D on the cycle, in cyclic order, with their kinds
    cut_vertices: Tuple[int, ...]
    tcv: Tuple[int, ...]
    rcv: Tuple[int, ...]

    cls: CycleClass

    # Class-dependent witnesses: "source", "sink", "long_path",
    # "short_path", "v1", "v2"
    witnesses: Dict[str, Tuple[int, ...]]

    # TCVs whose outside branch reaches an anchor, and RCVs whose outside
    # branch is reached from one. Anchors are the extreme vertices and the
    # certificate vertices of the unsatisfactory cycles.
    active_tcv: Tuple[int, ...] = ()
    active_rcv: Tuple[int, ...] = ()

    # Vertices left out of the first interval step (falsely satisfactory)
    gap: Tuple[int, ...] = ()

    # Vertex the constructions add for this cycle, if any
    choice: Optional[int] = None

    # Every vertex the constructions may add for this cycle, choice first
    candidates: Tuple[int, ...] = ()

    def successor(self, v: int) -> int:
        i = self.vertices.index(v)
        return self.vertices[(i + 1) % len(self.vertices)]

    def predecessor(self, v: int) -> int:
        i = self.vertices.index(v)
        return self.vertices[i - 1]


# (class, witnesses, gap, choice)
_Verdict = Tuple[CycleClass, Dict[str, Tuple[int, ...]], Tuple[int, ...], Optional[int]]


def _directed_order(D: OrientedGraph, order: Sequence[int]) -> Optional[Tuple[int, ...]]:
    k = len(order)
    if all(D.has_arc(order[i], order[(i + 1) % k]) for i in range(k)):
        return tuple(order)
    rev = tuple(reversed(order))
    if all(D.has_arc(rev[i], rev[(i + 1) % k]) for i in range(k)):
        return rev
    return None


def _cut_kinds(
    D: OrientedGraph, cycle: Sequence[int], cut: Sequence[int]
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    on_cycle = set(cycle)
    tcv = tuple(c for c in cut if any(x not in on_cycle for x in D.out_adj[c]))
    rcv = tuple(c for c in cut if any(x not in on_cycle for x in D.in_adj[c]))
    return tcv, rcv


def _active_roles(
    g: nx.DiGraph,
    cycle: Sequence[int],
    tcv: Sequence[int],
    rcv: Sequence[int],
    anchors: FrozenSet[int],
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The TCVs and RCVs whose branches outside the cycle meet an anchor.

    Every path between a cut vertex and its outside branch stays in that
    branch, so a role that reaches no anchor contributes no geodesic
    between members of a hull set.
    """
    on_cycle = set(cycle)
    active_tcv, active_rcv = [], []
    for x in dict.fromkeys(tuple(tcv) + tuple(rcv)):
        branch = g.subgraph(v for v in g.nodes if v == x or v not in on_cycle)
        if x in tcv and anchors.intersection(nx.descendants(branch, x)):
            active_tcv.append(x)
        if x in rcv and anchors.intersection(nx.ancestors(branch, x)):
            active_rcv.append(x)
    order = {v: i for i, v in enumerate(cycle)}
    return (
        tuple(sorted(active_tcv, key=order.get)),
        tuple(sorted(active_rcv, key=order.get)),
    )


def _classify_directed(
    flow: Tuple[int, ...], cut: Tuple[int, ...], tcv, rcv, active_tcv, active_rcv
) -> _Verdict:
    k = len(flow)
    pos = {v: i for i, v in enumerate(flow)}

    def succ(v):
        return flow[(pos[v] + 1) % k]

    def pred(v):
        return flow[pos[v] - 1]

    if not tcv:
        # Vacuously a receiver trap when there is no cut vertex at all
        entries = active_rcv or cut
        choice = min((pred(c) for c in entries), default=None)
        return CycleClass.TRAP_RECEIVER, {}, (), choice
    if not rcv:
        exits = active_tcv or cut
        choice = min(succ(c) for c in exits)
        return CycleClass.TRAP_TRANSMITTER, {}, (), choice
    if len(cut) == 1:
        # The successor is covered on the way out through the cut vertex,
        # the predecessor on the way in
        w = cut[0]
        valid = []
        if w in active_tcv:
            valid.append(succ(w))
        if w in active_rcv:
            valid.append(pred(w))
        choice = min(valid) if valid else succ(w)
        return CycleClass.UC2, {"cut": cut}, (), choice

    # Falsely satisfactory of type 2: sweeping forward from some RCV, every
    # RCV comes no later than every TCV and the sweep ends on a TCV at least
    # two steps before getting back. Only active roles count.
    tcv_set, rcv_set = set(active_tcv), set(active_rcv)
    live = [c for c in cut if c in tcv_set or c in rcv_set]
    for a in sorted(rcv_set, key=pos.get):
        sweep = sorted(live, key=lambda c: (pos[c] - pos[a]) % k)
        last = sweep[-1]
        if last not in tcv_set or last == a:
            continue
        r_idx = [i for i, c in enumerate(sweep) if c in rcv_set]
        t_idx = [i for i, c in enumerate(sweep) if c in tcv_set]
        if max(r_idx) > min(t_idx):
            continue
        back = (pos[a] - pos[last]) % k
        if back < 2:
            continue
        gap = tuple(flow[(pos[last] + i) % k] for i in range(1, back))
        witnesses = {"v1": (a,), "v2": (last,)}
        return CycleClass.FSC2, witnesses, gap, gap[0]

    return CycleClass.TSC, {}, (), None


def _source_sink_paths(
    order: Tuple[int, ...], u1: int, u2: int
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Both (u1, u2)-paths around the cycle, as vertex sequences."""
    k = len(order)
    i, j = order.index(u1), order.index(u2)
    forward = tuple(order[(i + s) % k] for s in range((j - i) % k + 1))
    backward = tuple(order[(i - s) % k] for s in range((i - j) % k + 1))
    return forward, backward


def _classify_two_extremes(
    order: Tuple[int, ...], u1: int, u2: int, cut: Tuple[int, ...], active_tcv, active_rcv
) -> _Verdict:
    a, b = _source_sink_paths(order, u1, u2)
    long_path, short_path = (a, b) if len(a) >= len(b) else (b, a)
    witnesses = {
        "source": (u1,),
        "sink": (u2,),
        "long_path": long_path,
        "short_path": short_path,
    }
    if len(long_path) == len(short_path):
        return CycleClass.TSC, witnesses, (), None

    interior = long_path[1:-1]
    if not set(cut).intersection(interior):
        return CycleClass.UC3, witnesses, (), min(interior)

    # Positions along P of the closest RCV to u1 and the closest TCV to u2.
    # A cut vertex holding both roles covers P from either end.
    L = len(long_path) - 1
    rcv_set, tcv_set = set(active_rcv), set(active_tcv)
    r = [i for i in range(1, L) if long_path[i] in rcv_set]
    t = [i for i in range(1, L) if long_path[i] in tcv_set]
    if not t and not r:
        lo, hi = 0, L
        choice_at = None
    elif not t:
        lo, hi = 0, min(r)
        choice_at = 1
    elif not r:
        lo, hi = max(t), L
        choice_at = L - 1
    else:
        lo, hi = max(t), min(r)
        choice_at = None
    if hi - lo < 2:
        return CycleClass.TSC, witnesses, (), None

    gap = long_path[lo + 1:hi]
    choice = long_path[choice_at] if choice_at is not None else min(gap)
    witnesses["v1"] = (long_path[hi],)
    witnesses["v2"] = (long_path[lo],)
    return CycleClass.FSC1, witnesses, gap, choice


def _anchor_members(cls: CycleClass, order, cut, witnesses) -> Tuple[int, ...]:
    if cls in (CycleClass.TRAP_RECEIVER, CycleClass.TRAP_TRANSMITTER):
        return tuple(order)
    if cls == CycleClass.UC2:
        return tuple(v for v in order if v not in cut)
    if cls == CycleClass.UC3:
        return tuple(witnesses["long_path"][1:-1])
    return ()


def classify_cycles(D: OrientedGraph) -> List[CycleInfo]:
    if not is_cactus(D):
        raise errors.NotACactusError("Some block is neither an edge nor a cycle")

    blocks = block_decomposition(underlying(D))
    ext = ext_set(D)

    # First pass: orientation, cut vertices and the raw class. The
    # unsatisfactory classes depend on the raw roles only.
    shapes = []
    for b, edges in enumerate(blocks.block_edges):
        if not blocks.is_cycle_block(b):
            continue

        order = cycle_order(edges)
        flow = _directed_order(D, order)
        if flow is not None:
            order = flow
        cut = tuple(v for v in order if v in blocks.cut_vertices)
        tcv, rcv = _cut_kinds(D, order, cut)

        extremes = None
        if flow is None:
            C, old = induced_subgraph(D, order)
            kinds = {old[i]: extreme_kind(C, i) for i in range(C.n)}
            sources = [v for v in order if kinds[v] == ExtremeKind.SOURCE]
            sinks = [v for v in order if kinds[v] == ExtremeKind.SINK]
            n_ext = sum(kinds[v] != ExtremeKind.NOT_EXTREME for v in order)
            if n_ext == 2 and len(sources) == 1 and len(sinks) == 1:
                extremes = (sources[0], sinks[0])
        shapes.append((b, order, flow is not None, cut, tcv, rcv, extremes))

    def verdict(shape, active_tcv, active_rcv) -> _Verdict:
        _, order, directed, cut, tcv, rcv, extremes = shape
        if directed:
            return _classify_directed(order, cut, tcv, rcv, active_tcv, active_rcv)
        if extremes is not None:
            return _classify_two_extremes(
                order, extremes[0], extremes[1], cut, active_tcv, active_rcv
            )
        return CycleClass.TSC, {}, (), None

    anchors = set(ext)
    for shape in shapes:
        cls, witnesses, _, _ = verdict(shape, shape[4], shape[5])
        anchors.update(_anchor_members(cls, shape[1], shape[3], witnesses))
    anchors = frozenset(anchors)

    g = D.to_networkx()
    out = []
    for shape in shapes:
        b, order, directed, cut, tcv, rcv, _ = shape
        active_tcv, active_rcv = _active_roles(g, order, tcv, rcv, anchors)
        cls, witnesses, gap, choice = verdict(shape, active_tcv, active_rcv)

        candidates = ()
        if choice is not None:
            pool = [v for v in order if v not in ext and v != choice]
            if cls.unsatisfactory:
                allowed = set(_anchor_members(cls, order, cut, witnesses))
                pool = [v for v in pool if v in allowed]
            candidates = (choice,) + tuple(sorted(pool))

        out.append(
            CycleInfo(
                block=b,
                vertices=order,
                is_directed=directed,
                cut_vertices=cut,
                tcv=tcv,
                rcv=rcv,
                cls=cls,
                witnesses=witnesses,
                active_tcv=active_tcv,
                active_rcv=active_rcv,
                gap=gap,
                choice=choice,
                candidates=candidates,
            )
        )

    return out
