"""Bodies of the run_orienthull.py subcommands.

Every command returns a RunReport; files are only written where a command
is asked to produce them.
"""
import logging
import os
from typing import Optional, Sequence

from orienthull import errors
from orienthull.bounds.greedy import greedy_hull_set
from orienthull.bounds.split import split_hull_set
from orienthull.bounds.tournament import tournament_hull_set
from orienthull.cactus.solver import solve_cactus
from orienthull.config import solver_config
from orienthull.convexity.extreme import ExtremeKind, extreme_vertices
from orienthull.convexity.interval import (
    distances,
    is_coconvex,
    is_geodetic_set,
    is_hull_set,
)
from orienthull.convexity.solvers import GEODETIC, HULL, min_geodetic_set, min_hull_set
from orienthull.graph.digraph import OrientedGraph
from orienthull.graph.distances import UNREACHABLE
from orienthull.graph.parsers import (
    dot_string,
    format_graph,
    format_labeling,
    format_role_map,
    instance_hash,
    parse_graph,
    parse_labeling,
    parse_partition,
    parse_set_cover,
    parse_undirected,
    parse_vertex_list,
)
from orienthull.graph.structure import structural_queries
from orienthull.graph.vertex_set import VertexSet
from orienthull.reductions.gadgets import build_gadget, partition
from orienthull.reductions.set_cover import make_instance
from orienthull.reductions.verification import verify_equivalence
from orienthull.transforms import generators, random_graphs
from orienthull.transforms.c4 import orient_c4
from orienthull.transforms.partial_cube import (
    HypercubeLabeling,
    doubling_labels,
    verify_isometric_labeling,
)
from orienthull.transforms.products import lex_product
from orienthull.utils.report import RunReport
from orienthull.utils.timing import Timer


logging.basicConfig()
logger = logging.getLogger(__file__)
logger.setLevel(level=logging.INFO)


STRATEGIES = ("exact", "greedy", "cactus", "tournament", "split")

GENERATOR_KINDS = (
    "transitive-tournament",
    "directed-cycle",
    "tight-example",
    "random-orientation",
    "random-tournament",
    "random-cactus",
    "random-bipartite",
    "random-split",
    "random-tree",
)


def _read(path: str) -> str:
    with open(path, "r") as fp:
        return fp.read()


def _write(path: str, text: str):
    with open(path, "w") as fp:
        fp.write(text)
    logger.info("Wrote %s", path)


def load_graph(path: str) -> OrientedGraph:
    return parse_graph(_read(path))


def vertex_set_arg(value: str, n: int) -> VertexSet:
    """A vertex list given inline ("0,2,5") or as the path of a file."""
    if os.path.isfile(value):
        value = _read(value)
    return parse_vertex_list(value, n)


def _instance_stats(report: RunReport, D: OrientedGraph, seed: int):
    report.add("seed", seed)
    report.add("instance_hash", instance_hash(D))
    report.add("n", D.n)
    report.add("m", D.m)


def _timer(msg: str, report: RunReport, config):
    return Timer(msg, report if config.cli.report_timing else None)


def cmd_analyze(path: str, seed: int = 0, dot_path: Optional[str] = None) -> RunReport:
    D = load_graph(path)
    report = RunReport(f"analyze {path}")
    _instance_stats(report, D, seed)

    kinds = extreme_vertices(D)
    report.add("ext", [v for v, k in kinds.items() if k != ExtremeKind.NOT_EXTREME])
    for key, kind in (
        ("sources", ExtremeKind.SOURCE),
        ("sinks", ExtremeKind.SINK),
        ("transitive", ExtremeKind.TRANSITIVE),
    ):
        report.add(key, [v for v, k in kinds.items() if k == kind])
    report.extend(structural_queries(D).items())

    dist = distances(D)
    report.add("diameter", dist.diameter())
    unreachable = int((dist.d == UNREACHABLE).sum())
    report.add("unreachable_pairs", unreachable)

    if dot_path is not None:
        _write(dot_path, dot_string(D))
    return report


def _add_certificate(report: RunReport, cert):
    report.add("bound", cert.bound_value)
    report.add("ext_count", cert.ext_count)
    report.add("within_bound", cert.within_bound())
    if cert.trace:
        report.add("trace_steps", len(cert.trace))
        report.add("ledger_holds", cert.ledger_holds())


def _add_cactus_solution(report: RunReport, solution):
    report.add("lower_bound", solution.lower_bound)
    report.add("certified", solution.certified)
    report.add("degenerate_single_cycle", solution.degenerate_single_cycle)
    report.add("exact_fallback", solution.exact_fallback)
    for i, c in enumerate(solution.cycles):
        report.add(f"cycle_{i}", f"{c.cls.value} {list(c.vertices)}")
    for i, K in solution.certificates:
        report.add(f"certificate_{i}", K)
    for i, K in solution.forcing_sets:
        report.add(f"forcing_set_{i}", K)


def cmd_solve(
    path: str,
    objective: str = HULL,
    strategy: str = "exact",
    partition_path: Optional[str] = None,
    seed: int = 0,
    config=None,
    dot_path: Optional[str] = None,
) -> RunReport:
    config = config if config is not None else solver_config()
    if strategy not in STRATEGIES:
        raise errors.BadParameterError(f"Unknown strategy {strategy}")
    if objective not in (HULL, GEODETIC):
        raise errors.BadParameterError(f"Unknown objective {objective}")
    if strategy in ("greedy", "tournament", "split") and objective != HULL:
        raise errors.BadParameterError(
            f"The {strategy} construction only builds hull sets"
        )
    if strategy == "split" and partition_path is None:
        raise errors.BadParameterError("--split needs a partition file")

    D = load_graph(path)
    report = RunReport(f"solve {path} --{objective} --{strategy}")
    _instance_stats(report, D, seed)
    report.add("objective", objective)
    report.add("strategy", strategy)

    with _timer("solve", report, config):
        if strategy == "exact":
            solve = min_hull_set if objective == HULL else min_geodetic_set
            result = solve(D, config)
            witness = result.witness
            report.add("nodes_explored", result.nodes_explored)
        elif strategy == "cactus":
            solution = solve_cactus(D, objective, config=config)
            witness = solution.vertex_set
            _add_cactus_solution(report, solution)
        else:
            if strategy == "greedy":
                cert = greedy_hull_set(D)
            elif strategy == "tournament":
                cert = tournament_hull_set(D)
            else:
                stable, clique = parse_partition(_read(partition_path), D.n)
                cert = split_hull_set(D, stable, clique)
            witness = cert.hull_set
            _add_certificate(report, cert)

    report.add("number", len(witness))
    report.add("witness", witness)

    if dot_path is not None:
        _write(dot_path, dot_string(D, highlight=witness))
    return report


def _ints(params: Sequence[float], count: int, kind: str):
    if len(params) != count or any(float(p) != int(p) for p in params):
        raise errors.BadParameterError(
            f"{kind} takes {count} integer parameter(s), got {list(params)}"
        )
    return [int(p) for p in params]


def _with_probability(params: Sequence[float], count: int, kind: str):
    """count integer parameters, optionally followed by an edge probability."""
    if len(params) == count + 1:
        return _ints(params[:count], count, kind), float(params[count])
    return _ints(params, count, kind), None


def cmd_generate(
    kind: str,
    params: Sequence[float],
    output_path: str,
    seed: int = 0,
    config=None,
) -> RunReport:
    config = config if config is not None else solver_config()
    extra = {}
    if kind == "transitive-tournament":
        D = generators.transitive_tournament(*_ints(params, 1, kind))
    elif kind == "directed-cycle":
        D = generators.directed_cycle(*_ints(params, 1, kind))
    elif kind == "tight-example":
        D = generators.tight_example(*_ints(params, 1, kind))
    elif kind == "random-orientation":
        (n,), p = _with_probability(params, 1, kind)
        D = random_graphs.random_oriented_graph(n, p, seed=seed, config=config)
    elif kind == "random-tournament":
        D = random_graphs.random_tournament(*_ints(params, 1, kind), seed=seed)
    elif kind == "random-cactus":
        D = random_graphs.random_cactus(*_ints(params, 1, kind), seed=seed, config=config)
    elif kind == "random-bipartite":
        (n1, n2), p = _with_probability(params, 2, kind)
        D = random_graphs.random_bipartite(n1, n2, p, seed=seed, config=config)
    elif kind == "random-split":
        (ns, nc), p = _with_probability(params, 2, kind)
        D, stable, clique = random_graphs.random_split(ns, nc, p, seed=seed, config=config)
        extra[".partition"] = f"{stable.to_string()}\n{clique.to_string()}\n"
    elif kind == "random-tree":
        D = random_graphs.random_oriented_tree(*_ints(params, 1, kind), seed=seed)
    else:
        raise errors.BadParameterError(f"Unknown generator kind {kind}")

    _write(output_path, format_graph(D))
    for suffix, text in extra.items():
        _write(output_path + suffix, text)

    report = RunReport(f"generate {kind} {','.join(str(p) for p in params)}")
    _instance_stats(report, D, seed)
    report.add("output", output_path)
    return report


def cmd_transform(
    path: str,
    output_path: str,
    c4: bool = False,
    lexprod: Optional[str] = None,
    double: Optional[str] = None,
    seed: int = 0,
) -> RunReport:
    chosen = [c4, lexprod is not None, double is not None]
    if sum(chosen) != 1:
        raise errors.BadParameterError(
            "Exactly one of --c4, --lexprod and --double is required"
        )

    sidecars = {}
    if c4:
        G = parse_undirected(_read(path))
        D, mapping = orient_c4(G)
        sidecars[".map"] = format_role_map(
            ["-".join(str(x) for x in o) for o in mapping.origin]
        )
        command = f"transform {path} --c4"
    elif lexprod is not None:
        D1, D2 = load_graph(path), load_graph(lexprod)
        D = lex_product(D1, D2)
        sidecars[".map"] = format_role_map(
            [f"{v // D2.n}-{v % D2.n}" for v in range(D.n)]
        )
        command = f"transform {path} --lexprod {lexprod}"
    else:
        G = parse_undirected(_read(path))
        L = HypercubeLabeling(parse_labeling(_read(double)))
        D, mapping, doubled = doubling_labels(G, L)
        sidecars[".map"] = format_role_map(
            ["-".join(str(x) for x in o) for o in mapping.origin]
        )
        sidecars[".labels"] = format_labeling(doubled.labels)
        command = f"transform {path} --double {double}"

    _write(output_path, format_graph(D))
    for suffix, text in sidecars.items():
        _write(output_path + suffix, text)

    report = RunReport(command)
    _instance_stats(report, D, seed)
    report.add("output", output_path)
    return report


def cmd_reduce(
    path: str,
    target: str,
    output_path: Optional[str] = None,
    verify: bool = False,
    seed: int = 0,
    config=None,
) -> RunReport:
    config = config if config is not None else solver_config()
    n, family, k = parse_set_cover(_read(path))
    instance = make_instance(n, family, k)

    D, mapping, threshold = build_gadget(target, instance)
    report = RunReport(f"reduce {path} --target {target}")
    _instance_stats(report, D, seed)
    report.add("target", target)
    report.add("threshold", threshold)

    if output_path is not None:
        first, second = partition(mapping)
        _write(output_path, format_graph(D))
        _write(output_path + ".roles", format_role_map([str(r) for r in mapping.roles]))
        _write(output_path + ".partition", f"{first.to_string()}\n{second.to_string()}\n")

    if verify:
        with _timer("verify", report, config):
            equivalence = verify_equivalence(instance, config)
        report.add("optcover", equivalence.optcover)
        report.add("cover", list(equivalence.cover))
        report.add("ogn", "/".join(str(v) for v in equivalence.ogn.values()))
        report.add("equivalence", equivalence.holds)
        report.ok = equivalence.holds

    return report


def cmd_verify(
    path: str,
    hullset: Optional[str] = None,
    geodeticset: Optional[str] = None,
    coconvex: Optional[str] = None,
    labeling: Optional[str] = None,
    seed: int = 0,
) -> RunReport:
    given = {
        "hullset": hullset,
        "geodeticset": geodeticset,
        "coconvex": coconvex,
        "labeling": labeling,
    }
    given = {k: v for k, v in given.items() if v is not None}
    if len(given) != 1:
        raise errors.BadParameterError(
            "Exactly one of --hullset, --geodeticset, --coconvex and "
            "--labeling is required"
        )
    (check, value), = given.items()

    D = load_graph(path)
    report = RunReport(f"verify {path} --{check} {value}")
    _instance_stats(report, D, seed)

    if check == "labeling":
        L = HypercubeLabeling(parse_labeling(_read(value)))
        passed = verify_isometric_labeling(D, L)
        reason = "distances equal Hamming distances" if passed else (
            "some distance differs from the Hamming distance of the labels"
        )
    else:
        S = vertex_set_arg(value, D.n)
        report.add("set", S)
        if check == "hullset":
            passed = is_hull_set(D, S)
            reason = "hull is V" if passed else "hull misses some vertex"
        elif check == "geodeticset":
            passed = is_geodetic_set(D, S)
            reason = "interval is V" if passed else "interval misses some vertex"
        else:
            passed = is_coconvex(D, S)
            reason = "complement is convex" if passed else "complement is not convex"

    report.add("check", check)
    report.add("result", "pass" if passed else "fail")
    report.add("reason", reason)
    report.ok = passed
    return report
