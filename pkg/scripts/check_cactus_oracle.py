import argparse
from functools import partial
import json
import logging
from multiprocessing import Pool

import sys
sys.path.append(".") # an innocent hack to get this to run from the top level

from tqdm import tqdm

from orienthull.cactus.solver import min_geodetic_set_cactus, min_hull_set_cactus
from orienthull.config import solver_config
from orienthull.convexity.solvers import min_geodetic_set, min_hull_set
from orienthull.graph.parsers import format_graph
from orienthull.transforms.random_graphs import random_cactus
from orienthull.utils.suppress_output import SuppressLogging
from orienthull.utils.timing import timing
from scripts.utils import add_corpus_args


def check_seed(seed, n, config):
    D = random_cactus(n, seed=seed, config=config)
    with SuppressLogging(logging.WARNING):
        hull_sol = min_hull_set_cactus(D, config=config)
        geo_sol = min_geodetic_set_cactus(D, config=config)
        ohn = min_hull_set(D, config).optimum
        ogn = min_geodetic_set(D, config).optimum

    return {
        "seed": seed,
        "graph": format_graph(D),
        "classes": hull_sol.class_counts(),
        "ohn": ohn,
        "cactus_hull": hull_sol.size,
        "ogn": ogn,
        "cactus_geodetic": geo_sol.size,
        "certified": hull_sol.certified and geo_sol.certified,
        "exact_fallback": hull_sol.exact_fallback or geo_sol.exact_fallback,
        "agrees": ohn == hull_sol.size and ogn == geo_sol.size,
    }


def main(args):
    config = solver_config(args.config_preset)
    seeds = list(range(args.seed, args.seed + args.num_instances))
    fn = partial(check_seed, n=args.n, config=config)

    results = []
    with timing(f"checking {len(seeds)} cacti on {args.n} vertices"):
        with Pool(processes=args.no_workers) as p:
            with tqdm(total=len(seeds)) as pbar:
                for r in p.imap(fn, seeds, chunksize=args.chunksize):
                    results.append(r)
                    pbar.update()

    disagreements = [r for r in results if not r["agrees"]]
    summary = {
        "instances": len(results),
        "disagreements": len(disagreements),
        "uncertified": sum(not r["certified"] for r in results),
        "exact_fallback": sum(r["exact_fallback"] for r in results),
        "failing_instances": disagreements,
    }
    with open(args.output_path, "w") as fp:
        fp.write(json.dumps(summary, indent=4))

    return 0 if not disagreements else 1


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    add_corpus_args(parser)
    parser.add_argument(
        "--n", type=int, default=14, help="Vertices per random cactus"
    )
    parser.add_argument(
        "--seed", type=int, default=0,
        help="First seed of the instance stream"
    )
    parser.add_argument(
        "--num_instances", type=int, default=300,
        help="Number of consecutive seeds to check"
    )

    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO)
    sys.exit(main(args))
