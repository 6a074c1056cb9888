import argparse
from functools import partial
import json
import logging
from multiprocessing import Pool

import sys
sys.path.append(".") # an innocent hack to get this to run from the top level

from tqdm import tqdm

from orienthull.config import solver_config
from orienthull.reductions.set_cover import enumerate_set_cover_instances
from orienthull.reductions.verification import verify_equivalence
from orienthull.utils.suppress_output import SuppressLogging
from scripts.utils import add_corpus_args


def check_instance(instance, config):
    with SuppressLogging(logging.WARNING):
        report = verify_equivalence(instance, config)
    return {
        "universe_size": instance.universe_size,
        "family": [sorted(f) for f in instance.family],
        "optcover": report.optcover,
        "ogn": report.ogn,
        "structure_ok": report.structure_ok,
        "holds": report.holds,
    }


def main(args):
    config = solver_config(args.config_preset)
    instances = list(enumerate_set_cover_instances(args.max_n, args.max_m))
    logging.info(f"Checking {len(instances)} set-cover instances...")

    fn = partial(check_instance, config=config)
    results = []
    with Pool(processes=args.no_workers) as p:
        with tqdm(total=len(instances)) as pbar:
            for r in p.imap(fn, instances, chunksize=args.chunksize):
                results.append(r)
                pbar.update()

    failures = [r for r in results if not r["holds"]]
    summary = {
        "instances": len(results),
        "failures": len(failures),
        "failing_instances": failures,
    }
    with open(args.output_path, "w") as fp:
        fp.write(json.dumps(summary, indent=4))

    return 0 if not failures else 1


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    add_corpus_args(parser)
    parser.add_argument(
        "--max_n", type=int, default=4, help="Largest universe size"
    )
    parser.add_argument(
        "--max_m", type=int, default=4, help="Largest family size"
    )

    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO)
    sys.exit(main(args))
