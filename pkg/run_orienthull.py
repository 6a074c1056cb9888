# Copyright 2021 AlQuraishi Laboratory
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import argparse
import logging
import sys

from orienthull import errors
from orienthull.config import solver_config
from orienthull.convexity.solvers import GEODETIC, HULL
from orienthull.reductions.gadgets import KINDS
from orienthull.utils.argparse import ArgparseAlphabetizer, number_list
from orienthull.utils.script_utils import (
    GENERATOR_KINDS,
    cmd_analyze,
    cmd_generate,
    cmd_reduce,
    cmd_solve,
    cmd_transform,
    cmd_verify,
)

logging.basicConfig()
logger = logging.getLogger(__file__)
logger.setLevel(level=logging.INFO)


def run_command(args):
    config = solver_config(args.config_preset)
    seed = args.seed if args.seed is not None else config.cli.seed

    if args.command == "analyze":
        return cmd_analyze(args.path, seed=seed, dot_path=args.dot)
    elif args.command == "solve":
        return cmd_solve(
            args.path,
            objective=args.objective,
            strategy="split" if args.split is not None else args.strategy,
            partition_path=args.split,
            seed=seed,
            config=config,
            dot_path=args.dot,
        )
    elif args.command == "generate":
        return cmd_generate(
            args.kind, args.params, args.output_path, seed=seed, config=config
        )
    elif args.command == "transform":
        return cmd_transform(
            args.path,
            args.output_path,
            c4=args.c4,
            lexprod=args.lexprod,
            double=args.double,
            seed=seed,
        )
    elif args.command == "reduce":
        return cmd_reduce(
            args.path,
            args.target,
            output_path=args.output_path,
            verify=args.verify,
            seed=seed,
            config=config,
        )
    elif args.command == "verify":
        return cmd_verify(
            args.path,
            hullset=args.hullset,
            geodeticset=args.geodeticset,
            coconvex=args.coconvex,
            labeling=args.labeling,
            seed=seed,
        )
    raise ValueError(f"Unknown command {args.command}")


def main(args) -> int:
    try:
        report = run_command(args)
    except errors.Error as e:
        logger.error("%s failed: %s", args.command, e)
        print(f"error: {e}")
        return 1

    print(report.to_text(), end="")
    return 0 if report.ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(formatter_class=ArgparseAlphabetizer)
    parser.add_argument(
        "--seed", type=int, default=None,
        help="Seed for every random choice; defaults to config.cli.seed"
    )
    parser.add_argument(
        "--config_preset", type=str, default="default",
        help="Name of a preset from orienthull/config.py"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser(
        "analyze", formatter_class=ArgparseAlphabetizer,
        help="Extreme vertices, class flags and distance summary"
    )
    analyze.add_argument("path", type=str)
    analyze.add_argument("--dot", type=str, default=None)

    solve = subparsers.add_parser(
        "solve", formatter_class=ArgparseAlphabetizer,
        help="Hull or geodetic set by an exact or constructive strategy"
    )
    solve.add_argument("path", type=str)
    objective = solve.add_mutually_exclusive_group()
    objective.add_argument(
        "--hull", dest="objective", action="store_const", const=HULL
    )
    objective.add_argument(
        "--geodetic", dest="objective", action="store_const", const=GEODETIC
    )
    strategy = solve.add_mutually_exclusive_group()
    for name in ("exact", "greedy", "cactus", "tournament"):
        strategy.add_argument(
            f"--{name}", dest="strategy", action="store_const", const=name
        )
    strategy.add_argument(
        "--split", type=str, default=None, metavar="PARTITION_FILE",
        help="Split construction; the file lists the stable side, then the clique"
    )
    solve.add_argument("--dot", type=str, default=None)
    solve.set_defaults(objective=HULL, strategy="exact")

    generate = subparsers.add_parser(
        "generate", formatter_class=ArgparseAlphabetizer,
        help="Write a named or seeded random instance"
    )
    generate.add_argument("kind", type=str, choices=GENERATOR_KINDS)
    generate.add_argument(
        "params", type=number_list,
        help="Comma-separated parameters, e.g. 12 or 6,6,0.3"
    )
    generate.add_argument("output_path", type=str)

    transform = subparsers.add_parser(
        "transform", formatter_class=ArgparseAlphabetizer,
        help="G_C4, lexicographic product or label doubling"
    )
    transform.add_argument("path", type=str)
    transform.add_argument("output_path", type=str)
    transform.add_argument("--c4", action="store_true", default=False)
    transform.add_argument("--lexprod", type=str, default=None)
    transform.add_argument("--double", type=str, default=None, metavar="LABELS")

    reduce = subparsers.add_parser(
        "reduce", formatter_class=ArgparseAlphabetizer,
        help="Set-cover gadget for one of the restricted graph classes"
    )
    reduce.add_argument("path", type=str)
    reduce.add_argument("--target", type=str, choices=KINDS, required=True)
    reduce.add_argument("--output_path", type=str, default=None)
    reduce.add_argument("--verify", action="store_true", default=False)

    verify = subparsers.add_parser(
        "verify", formatter_class=ArgparseAlphabetizer,
        help="Check a hull set, geodetic set, co-convex set or labeling"
    )
    verify.add_argument("path", type=str)
    verify.add_argument("--hullset", type=str, default=None)
    verify.add_argument("--geodeticset", type=str, default=None)
    verify.add_argument("--coconvex", type=str, default=None)
    verify.add_argument("--labeling", type=str, default=None)

    return parser


if __name__ == "__main__":
    parser = build_parser()
    args = parser.parse_args()

    sys.exit(main(args))
