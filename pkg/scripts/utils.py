import argparse


def add_corpus_args(parser: argparse.ArgumentParser):
    parser.add_argument(
        'output_path', type=str, help="Path for the .json summary"
    )
    parser.add_argument(
        '--no_workers', type=int, default=4,
        help="Number of worker processes"
    )
    parser.add_argument(
        '--chunksize', type=int, default=10,
        help="Instances handed to a worker at a time"
    )
    parser.add_argument(
        '--config_preset', type=str, default="default",
        help="Name of a preset from orienthull/config.py"
    )
