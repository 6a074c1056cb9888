from argparse import ArgumentTypeError, HelpFormatter
from operator import attrgetter
from typing import Tuple


class ArgparseAlphabetizer(HelpFormatter):
    """
        Sorts the optional arguments of an argparse parser alphabetically
    """

    @staticmethod
    def sort_actions(actions):
        return sorted(actions, key=attrgetter("option_strings"))

    # Formats the help message
    def add_arguments(self, actions):
        actions = ArgparseAlphabetizer.sort_actions(actions)
        super(ArgparseAlphabetizer, self).add_arguments(actions)

    # Formats the usage message
    def add_usage(self, usage, actions, groups, prefix=None):
        actions = ArgparseAlphabetizer.sort_actions(actions)
        args = usage, actions, groups, prefix
        super(ArgparseAlphabetizer, self).add_usage(*args)


def number_list(text: str) -> Tuple[float, ...]:
    """argparse type for generator parameters, e.g. "12" or "6,6,0.3"."""
    try:
        return tuple(
            int(t) if t.strip().lstrip("-").isdigit() else float(t)
            for t in text.split(",")
        )
    except ValueError:
        raise ArgumentTypeError(f"bad parameter list '{text}'")
