import logging
from typing import Optional, Union

import numpy as np

from orienthull.config import config


def make_rng(seed: Optional[Union[int, np.random.Generator]] = None) -> np.random.Generator:
    """Generator for an explicit seed; None means the configured default.

    No entropy is ever drawn from the clock or the OS.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None:
        seed = config.random.seed
        logging.debug("No seed given, using the default %d", seed)
    return np.random.default_rng(seed)
