from . import graph
from . import convexity
from . import bounds
from . import transforms
from . import reductions
from . import cactus
from . import utils

__all__ = [
    "graph", "convexity", "bounds", "transforms", "reductions", "cactus", "utils"
]
