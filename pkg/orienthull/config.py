import copy
import ml_collections as mlc


def enforce_config_constraints(config):
    def string_to_setting(s):
        path = s.split('.')
        setting = config
        for p in path:
            setting = setting[p]

        return setting

    positive_ints = [
        "solver.max_free_vertices",
        "solver.num_workers",
        "solver.chunk_size",
        "reductions.max_universe",
        "reductions.max_family",
        "cactus.max_choice_sets",
    ]

    for s in positive_ints:
        if(string_to_setting(s) < 1):
            raise ValueError(f"{s} must be positive")

    probabilities = [
        "random.cycle_probability",
        "random.edge_probability",
    ]

    for s in probabilities:
        p = string_to_setting(s)
        if(not 0. <= p <= 1.):
            raise ValueError(f"{s} must lie in [0, 1], got {p}")

    lo = config.random.min_cycle_length
    hi = config.random.max_cycle_length
    if(lo < 3 or hi < lo):
        raise ValueError(
            f"Cycle length range [{lo}, {hi}] must satisfy 3 <= min <= max"
        )

    return config


def solver_config(name="default"):
    c = copy.deepcopy(config)
    if name == "default":
        pass
    elif name == "desk":
        # Exhaustive searches over up to 2^28 candidate sets
        c.solver.max_free_vertices = 28
    elif name == "parallel":
        c.solver.num_workers = 4
        c.solver.chunk_size = 1024
    elif name == "quick":
        # Used by smoke tests; small guard, no re-verification of witnesses
        c.solver.max_free_vertices = 16
        c.solver.verify_witnesses = False
    else:
        raise ValueError("Invalid preset name")

    enforce_config_constraints(c)

    return c


max_free_vertices = mlc.FieldReference(24, field_type=int)
default_seed = mlc.FieldReference(0, field_type=int)

config = mlc.ConfigDict(
    {
        "solver": {
            # Guard on the number of non-forced vertices an exhaustive
            # search may range over
            "max_free_vertices": max_free_vertices,
            "num_workers": 1,
            # Candidate subsets handed to a worker at a time
            "chunk_size": 256,
            "verify_witnesses": True,
        },
        "random": {
            "seed": default_seed,
            "min_cycle_length": 3,
            "max_cycle_length": 6,
            # Probability that a new cactus block is a cycle, not an edge
            "cycle_probability": 0.5,
            "edge_probability": 0.5,
        },
        "reductions": {
            "max_universe": 5,
            "max_family": 5,
        },
        "cactus": {
            # Sets of per-cycle candidates tried before giving up on the
            # constructive solution
            "max_choice_sets": 4096,
            "exact_fallback": True,
        },
        "cli": {
            "seed": default_seed,
            "report_timing": True,
        },
    }
)
