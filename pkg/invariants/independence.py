from fractions import Fraction

import numpy as np

from liealg import linalg
from resources.config import get_configs

config = get_configs()

# the reference seed point first, then the retries
PUBLISHED_SEEDS = tuple(config.get('independence_seeds', [11, 23, 37, 53]))
SEED_RANGE = config.get('independence_range', 7)


def seed_point(variables, seed, value_range=SEED_RANGE):
    rng = np.random.default_rng(seed)
    values = rng.integers(-value_range, value_range + 1, size=len(variables))
    return {v: Fraction(int(x)) for v, x in zip(variables, values)}


def jacobian_rank(polys, point, variables):
    rows = [[f.diff(v).evaluate(point) for v in variables] for f in polys]
    return linalg.rank(rows)


def independence_check(polys, seeds=PUBLISHED_SEEDS, value_range=SEED_RANGE):
    """True iff the Jacobian of ``polys`` has full row rank at one of the seed points.

    The first seed is the published point; the remaining ones are the retry
    schedule used before reporting dependence.
    """
    polys = list(polys)
    if not polys:
        return True
    variables = sorted({v for f in polys for v in f.variables()})
    if len(variables) < len(polys):
        return False
    for seed in seeds:
        if jacobian_rank(polys, seed_point(variables, seed, value_range), variables) == len(polys):
            return True
    return False
