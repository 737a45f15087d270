import random
from functools import lru_cache

import pytest

from proxigraph.generators import random_forest, random_plane_graph, random_visible_forest


@lru_cache(maxsize=None)
def forest(seed, lo=3, hi=40, kind="dt"):
    """Seeded random plane forest with n drawn from [lo, hi]."""
    n = random.Random(seed).randint(lo, hi)
    if kind == "dt":
        return random_forest(n, seed=seed)
    return random_visible_forest(n, seed=seed)


@lru_cache(maxsize=None)
def plane_graph(seed, lo=4, hi=12, max_m=8):
    n = random.Random(seed).randint(lo, hi)
    m = random.Random(seed ^ 0xBEEF).randint(1, max_m)
    return random_plane_graph(n, seed=seed, m=m)


@pytest.fixture
def rng():
    return random.Random(20240811)
