import random

import pytest
from hypothesis import settings, strategies as st

from localcut import (
    Labelling,
    make_random_orientation,
    make_random_regular,
    random_labelling,
)

# Oracle-backed properties can take a while per example; wall-clock deadlines
# only add flakiness on loaded machines.
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


def small_regular_graphs(max_half: int = 8, degrees: tuple[int, ...] = (3, 5)):
    """Seeded random regular graphs small enough for the exact oracles."""

    def build(d: int, half: int, seed: int):
        n = 2 * max(half, (d + 2) // 2 + 1)
        return make_random_regular(n, d, seed=seed)

    return st.builds(
        build,
        st.sampled_from(degrees),
        st.integers(min_value=2, max_value=max_half),
        st.integers(min_value=0, max_value=2 ** 32 - 1),
    )


def oriented_graphs(max_half: int = 8, degrees: tuple[int, ...] = (3, 5)):
    def orient(g, seed: int):
        return make_random_orientation(g, seed=seed)

    return st.builds(
        orient,
        small_regular_graphs(max_half, degrees),
        st.integers(min_value=0, max_value=2 ** 32 - 1),
    )


def labelling_for(n: int, seed: int) -> Labelling:
    """Either a dense permutation or a sparse sample, depending on the seed."""
    if seed % 2:
        ids = list(range(1, n + 1))
        random.Random(seed).shuffle(ids)
        return Labelling(ids)
    return random_labelling(n, seed=seed)


@pytest.fixture
def rng():
    return random.Random(0)
