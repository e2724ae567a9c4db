import random

import pytest

from udcim.diffusion import Thresholds
from udcim.graph import Tendency, build_graph


@pytest.fixture
def g3():
    """Three neutral nodes, arcs (0->2, 0.6) and (1->2, 0.5)."""
    return build_graph(3, [(0, 2, 0.6), (1, 2, 0.5)])


@pytest.fixture
def g3_swapped():
    """g3 with the two weights exchanged."""
    return build_graph(3, [(0, 2, 0.5), (1, 2, 0.6)])


@pytest.fixture
def g4():
    """g3 but node 2 leans A."""
    return build_graph(
        3,
        [(0, 2, 0.6), (1, 2, 0.5)],
        tendencies=[Tendency.NEUTRAL, Tendency.NEUTRAL, Tendency.A],
    )


@pytest.fixture
def g5():
    """Six neutral nodes in two blocks: {0,1,2,3} chained, {4,5} apart."""
    return build_graph(6, [(0, 1, 0.9), (1, 2, 0.9), (3, 1, 0.9), (4, 5, 0.9)])


@pytest.fixture
def g5_partition():
    """The planted two-block community structure of g5."""
    return [{0, 1, 2, 3}, {4, 5}]


@pytest.fixture
def th53():
    return Thresholds(0.5, 0.3)


@pytest.fixture
def th52():
    return Thresholds(0.5, 0.2)


def random_graph(rng: random.Random, n: int, arc_prob: float = 0.3,
                 weights=(0.3, 0.6, 0.9), mixed_tendencies: bool = True):
    """Seeded random digraph generator shared by the sampling tests."""
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < arc_prob:
                arcs.append((u, v, rng.choice(weights)))
    if mixed_tendencies:
        tend = [rng.choice((Tendency.NEUTRAL, Tendency.A, Tendency.B)) for _ in range(n)]
    else:
        tend = [Tendency.NEUTRAL] * n
    return build_graph(n, arcs, tendencies=tend)
