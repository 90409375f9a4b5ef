from __future__ import annotations

import pytest

from triconvex.generators import (
    all_connected_graphs,
    bowtie_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_graph,
    star_graph,
    triangle_star_graph,
)

PROBS = (0.2, 0.3, 0.4, 0.5, 0.6)


def random_corpus(n: int, count: int) -> list:
    """Seeded connected random graphs, edge density cycling through PROBS."""
    return [random_connected_graph(n, PROBS[seed % len(PROBS)], seed) for seed in range(count)]


@pytest.fixture(scope="session")
def small_corpus():
    """Every connected labeled graph with up to 5 vertices."""
    graphs = []
    for n in range(1, 6):
        graphs.extend(all_connected_graphs(n))
    return graphs


@pytest.fixture(scope="session")
def sampled_corpus(small_corpus):
    """Small exhaustive corpus plus a seeded random slice of n = 6..8."""
    graphs = list(small_corpus)
    for n in (6, 7, 8):
        graphs.extend(random_corpus(n, 25))
    return graphs


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def p6():
    return path_graph(6)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def bowtie():
    return bowtie_graph()


@pytest.fixture
def tri_star3():
    return triangle_star_graph(3)


@pytest.fixture
def claw():
    return star_graph(3)
