import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from topsnut.graphs import Graph


@pytest.fixture
def rng():
    return random.Random(20170401)


@pytest.fixture
def k2():
    return Graph(2, [(0, 1)])


@pytest.fixture
def p3():
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def k3():
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4():
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def star4():
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def random_connected_graph(rnd, p, extra_edges=2):
    """Random tree plus a few extra edges; used by the property loops."""
    edges = set()
    for v in range(1, p):
        edges.add((rnd.randrange(v), v))
    attempts = 0
    while extra_edges > 0 and attempts < 50:
        attempts += 1
        u, v = rnd.randrange(p), rnd.randrange(p)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e not in edges:
            edges.add(e)
            extra_edges -= 1
    return Graph(p, sorted(edges))


def random_tree(rnd, p):
    return random_connected_graph(rnd, p, extra_edges=0)
