import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from balcheck.corpus import random_diamond_free_graph
from balcheck.graph_core import Graph, cycle_with_cliques


@pytest.fixture(scope="session")
def c9_triangle() -> Graph:
    return cycle_with_cliques(9, [[0, 3, 6]])


@pytest.fixture(scope="session")
def small_random_graphs() -> list[Graph]:
    """Seeded general graphs with n <= 8 for oracle cross-checks."""
    rng = random.Random(90125)
    out = []
    for n in range(1, 9):
        for _ in range(6):
            p = rng.choice([0.2, 0.4, 0.6, 0.8])
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < p
            ]
            out.append(Graph.from_edges(n, edges))
    return out


@pytest.fixture(scope="session")
def small_diamond_free_graphs() -> list[Graph]:
    rng = random.Random(1127)
    out = []
    for n in range(4, 11):
        for _ in range(4):
            out.append(random_diamond_free_graph(rng, n, rng.choice([0.25, 0.4, 0.55])))
    return out
