import os
import random
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from glpt.corpus import generate_connected  # noqa: E402
from glpt.graph import Graph  # noqa: E402

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def corpus6():
    return [g for n in range(1, 7) for g in generate_connected(n)]


@pytest.fixture(scope="session")
def corpus7():
    return [g for n in range(1, 8) for g in generate_connected(n)]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        g = random_graph(n, p, rng)
        if g.is_connected():
            return g


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
