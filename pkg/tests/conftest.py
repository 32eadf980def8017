import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from antivdw.graph_core import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, nmin=1, nmax=7, connected=False):
    n = draw(st.integers(nmin, nmax))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if connected:
        # hang a random spanning tree underneath
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            if (u, v) not in chosen:
                chosen.append((u, v))
    return Graph.from_edges(n, chosen)


@pytest.fixture
def rng():
    return random.Random(0)


_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
