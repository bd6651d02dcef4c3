import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from catherding.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=6, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    g = Graph(n, chosen)
    if connected and not g.is_connected():
        # join components along a spanning path of their lowest vertices
        reps = sorted(min(c) for c in g.components().sets)
        g = Graph(n, chosen + list(zip(reps, reps[1:])))
    return g


@pytest.fixture(scope="session")
def atlas6():
    from catherding.verify import connected_graphs

    return connected_graphs(6)


@pytest.fixture(scope="session")
def atlas5(atlas6):
    return [g for g in atlas6 if g.n <= 5]
