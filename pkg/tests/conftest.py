import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from blockpath.canon import digraph_from_states
from blockpath.digraph import GENERAL, ORIENTED

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=30, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def digraphs(draw, min_order=0, max_order=7, mode=None):
    """Digraphs drawn pair by pair; each unordered pair gets a state in
    {absent, forward, backward, both}, with ``both`` only in general mode."""
    n = draw(st.integers(min_order, max_order))
    m = draw(st.sampled_from([ORIENTED, GENERAL])) if mode is None else mode
    top = 3 if m == GENERAL else 2
    pairs = n * (n - 1) // 2
    states = draw(st.lists(st.integers(0, top), min_size=pairs, max_size=pairs))
    return digraph_from_states(n, states, m)


@st.composite
def tournaments(draw, min_order=1, max_order=7):
    n = draw(st.integers(min_order, max_order))
    pairs = n * (n - 1) // 2
    states = draw(st.lists(st.integers(1, 2), min_size=pairs, max_size=pairs))
    return digraph_from_states(n, states, ORIENTED)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
