import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from simug import Edge, EdgeKind, NetworkModelSpec, build_extended_graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

P, F = EdgeKind.PARAMETRIZED, EdgeKind.FIXED

# 3-cycle, the last edge fixed
FIXTURE_A = NetworkModelSpec(3, 0, ((1, 2, P), (2, 3, P), (3, 1, F)))

# cycle w5 -> w1 -> w4 -> w2 -> w3 -> w5 in which 1->4 and 3->5 are fixed
FIXTURE_B = NetworkModelSpec(5, 0, ((5, 1, P), (1, 4, F), (4, 2, P), (2, 3, P), (3, 5, F)))

# two parametrized 2-cycles {1,6} and {7,8} feeding a chain 2 -> 3 -> 4
# through fixed bridges
FIXTURE_C = NetworkModelSpec(8, 0, (
    (1, 6, P), (6, 1, P), (7, 8, P), (8, 7, P),
    (1, 2, F), (1, 5, F), (1, 3, F), (2, 3, P),
    (5, 3, F), (8, 3, F), (3, 4, P), (7, 4, F),
))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fixture_a():
    return build_extended_graph(FIXTURE_A)


@pytest.fixture
def fixture_b():
    return build_extended_graph(FIXTURE_B)


@st.composite
def network_specs(draw, max_nodes=6, max_noise=2, max_vertices=8):
    """Small random model sets with mixed edge kinds and some excited nodes."""
    L = draw(st.integers(2, max_nodes))
    p = draw(st.integers(0, min(max_noise, max_vertices - L)))
    pairs = [(a, b) for a in range(1, L + 1) for b in range(1, L + 1) if a != b]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 3 * L)))
    module = tuple(Edge(a, b, draw(st.sampled_from((P, F)))) for a, b in chosen)
    noise = []
    for s in range(L + 1, L + p + 1):
        heads = draw(st.lists(st.integers(1, L), unique=True, min_size=1, max_size=2))
        noise.extend(Edge(s, h, draw(st.sampled_from((P, F)))) for h in heads)
    excited = draw(st.frozensets(st.integers(1, L), max_size=2))
    return NetworkModelSpec(L, p, module, tuple(noise), excited)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
