from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rainbowdom.graph import Graph

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=5, max_edges=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)) if pairs else []
    return Graph(n, tuple(chosen))


def small_middle_graphs(max_elements=8):
    """Graphs whose middle graph has at most ``max_elements`` vertices."""
    return graphs(min_n=1, max_n=5).filter(lambda g: g.order + g.m <= max_elements)


def tree_strategy(min_n=1, max_n=10):
    from rainbowdom.graph import generate

    return st.builds(
        lambda n, seed: generate("random_tree", n, seed=seed),
        st.integers(min_n, max_n),
        st.integers(0, 2**64 - 1),
    )


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    reports = [
        r
        for key in ("passed", "failed")
        for r in terminalreporter.stats.get(key, [])
        if r.when == "call" and "test_acceptance.py::test_criterion_" in r.nodeid
    ]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: int(r.nodeid.split("test_criterion_")[1].split("_")[0])):
        number = int(r.nodeid.split("test_criterion_")[1].split("_")[0])
        status = "PASS" if r.passed else "FAIL"
        title = ACCEPTANCE_LINES.get(number, r.nodeid.split("::")[-1])
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
