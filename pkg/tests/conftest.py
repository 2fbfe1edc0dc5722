import itertools
import random

import pytest

from wcdim.graph import Graph


def random_graph(rng: random.Random, order: int, density: float | None = None) -> Graph:
    if density is None:
        density = rng.random()
    edges = [(u, v) for u, v in itertools.combinations(range(order), 2) if rng.random() < density]
    return Graph.from_edges(order, edges)


def all_labelled_graphs(order: int):
    pairs = list(itertools.combinations(range(order), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(order, [p for i, p in enumerate(pairs) if bits >> i & 1])


def isomorphic(g: Graph, h: Graph) -> bool:
    """Brute force over all vertex permutations."""
    if g.order != h.order or g.num_edges() != h.num_edges():
        return False
    target = set(h.edges())
    for perm in itertools.permutations(range(g.order)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges()):
            return True
    return False


@pytest.fixture
def rng():
    return random.Random(20240601)


# one summary line per acceptance criterion
_CRITERIA: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[rep.outcome]
        _CRITERIA[n] = (title, status, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, status, secs = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:>2} {status}  {title} ({secs:.2f}s)")
