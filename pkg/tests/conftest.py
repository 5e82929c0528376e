from __future__ import annotations

import itertools
import random
import time

import networkx as nx
import pytest

from indumatch.graph import Graph

# Brute force over edge subsets, using networkx distances only.  Independent
# of the package's own cover computations.


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(mapping), [(mapping[u], mapping[v]) for u, v in h.edges()])


def brute_edge_distances(g: Graph) -> list[list[float]]:
    dist = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    inf = float("inf")

    def d(a, b):
        return dist[a].get(b, inf)

    m = g.m
    out = [[0.0] * m for _ in range(m)]
    for i, (a, b) in enumerate(g.edges):
        for j, (c, e) in enumerate(g.edges):
            out[i][j] = min(d(a, c), d(a, e), d(b, c), d(b, e))
    return out


def brute_maximal_induced(g: Graph) -> set[tuple[int, ...]]:
    """All maximal induced matchings by checking every edge subset."""
    m = g.m
    dist = brute_edge_distances(g)
    found = set()
    for size in range(m + 1):
        for subset in itertools.combinations(range(m), size):
            if any(dist[a][b] < 2 for a, b in itertools.combinations(subset, 2)):
                continue
            if all(any(dist[e][f] <= 1 for f in subset) for e in range(m)):
                found.add(subset)
    return found


def brute_sizes(g: Graph) -> set[int]:
    return {len(s) for s in brute_maximal_induced(g)}


def atlas_graphs(max_n: int = 7, connected: bool = False, min_n: int = 1) -> list[Graph]:
    out = []
    for h in nx.graph_atlas_g():
        if not (min_n <= h.number_of_nodes() <= max_n):
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(from_nx(h))
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture(scope="session")
def small_graphs() -> list[Graph]:
    """Every graph on 1..7 vertices up to isomorphism, plus random 8 and 9 vertex graphs."""
    rng = random.Random(7)
    extra = [random_graph(n, rng.choice((0.2, 0.3, 0.45)), rng) for n in (8, 9) for _ in range(60)]
    return atlas_graphs(7) + extra


# Acceptance reporting -------------------------------------------------------

_ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    item.user_properties.append(("elapsed", time.perf_counter() - start))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    elapsed = dict(item.user_properties).get("elapsed", 0.0)
    _ACCEPTANCE[number] = ("PASS" if report.passed else "FAIL", title, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, elapsed = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}  ({elapsed:.2f} s)")
    terminalreporter.write_line("criterion 10: N/A   complexity-theoretic hardness claims, out of scope")
