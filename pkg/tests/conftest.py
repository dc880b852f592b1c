import pytest

from kclique import Graph, parse_dimacs

# 1-based edge set of the eight-vertex example graph used throughout.
FIGURE1_EDGES = [
    (1, 2), (1, 5), (1, 8), (2, 3), (2, 4), (2, 5),
    (2, 8), (3, 7), (4, 5), (5, 6), (5, 8), (6, 7),
]

FIGURE1_DIMACS = "c example graph\np edge 8 12\n" + "".join(
    f"e {u} {v}\n" for u, v in FIGURE1_EDGES
)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves, centre=0):
    n = leaves + 1
    return Graph.from_edges(n, [(centre, v) for v in range(n) if v != centre])


@pytest.fixture
def figure1():
    return parse_dimacs(FIGURE1_DIMACS)


@pytest.fixture
def figure1_file(tmp_path):
    path = tmp_path / "figure1.clq"
    path.write_text(FIGURE1_DIMACS)
    return path


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _criteria.append((marker.args[0], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
