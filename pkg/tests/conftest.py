import numpy as np
import pytest

from sociogrow.formats import builtin_zachary
from sociogrow.graph import Graph

from acceptance_report import RESULTS


@pytest.fixture(scope="session")
def zachary():
    return builtin_zachary()


def graph_from_adjacency(adj) -> Graph:
    n = len(adj)
    g = Graph(n)
    for i, j in zip(*np.nonzero(np.triu(adj, k=1))):
        g.add_edge(int(i), int(j))
    return g


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        status, detail = RESULTS[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {detail}")
