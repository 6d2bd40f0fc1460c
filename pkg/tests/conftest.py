import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qhrank import build_graph  # noqa: E402

FIG1_EDGES = [(1, 5, 1), (2, 4, 1), (4, 5, 1), (5, 3, 1), (6, 1, 1)]

# adjacency matrix L of the 6-node hierarchical example, rows are sources
FIG1_L = [
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
]


@pytest.fixture
def fig1():
    return build_graph(6, FIG1_EDGES)


@pytest.fixture
def fig1_tsv(tmp_path):
    path = tmp_path / "fig1.tsv"
    path.write_text("# nodes=6\n" + "".join(f"{s}\t{d}\t{w}\n" for s, d, w in FIG1_EDGES))
    return path


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
