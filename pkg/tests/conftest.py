import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from gf2reduce import BitMatrix, Graph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def bit_matrices(draw, max_rows=6, max_cols=6, square=False):
    r = draw(st.integers(0, max_rows))
    c = r if square else draw(st.integers(0, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return BitMatrix.from_packed_rows(rows, c)


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.integers(0, 1), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2))
    rows = [0] * n
    t = 0
    for i in range(n):
        for j in range(i, n):
            if bits[t]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            t += 1
    return Graph([f"v{i + 1}" for i in range(n)], BitMatrix.from_packed_rows(rows, n))


@st.composite
def graph_and_subset(draw, min_n=0, max_n=7):
    g = draw(graphs(min_n, max_n))
    w = draw(st.lists(st.sampled_from(g.labels), unique=True)) if len(g) else []
    return g, w


# Example graphs shared across modules ---------------------------------------------

TRI = [[1, 1, 1], [1, 1, 0], [1, 0, 1]]
SING3 = [[1, 0, 0], [0, 1, 1], [0, 1, 1]]
SING3_PIVOT = [[1, 0, 0], [0, 1, 1], [0, 1, 0]]
FIVE = ["10011", "01111", "01100", "11011", "11010"]
FIVE_INV = ["11100", "10010", "10110", "01111", "00011"]


@pytest.fixture
def tri():
    return Graph(["v1", "v2", "v3"], BitMatrix(TRI))


@pytest.fixture
def singular3():
    return Graph.from_matrix(SING3)


@pytest.fixture
def five():
    return Graph(["v1", "v2", "v3", "v4", "v5"], BitMatrix(FIVE))


# Acceptance summary --------------------------------------------------------------

ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, seconds, limit in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {name} ({seconds:.3f} s, limit {limit} s)")
