import itertools

import pytest
from hypothesis import strategies as st

from aso_extremal.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


@pytest.fixture(scope="session")
def small_connected():
    from aso_extremal.enumerate import connected_graphs

    return {n: connected_graphs(n) for n in range(3, 8)}


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
