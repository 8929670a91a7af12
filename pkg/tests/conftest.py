import time
from contextlib import contextmanager

import pytest
from hypothesis import strategies as st

from tabij import EWTableau, Grid01, MarkedEWTableau, eta

ACCEPTANCE = []


@st.composite
def ew_tableaux(draw, max_m=7, max_n=13):
    """Staircase shape plus shuffles of the lower rows and of the columns."""
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    starts = sorted(draw(st.lists(st.integers(2, n + 1), min_size=m - 1, max_size=m - 1)))
    rows = [[1] * n] + [[int(j >= s) for j in range(1, n + 1)] for s in starts]
    lower = draw(st.permutations(rows[1:])) if m > 1 else []
    cols = draw(st.permutations(range(n)))
    rows = [rows[0]] + list(lower)
    return EWTableau(Grid01(tuple(tuple(r[j] for j in cols) for r in rows)))


@st.composite
def marked_tableaux(draw, max_m=5, max_n=6):
    t = draw(ew_tableaux(max_m, max_n))
    a = tuple(draw(st.integers(0, e - 1)) for e in eta(t))
    return MarkedEWTableau(t, a)


@pytest.fixture
def criterion(request):
    """Time a block, record PASS/FAIL for the summary, enforce the time bound."""
    @contextmanager
    def run(number, title, seconds):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            took = time.perf_counter() - start
            within = took < seconds
            ACCEPTANCE.append((number, title, ok and within, took, seconds))
        assert within, f"criterion {number} took {took:.2f}s, limit {seconds}s"
    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, took, limit in sorted(ACCEPTANCE):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"[{status}] {number:>2}. {title} ({took:.2f}s, limit {limit}s)")
