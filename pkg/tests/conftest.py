from hypothesis import strategies as st

from lrtensor import Partition


@st.composite
def partition_st(draw, n=None, max_part=6, max_n=4):
    if n is None:
        n = draw(st.integers(1, max_n))
    parts = draw(st.lists(st.integers(0, max_part), min_size=n, max_size=n))
    return Partition(tuple(sorted(parts, reverse=True)))


ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
