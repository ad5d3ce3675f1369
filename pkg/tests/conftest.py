from hypothesis import strategies as st

from qbounds.graph import Graph, _pair_indices


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    rows, cols = _pair_indices(n)
    bits = draw(st.lists(st.booleans(), min_size=len(rows), max_size=len(rows)))
    return Graph(n, [(int(i), int(j)) for i, j, b in zip(rows, cols, bits) if b])


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
