from __future__ import annotations

import pytest

D0_ROWS = [[6, 6, 6, 4, 2], [5, 3, 2, 1], [2]]

ASM5 = [
    [0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [1, -1, 0, 1, 0],
    [0, 1, 0, -1, 1],
    [0, 0, 0, 1, 0],
]

SIGMA6 = (3, 5, 2, 4, 6, 1)

SIGMA6_MATRIX = [
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0],
]


def brute_asm_inversions(m: list[list[int]]) -> int:
    """Four nested loops over i < k, l < j of A[i][j] * A[k][l]."""
    n = len(m)
    total = 0
    for i in range(n):
        for j in range(n):
            for k in range(i + 1, n):
                for l in range(j):
                    total += m[i][j] * m[k][l]
    return total


@pytest.fixture
def d0_rows():
    return [list(r) for r in D0_ROWS]


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
