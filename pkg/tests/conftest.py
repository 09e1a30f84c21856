import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import A1, REDUCED5  # noqa: E402
from parastrophe import LatinSquare  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def a1():
    return LatinSquare(A1)


@pytest.fixture
def reduced5():
    return LatinSquare(REDUCED5)


CRITERIA: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
