import pytest

from etcs.core import SetObj
from etcs.values import Atom


def atom_set(names: str) -> SetObj:
    return SetObj(Atom(c) for c in names.split())


def sizes_upto(n: int, pool: str = "abcdef") -> list[SetObj]:
    return [SetObj(Atom(c) for c in pool[:k]) for k in range(n + 1)]


@pytest.fixture
def S():
    return atom_set


ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
