from __future__ import annotations

import pytest

from graphricci.graph import generate

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion; printed in the summary."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append(f"criterion {number}: {status}  {title}" + (f"  ({detail})" if detail else ""))
        print(_ACCEPTANCE_LINES[-1])

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def graphs():
    from oracles import SUITE

    return {name: generate(name) for name in SUITE}
