import functools

import pytest

from superz.report import table_report

ACCEPTANCE_LINES = []


@functools.lru_cache(maxsize=None)
def reports(alg_id: str) -> tuple:
    """Serial table reports, computed once per session."""
    return tuple(table_report(alg_id, serial=True))


@pytest.fixture(scope="session")
def all_reports():
    return {a: reports(a) for a in ("d21", "g3", "f4")}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
