"""Shared fixtures and the acceptance-summary hook.

The acceptance tests record one line per criterion; the terminal-summary
hook replays them at the end of the run so they are visible even though
pytest captures stdout for passing tests.
"""

from __future__ import annotations

import pytest

from textfract import TURKISH, letter_histogram, normalize
from textfract.datasets import snow_letter_counts

ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _criterion_number(line: str) -> int:
    return int(line.split("]")[0].split()[-1])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=_criterion_number):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def snow():
    return snow_letter_counts()


@pytest.fixture
def hist_of():
    def make(raw: str):
        return letter_histogram(normalize(raw, TURKISH))

    return make


@pytest.fixture
def corpus_factory(tmp_path):
    """Write a UTF-8 text file under the test's tmp dir and return its path."""

    def make(text: str, name: str = "corpus.txt", encoding: str = "utf-8"):
        p = tmp_path / name
        p.write_bytes(text.encode(encoding))
        return p

    return make
