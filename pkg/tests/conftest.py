import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def corpus():
    """The published interaction corpus, if CHARNET_CORPUS points at it."""
    root = os.environ.get("CHARNET_CORPUS")
    if not root:
        pytest.skip("dataset not available: set CHARNET_CORPUS (and optionally CHARNET_SLICES)")
    from charnet import load_corpus

    return load_corpus(root, os.environ.get("CHARNET_SLICES"), os.environ.get("CHARNET_SEP", "\t"))


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        outcome = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _acceptance.append((report.nodeid.split("::", 1)[1], outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome:4}  {name}")
