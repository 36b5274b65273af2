from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nellrdf.fixtures import write_fixtures  # noqa: E402


@pytest.fixture(scope="session")
def corpus(tmp_path_factory):
    """Cached generated corpora keyed by (rows, seed)."""
    made = {}

    def make(rows: int, seed: int = 0) -> Path:
        if (rows, seed) not in made:
            out = tmp_path_factory.mktemp(f"corpus{rows}_{seed}")
            write_fixtures(out, rows, seed)
            made[(rows, seed)] = out
        return made[(rows, seed)]

    return make


ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def verdict(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash[ACCEPTANCE]

    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'} {label}" + (f" ({detail})" if detail else "")
        print(line)
        lines.append(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
