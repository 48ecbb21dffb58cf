from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from strandgrade.algebra import ReebChord  # noqa: E402
from strandgrade.pmc import antipodal_pmc, split_pmc  # noqa: E402

DATA = Path(__file__).parent / "data"


def load(name: str):
    return json.loads((DATA / name).read_text())


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def torus():
    return split_pmc(1)


@pytest.fixture(scope="session")
def genus_two():
    return [split_pmc(2), antipodal_pmc(2)]


@st.composite
def strand_maps(draw, max_points: int = 6, points: int | None = None):
    """A random upward partial permutation as a dict."""
    n = points if points is not None else draw(st.integers(1, max_points))
    sources = draw(st.sets(st.integers(1, n), max_size=n))
    phi: dict[int, int] = {}
    used: set[int] = set()
    for s in sorted(sources, reverse=True):
        options = [t for t in range(s, n + 1) if t not in used]
        t = draw(st.sampled_from(options))
        phi[s] = t
        used.add(t)
    return n, phi


@st.composite
def segment_sequences(draw, num_points: int = 8, max_len: int = 5):
    """Chord sequences with distinct starts and distinct ends."""
    k = draw(st.integers(1, min(max_len, num_points - 1)))
    starts = draw(st.lists(st.integers(1, num_points - 1), min_size=k, max_size=k, unique=True))
    ends: list[int] = []
    for a in starts:
        options = [b for b in range(a + 1, num_points + 1) if b not in ends]
        if not options:
            break
        ends.append(draw(st.sampled_from(options)))
    return [ReebChord(a, b) for a, b in zip(starts, ends)]


# Collect acceptance outcomes so they are printed in the terminal summary
# even when pytest captures output.
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {key}: {detail}")
