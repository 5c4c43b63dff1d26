import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from dicritical import Digraph  # noqa: E402

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, text = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[number] = ("PASS" if report.passed else "FAIL", text)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, text = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status} - {text}")


@st.composite
def digraphs(draw, min_n=1, max_n=6, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    if density is None:
        chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return Digraph(n, [p for p, keep in zip(pairs, chosen) if keep])
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return Digraph(n, [p for p in pairs if rng.random() < density])


def random_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def random_semicomplete(rng: random.Random, n: int, digon_p: float = 0.2) -> Digraph:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            r = rng.random()
            if r < digon_p:
                arcs += [(u, v), (v, u)]
            elif r < (1 + digon_p) / 2:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
    return Digraph(n, arcs)
