import functools
import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from divshadow.fileio import load  # noqa: E402
from divshadow.fixtures import chebyshev, free_divides  # noqa: E402
from divshadow.pipeline import run, run_free  # noqa: E402

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
TORUS = [(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5)]


@functools.lru_cache(maxsize=None)
def torus_result(p, q):
    return run(chebyshev(p, q))


@functools.lru_cache(maxsize=None)
def free_results():
    return [(w, t, d, run_free(d, strict=False)) for w, t, d in free_divides(2)]


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / name


@pytest.fixture
def trefoil():
    return load(FIXTURES / "trefoil.div")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary():
        terminalreporter.write_line(line)
