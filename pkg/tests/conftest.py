import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tensor_degree.catalog import catalog_group  # noqa: E402
from tensor_degree.tensor import build  # noqa: E402


@functools.lru_cache(maxsize=None)
def group(expr):
    return catalog_group(expr)


@functools.lru_cache(maxsize=None)
def square(expr):
    """Exterior data for H = K = G."""
    G = group(expr)
    return build(G, G.whole, G.whole)


@pytest.fixture
def S3():
    return group("S3")


@pytest.fixture
def Q8():
    return group("Q8")


# acceptance-criterion outcomes, filled in by tests/test_acceptance.py
ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE[key]:4}  criterion {key}")
