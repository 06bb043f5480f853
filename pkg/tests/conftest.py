import functools

import pytest

from convexcolor.core import build_dn
from convexcolor.exact import SmallGraph, chromatic_number_exact


@functools.lru_cache(maxsize=None)
def _oracle(n: int):
    g = build_dn(n)
    return g, chromatic_number_exact(SmallGraph(g.adj), time_budget=120)


@pytest.fixture(scope="session")
def oracle_result():
    """(DnGraph, ChromaticResult) per n, computed once per session."""
    return _oracle
