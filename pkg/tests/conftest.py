import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from packdual import Graph, SetSystem  # noqa: E402


def path(n):
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n):
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(leaves):
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


@st.composite
def setsystems(draw, max_n=6, max_m=5, allow_empty=False):
    n = draw(st.integers(1, max_n))
    min_size = 0 if allow_empty else 1
    sets = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=min_size, max_size=n), max_size=max_m))
    return SetSystem(n, tuple(tuple(sorted(s)) for s in sets))


@pytest.fixture
def worked():
    """U={0,1,2}, S={{0,1},{1,2}}: the running example."""
    return SetSystem(3, ((0, 1), (1, 2)))
