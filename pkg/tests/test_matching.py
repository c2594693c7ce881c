from hypothesis import given, strategies as st

from oracle import brute_hall_ok, brute_max_matching
from packdual import BipartiteGraph, hall_violator, max_matching


@st.composite
def bipartite(draw, max_total=10):
    left = draw(st.integers(0, max_total))
    right = draw(st.integers(0, max_total - left))
    pairs = [(x, y) for x in range(left) for y in range(right)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=14)) if pairs else []
    return BipartiteGraph(left, right, tuple(edges))


def test_empty():
    m = max_matching(BipartiteGraph(0, 0))
    assert m.pairs == () and m.saturates_left


def test_identity():
    m = max_matching(BipartiteGraph(2, 2, ((0, 0), (1, 1))))
    assert len(m) == 2 and m.saturates_left


def test_three_into_one():
    m = max_matching(BipartiteGraph(3, 1, ((0, 0), (1, 0), (2, 0))))
    assert len(m) == 1 and not m.saturates_left


def test_needs_augmentation():
    # greedy 0->0 blocks 1 unless the path 1-0-0-1 is used
    m = max_matching(BipartiteGraph(2, 2, ((0, 0), (0, 1), (1, 0))))
    assert sorted(m.pairs) == [(0, 1), (1, 0)]


def test_hall_none_when_perfect():
    assert hall_violator(BipartiteGraph(2, 2, ((0, 0), (1, 1)))) is None


def test_hall_pigeonhole():
    b = BipartiteGraph(2, 1, ((0, 0), (1, 0)))
    s = hall_violator(b)
    assert s == {0, 1} and b.neighborhood(s) == {0}


def test_hall_three_left():
    b = BipartiteGraph(3, 2, ((0, 0), (1, 0), (2, 0)))
    s = hall_violator(b)
    assert len(s) >= 2 and s <= {0, 1, 2} and b.neighborhood(s) == {0}


def test_isolated_left_vertex():
    b = BipartiteGraph(2, 1, ((0, 0),))
    assert hall_violator(b) == {1}


@given(bipartite())
def test_valid_and_maximum(b):
    m = max_matching(b)
    lefts = [x for x, _ in m.pairs]
    rights = [y for _, y in m.pairs]
    assert len(set(lefts)) == len(lefts) and len(set(rights)) == len(rights)
    assert set(m.pairs) <= set(b.edges)
    assert len(m) == brute_max_matching(b.left_n, b.right_n, b.edges)
    assert m.saturates_left == (len(m) == b.left_n)


@given(bipartite())
def test_hall_duality(b):
    s = hall_violator(b)
    m = max_matching(b)
    assert (s is None) == m.saturates_left == brute_hall_ok(b.left_n, b.edges)
    if s is not None:
        assert len(s) > len(b.neighborhood(s))


@given(bipartite())
def test_deterministic(b):
    assert max_matching(b) == max_matching(b)
