"""Seeded instance generators and the small exhaustive instance families.

Randomness comes from :class:`random.Random`, i.e. MT19937 seeded with the
given integer, and is consumed in a fixed order:

* ``gen_gnp``: one ``random()`` draw per vertex pair ``(i, j)``, ``i < j``,
  in lexicographic order; the edge is kept when the draw is ``< p``.
* ``gen_setsystem``: per set, ``randint(1, max_set_size)`` for the size, then
  ``sample(range(n), size)`` for its elements.
"""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterator

from .errors import InputError
from .model import Graph, SetSystem, bits

ATLAS_MAX_N = 7


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    if n < 0:
        raise InputError(f"n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InputError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = tuple((i, j) for i, j in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, edges)


def gen_setsystem(n: int, m: int, max_set_size: int, seed: int) -> SetSystem:
    if n < 1 or m < 0:
        raise InputError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if not 1 <= max_set_size <= n:
        raise InputError(f"max_set_size must lie in [1, {n}], got {max_set_size}")
    rng = random.Random(seed)
    sets = []
    for _ in range(m):
        size = rng.randint(1, max_set_size)
        sets.append(tuple(sorted(rng.sample(range(n), size))))
    return SetSystem(n, tuple(sets))


def canonical_setsystems(max_n: int, max_m: int) -> Iterator[SetSystem]:
    """Every normalized set system with ``n <= max_n`` and ``m <= max_m``, once per
    isomorphism class (element relabeling and set reordering)."""
    for n in range(max_n + 1):
        masks = range(1, 1 << n)
        tables = []
        for perm in permutations(range(n)):
            tables.append([sum(1 << perm[a] for a in bits(x)) for x in range(1 << n)])
        for m in range(max_m + 1):
            seen = set()
            for combo in combinations_with_replacement(masks, m):
                key = min(tuple(sorted(tb[x] for x in combo)) for tb in tables)
                if key in seen:
                    continue
                seen.add(key)
                yield SetSystem(n, tuple(tuple(bits(x)) for x in key))


def all_graphs(max_n: int) -> Iterator[Graph]:
    """Every graph on at most ``max_n`` vertices up to isomorphism (``max_n <= 7``)."""
    if max_n > ATLAS_MAX_N:
        raise InputError(f"exhaustive graph enumeration stops at {ATLAS_MAX_N} vertices")
    from networkx.generators.atlas import graph_atlas_g

    for h in graph_atlas_g():
        if h.number_of_nodes() > max_n:
            break
        yield Graph(h.number_of_nodes(), tuple(sorted((min(u, v), max(u, v)) for u, v in h.edges())))


def random_setsystems(count: int, max_n: int, max_m: int, seed: int) -> Iterator[SetSystem]:
    """``count`` seeded systems with ``1 <= n <= max_n``, ``0 <= m <= max_m``."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max(1, max_n))
        m = rng.randint(0, max_m)
        yield gen_setsystem(n, m, rng.randint(1, n), rng.getrandbits(32))


def random_graphs(count: int, max_n: int, seed: int) -> Iterator[Graph]:
    """``count`` seeded G(n, p) graphs with ``0 <= n <= max_n`` and uniform ``p``."""
    rng = random.Random(seed)
    for _ in range(count):
        yield gen_gnp(rng.randint(0, max_n), rng.random(), rng.getrandbits(32))
