"""Instance types, closed neighborhoods and feasibility predicates.

Vertices, edges, universe elements and sets are all dense 0-based indices.
Neighborhoods are exposed as sorted tuples; internally they are also cached
as Python ints used as bitsets, which is what the solvers work on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "Graph",
    "SetSystem",
    "VertexPacking",
    "EdgePacking",
    "SetPacking",
    "ElementPacking",
    "closed_nbhd_vertex",
    "closed_nbhd_edge",
    "is_vertex_packing",
    "is_edge_packing",
    "is_set_packing",
    "is_element_packing",
    "line_graph",
    "closed_nbhd_hypergraph",
    "mask_of",
    "bits",
]


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` keeps the caller's order (edge ids are positions), but each
    pair is stored as ``(min, max)``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        norm = []
        for idx, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {idx} ({u}, {v}) has an endpoint outside [0, {self.n})")
            if u == v:
                raise InputError(f"edge {idx} is a self-loop on vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise InputError(f"edge {idx} duplicates {pair}")
            seen.add(pair)
            norm.append(pair)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {pair: e for e, pair in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def vertex_nbhd_masks(self) -> tuple[int, ...]:
        return tuple((1 << v) | mask_of(self.adjacency[v]) for v in range(self.n))

    @cached_property
    def edge_nbhd_masks(self) -> tuple[int, ...]:
        inc = [mask_of(x) for x in self.incident_edges]
        return tuple(inc[u] | inc[v] for u, v in self.edges)

    def canonical(self) -> Graph:
        """Same graph with edges sorted by ``(min endpoint, max endpoint)``."""
        return Graph(self.n, tuple(sorted(self.edges)))


@dataclass(frozen=True)
class SetSystem:
    """Universe ``0..n-1`` plus a positional list of subsets.

    Duplicate sets are allowed; empty sets are allowed until ``normalize``.
    """

    n: int
    sets: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"universe size must be non-negative, got {self.n}")
        norm = []
        for j, s in enumerate(self.sets):
            s = tuple(sorted(int(a) for a in s))
            for a in s:
                if not 0 <= a < self.n:
                    raise InputError(f"set {j} contains element {a} outside [0, {self.n})")
            if len(set(s)) != len(s):
                raise InputError(f"set {j} contains a duplicate element")
            norm.append(s)
        object.__setattr__(self, "sets", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def is_normalized(self) -> bool:
        return all(self.sets)

    @property
    def covers_universe(self) -> bool:
        """True when every element lies in at least one set."""
        return all(self.memberships)

    def normalize(self) -> tuple[SetSystem, tuple[int, ...]]:
        """Drop empty sets.

        Returns the normalized system and, for each surviving set, its index
        in ``self``.
        """
        kept = tuple(j for j, s in enumerate(self.sets) if s)
        return SetSystem(self.n, tuple(self.sets[j] for j in kept)), kept

    @cached_property
    def memberships(self) -> tuple[tuple[int, ...], ...]:
        """For each element, the sorted ids of the sets containing it."""
        mem: list[list[int]] = [[] for _ in range(self.n)]
        for j, s in enumerate(self.sets):
            for a in s:
                mem[a].append(j)
        return tuple(tuple(x) for x in mem)

    @cached_property
    def set_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(s) for s in self.sets)

    @cached_property
    def membership_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(x) for x in self.memberships)


@dataclass(frozen=True)
class _Packing:
    ids: tuple[int, ...] = field(default=())

    def __post_init__(self):
        raw = [int(i) for i in self.ids]
        ids = tuple(sorted(set(raw)))
        if len(ids) != len(raw):
            raise InputError("packing contains a repeated id")
        object.__setattr__(self, "ids", ids)

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self):
        return iter(self.ids)


class VertexPacking(_Packing):
    """Vertex ids with pairwise disjoint closed neighborhoods."""

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.ids


class EdgePacking(_Packing):
    """Edge ids with pairwise disjoint closed edge neighborhoods."""

    @property
    def edges(self) -> tuple[int, ...]:
        return self.ids


class SetPacking(_Packing):
    """Ids of pairwise disjoint sets."""

    @property
    def set_ids(self) -> tuple[int, ...]:
        return self.ids


class ElementPacking(_Packing):
    """Universe elements no two of which lie in a common set."""

    @property
    def elements(self) -> tuple[int, ...]:
        return self.ids


def _check_ids(ids: Iterable[int], bound: int, what: str) -> list[int]:
    out = sorted(set(int(i) for i in ids))
    for i in out:
        if not 0 <= i < bound:
            raise InputError(f"{what} {i} out of range [0, {bound})")
    return out


def _pairwise_disjoint(masks: Sequence[int]) -> bool:
    acc = 0
    for mk in masks:
        if acc & mk:
            return False
        acc |= mk
    return True


def closed_nbhd_vertex(g: Graph, v: int) -> tuple[int, ...]:
    """``{v}`` together with the neighbors of ``v``, sorted."""
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range [0, {g.n})")
    return tuple(sorted((v,) + g.adjacency[v]))


def closed_nbhd_edge(g: Graph, e: int) -> tuple[int, ...]:
    """Edge ``e`` together with every edge sharing an endpoint with it, sorted."""
    if not 0 <= e < g.m:
        raise InputError(f"edge {e} out of range [0, {g.m})")
    u, v = g.edges[e]
    return tuple(sorted(set(g.incident_edges[u]) | set(g.incident_edges[v])))


def is_vertex_packing(g: Graph, sol: Iterable[int]) -> bool:
    ids = _check_ids(sol, g.n, "vertex")
    return _pairwise_disjoint([g.vertex_nbhd_masks[v] for v in ids])


def is_edge_packing(g: Graph, sol: Iterable[int]) -> bool:
    ids = _check_ids(sol, g.m, "edge")
    return _pairwise_disjoint([g.edge_nbhd_masks[e] for e in ids])


def is_set_packing(t: SetSystem, sol: Iterable[int]) -> bool:
    ids = _check_ids(sol, t.m, "set")
    return _pairwise_disjoint([t.set_masks[j] for j in ids])


def is_element_packing(t: SetSystem, sol: Iterable[int], strict: bool = False) -> bool:
    """Feasibility for SC-bar: no member of ``t.sets`` holds two selected elements.

    With ``strict=True`` every selected element must additionally occur in
    at most one set. That reading is kept for completeness; the reductions
    and solvers all use the default one.
    """
    ids = _check_ids(sol, t.n, "element")
    mem = t.membership_masks
    if strict and any(mem[a] & (mem[a] - 1) for a in ids):
        return False
    return _pairwise_disjoint([mem[a] for a in ids])


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` of the result is edge ``i`` of ``g``; adjacent iff the edges share an endpoint."""
    pairs = set()
    for inc in g.incident_edges:
        for e, f in combinations(inc, 2):
            pairs.add((e, f) if e < f else (f, e))
    return Graph(g.m, tuple(sorted(pairs)))


def closed_nbhd_hypergraph(g: Graph) -> SetSystem:
    """Universe = vertices of ``g``; set ``i`` is the closed neighborhood of vertex ``i``."""
    return SetSystem(g.n, tuple(closed_nbhd_vertex(g, v) for v in range(g.n)))
