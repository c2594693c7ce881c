"""Instance transforms between the four packing problems, with solution maps.

Routes:

* ``scbar-sp``  element packing <-> set packing (transpose construction;
  the same transform serves both directions)
* ``scbar-ep``  element packing -> edge packing
* ``scbar-vp``  element packing -> vertex packing
* ``vp-scbar``  vertex packing -> element packing (closed-neighborhood hypergraph)
* ``ep-vp``     edge packing -> vertex packing (line graph)

Every solution map checks feasibility of its input, raises
:class:`ContractViolation` if it fails, and returns a packing of the same
cardinality. Constructed graphs put element vertices first
(``0..n-1``) and set vertices after them (``n..n+m-1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import ContractViolation, InputError, InvariantViolation
from .matching import BipartiteGraph, max_matching
from .model import (
    EdgePacking,
    ElementPacking,
    Graph,
    SetPacking,
    SetSystem,
    VertexPacking,
    closed_nbhd_hypergraph,
    is_edge_packing,
    is_element_packing,
    is_set_packing,
    is_vertex_packing,
    line_graph,
)

ROUTES = ("scbar-sp", "scbar-ep", "scbar-vp", "vp-scbar", "ep-vp")


def _require_normalized(t: SetSystem) -> None:
    if not t.is_normalized:
        raise InputError("set system contains empty sets; call normalize() first")


def _ids(sol: Iterable[int]) -> list[int]:
    return sorted(int(i) for i in sol)


# -- element packing <-> set packing ---------------------------------------


@dataclass(frozen=True)
class ScToSetPackingWitness:
    source: SetSystem
    target: SetSystem


def sc_to_set_packing(t: SetSystem) -> ScToSetPackingWitness:
    """Transpose: target universe = set ids of ``t``, target set ``i`` = memberships of element ``i``.

    An element lying in no set becomes an empty target set.
    """
    _require_normalized(t)
    return ScToSetPackingWitness(t, SetSystem(t.m, t.memberships))


def map_sets_to_elements(w: ScToSetPackingWitness, sp: Iterable[int]) -> ElementPacking:
    ids = _ids(sp)
    if not is_set_packing(w.target, ids):
        raise ContractViolation("input is not a set packing of the target")
    out = ElementPacking(ids)
    if not is_element_packing(w.source, out):
        raise InvariantViolation("mapped elements are not an element packing")
    return out


def map_elements_to_sets(w: ScToSetPackingWitness, ep: Iterable[int]) -> SetPacking:
    ids = _ids(ep)
    if not is_element_packing(w.source, ids):
        raise ContractViolation("input is not an element packing of the source")
    out = SetPacking(ids)
    if not is_set_packing(w.target, out):
        raise InvariantViolation("mapped sets are not a set packing")
    return out


# -- element packing -> edge packing ----------------------------------------


class EdgeTag(NamedTuple):
    """Origin of an edge in the element/set graph.

    ``kind`` is ``"ee"`` (``other`` is an element) or ``"es"`` (``other`` is a set id).
    """

    kind: str
    element: int
    other: int


@dataclass(frozen=True)
class ScToEdgePackingWitness:
    source: SetSystem
    target: Graph
    tags: tuple[EdgeTag, ...]

    @cached_property
    def incidence_edge(self) -> dict[tuple[int, int], int]:
        """``(element, set id) -> edge id`` for element-set edges."""
        return {(tg.element, tg.other): e for e, tg in enumerate(self.tags) if tg.kind == "es"}


def sc_to_edge_packing(t: SetSystem) -> ScToEdgePackingWitness:
    """Graph on elements and sets: element pairs sharing a set are joined, and
    each element is joined to every set containing it.

    Requires every element to be covered by some set; an uncovered element
    is free in the source but isolated in the graph, which breaks the size
    equivalence.
    """
    _require_normalized(t)
    if not t.covers_universe:
        missing = [a for a, mem in enumerate(t.memberships) if not mem]
        raise InputError(f"elements {missing} lie in no set; this route needs a covering system")
    n = t.n
    pairs: set[tuple[int, int]] = set()
    for s in t.sets:
        pairs.update(combinations(s, 2))
    tagged = [((i, j), EdgeTag("ee", i, j)) for i, j in pairs]
    tagged += [((a, n + p), EdgeTag("es", a, p)) for p, s in enumerate(t.sets) for a in s]
    tagged.sort()
    g = Graph(n + t.m, tuple(e for e, _ in tagged))
    return ScToEdgePackingWitness(t, g, tuple(tg for _, tg in tagged))


def induced_bipartite(w: ScToEdgePackingWitness, elements: Iterable[int]) -> tuple[BipartiteGraph, list[int], list[int]]:
    """Bipartite graph between ``elements`` and the sets containing any of them.

    Returns the graph plus the element ids of the left side and set ids of
    the right side, both sorted; bipartite vertex ``k`` is position ``k``.
    """
    left = _ids(elements)
    mem = w.source.memberships
    right = sorted({p for a in left for p in mem[a]})
    rpos = {p: k for k, p in enumerate(right)}
    edges = tuple((x, rpos[p]) for x, a in enumerate(left) for p in mem[a])
    return BipartiteGraph(len(left), len(right), edges), left, right


def map_elements_to_edges(w: ScToEdgePackingWitness, ep: Iterable[int]) -> EdgePacking:
    """Match each selected element to a distinct set containing it and return those edges."""
    ids = _ids(ep)
    if not is_element_packing(w.source, ids):
        raise ContractViolation("input is not an element packing of the source")
    b, left, right = induced_bipartite(w, ids)
    mt = max_matching(b)
    if not mt.saturates_left:
        raise InvariantViolation("no matching saturates the selected elements")
    lookup = w.incidence_edge
    out = EdgePacking(lookup[(left[x], right[y])] for x, y in mt.pairs)
    if not is_edge_packing(w.target, out):
        raise InvariantViolation("matched edges are not an edge packing")
    return out


def map_edges_to_elements(w: ScToEdgePackingWitness, f: Iterable[int]) -> ElementPacking:
    """Take the element endpoint of each edge; the lower one for element-element edges."""
    ids = _ids(f)
    if not is_edge_packing(w.target, ids):
        raise ContractViolation("input is not an edge packing of the target")
    picked = [w.tags[e].element for e in ids]
    if len(set(picked)) != len(picked):
        raise InvariantViolation("two packed edges yield the same element")
    out = ElementPacking(picked)
    if not is_element_packing(w.source, out):
        raise InvariantViolation("recovered elements are not an element packing")
    return out


# -- element packing -> vertex packing --------------------------------------


@dataclass(frozen=True)
class ScToVertexPackingWitness:
    source: SetSystem
    target: Graph


def sc_to_vertex_packing(t: SetSystem) -> ScToVertexPackingWitness:
    """Graph joining each element to its sets and each pair of intersecting sets."""
    _require_normalized(t)
    n = t.n
    edges = [(a, n + p) for p, s in enumerate(t.sets) for a in s]
    masks = t.set_masks
    edges += [(n + p, n + q) for p, q in combinations(range(t.m), 2) if masks[p] & masks[q]]
    return ScToVertexPackingWitness(t, Graph(n + t.m, tuple(sorted(edges))))


def map_elements_to_vertices(w: ScToVertexPackingWitness, ep: Iterable[int]) -> VertexPacking:
    ids = _ids(ep)
    if not is_element_packing(w.source, ids):
        raise ContractViolation("input is not an element packing of the source")
    out = VertexPacking(ids)
    if not is_vertex_packing(w.target, out):
        raise InvariantViolation("embedded elements are not a vertex packing")
    return out


def map_vertices_to_elements(w: ScToVertexPackingWitness, vp: Iterable[int]) -> ElementPacking:
    """Element vertices map to themselves; a set vertex maps to its smallest element."""
    ids = _ids(vp)
    if not is_vertex_packing(w.target, ids):
        raise ContractViolation("input is not a vertex packing of the target")
    n = w.source.n
    picked = []
    for v in ids:
        if v < n:
            picked.append(v)
        else:
            s = w.source.sets[v - n]
            if not s:
                raise InputError(f"set {v - n} is empty; source is not normalized")
            picked.append(s[0])
    if len(set(picked)) != len(picked):
        raise InvariantViolation("two packed vertices map to the same element")
    out = ElementPacking(picked)
    if not is_element_packing(w.source, out):
        raise InvariantViolation("recovered elements are not an element packing")
    return out


# -- identity-map routes -----------------------------------------------------


def vertex_packing_to_sc(g: Graph) -> SetSystem:
    """Closed-neighborhood hypergraph; solutions carry over as identical index sets."""
    return closed_nbhd_hypergraph(g)


def edge_packing_to_vertex_packing(g: Graph) -> Graph:
    """Line graph; edge ids of ``g`` are vertex ids of the result."""
    return line_graph(g)
