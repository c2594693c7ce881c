"""Exact, greedy and approximation solvers plus the parameterized decision procedure.

Each exact solver turns its instance into a conflict table (item ``i``
cannot be selected together with the items in ``conflicts[i]``) computed
straight from the problem definition, never through a reduction, so the
exact solvers can act as oracles for the reductions module.

The search is include-first branch and bound in increasing item order with
the number of still-selectable items as the bound. Because the incumbent is
replaced only on strict improvement, the reported optimum is the
lexicographically smallest maximum packing. Practical ceiling: a few dozen
items with dense conflicts, or around 40 loosely conflicting items.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Union

from . import reductions
from .errors import InputError, InvariantViolation
from .model import (
    EdgePacking,
    ElementPacking,
    Graph,
    SetPacking,
    SetSystem,
    VertexPacking,
    bits,
    is_edge_packing,
    is_element_packing,
    is_set_packing,
    is_vertex_packing,
)

Instance = Union[Graph, SetSystem]
Packing = Union[VertexPacking, EdgePacking, SetPacking, ElementPacking]

PROBLEMS = ("vp", "ep", "sp", "scbar")

_INSTANCE_TYPE = {"vp": Graph, "ep": Graph, "sp": SetSystem, "scbar": SetSystem}
_PACKING_TYPE = {"vp": VertexPacking, "ep": EdgePacking, "sp": SetPacking, "scbar": ElementPacking}
_PREDICATE: dict[str, Callable] = {
    "vp": is_vertex_packing,
    "ep": is_edge_packing,
    "sp": is_set_packing,
    "scbar": is_element_packing,
}


@dataclass(frozen=True)
class SolveReport:
    problem: str
    algo: str
    solution: Packing
    optimal: bool
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def size(self) -> int:
        return len(self.solution)

    def to_json(self) -> dict:
        return {
            "problem": self.problem,
            "algo": self.algo,
            "size": self.size,
            "solution": [i + 1 for i in self.solution],
            "optimal": self.optimal,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def check_pairing(problem: str, instance) -> None:
    if problem not in _INSTANCE_TYPE:
        raise InputError(f"unknown problem {problem!r}; expected one of {PROBLEMS}")
    want = _INSTANCE_TYPE[problem]
    if not isinstance(instance, want):
        raise InputError(f"problem {problem!r} needs a {want.__name__}, got {type(instance).__name__}")


def is_feasible(problem: str, instance: Instance, sol) -> bool:
    check_pairing(problem, instance)
    return _PREDICATE[problem](instance, sol)


def make_packing(problem: str, ids) -> Packing:
    return _PACKING_TYPE[problem](ids)


def item_count(problem: str, instance: Instance) -> int:
    check_pairing(problem, instance)
    if problem == "vp":
        return instance.n
    if problem == "ep":
        return instance.m
    if problem == "sp":
        return instance.m
    return instance.n


def conflict_masks(problem: str, instance: Instance) -> list[int]:
    """``conflicts[i]`` = bitmask of items that cannot accompany item ``i`` (``i`` excluded)."""
    check_pairing(problem, instance)
    if problem == "vp":
        nb = instance.vertex_nbhd_masks
        adj = instance.adjacency
        out = []
        for v in range(instance.n):
            reach = nb[v]
            for u in adj[v]:
                reach |= nb[u]
            out.append(reach & ~(1 << v))
        return out
    if problem == "ep":
        nb = instance.edge_nbhd_masks
        out = []
        for e in range(instance.m):
            reach = 0
            for f in bits(nb[e]):
                reach |= nb[f]
            out.append(reach & ~(1 << e))
        return out
    if problem == "sp":
        sm = instance.set_masks
        return [
            sum(1 << k for k in range(instance.m) if k != j and sm[j] & sm[k])
            for j in range(instance.m)
        ]
    # scbar: elements sharing any set
    out = []
    for a, mem in enumerate(instance.memberships):
        reach = 0
        for p in mem:
            reach |= instance.set_masks[p]
        out.append(reach & ~(1 << a))
    return out


def _max_packing(conflicts: list[int]) -> list[int]:
    best: list[int] = []
    best_size = -1
    chosen: list[int] = []

    def rec(cand: int) -> None:
        nonlocal best, best_size
        if len(chosen) + cand.bit_count() <= best_size:
            return
        if not cand:
            best = chosen.copy()
            best_size = len(best)
            return
        i = (cand & -cand).bit_length() - 1
        chosen.append(i)
        rec(cand & ~conflicts[i] & ~(1 << i))
        chosen.pop()
        rec(cand & ~(1 << i))

    rec((1 << len(conflicts)) - 1)
    return best


def _bounded_search(conflicts: list[int], k: int) -> list[int] | None:
    """A packing with ``k`` items, or None; search depth never exceeds ``k``."""
    chosen: list[int] = []

    def rec(cand: int) -> bool:
        if len(chosen) == k:
            return True
        if cand.bit_count() < k - len(chosen):
            return False
        i = (cand & -cand).bit_length() - 1
        chosen.append(i)
        if rec(cand & ~conflicts[i] & ~(1 << i)):
            return True
        chosen.pop()
        return rec(cand & ~(1 << i))

    return chosen if rec((1 << len(conflicts)) - 1) else None


def iter_packings(conflicts: list[int]) -> Iterator[list[int]]:
    """Every feasible packing (including the empty one), in include-first order."""
    chosen: list[int] = []

    def rec(cand: int):
        yield chosen.copy()
        c = cand
        while c:
            i = (c & -c).bit_length() - 1
            c &= c - 1
            chosen.append(i)
            yield from rec(c & ~conflicts[i])
            chosen.pop()

    yield from rec((1 << len(conflicts)) - 1)


def enumerate_packings(problem: str, instance: Instance) -> Iterator[Packing]:
    for ids in iter_packings(conflict_masks(problem, instance)):
        yield make_packing(problem, ids)


def _exact(problem: str, instance: Instance) -> SolveReport:
    t0 = time.perf_counter()
    ids = _max_packing(conflict_masks(problem, instance))
    sol = make_packing(problem, ids)
    if not _PREDICATE[problem](instance, sol):
        raise InvariantViolation(f"exact {problem} produced an infeasible packing")
    return SolveReport(problem, "exact", sol, True, (time.perf_counter() - t0) * 1e3)


def exact_set_packing(t: SetSystem) -> SolveReport:
    return _exact("sp", t)


def exact_element_packing(t: SetSystem) -> SolveReport:
    return _exact("scbar", t)


def exact_vertex_packing(g: Graph) -> SolveReport:
    return _exact("vp", g)


def exact_edge_packing(g: Graph) -> SolveReport:
    return _exact("ep", g)


def solve_exact(problem: str, instance: Instance) -> SolveReport:
    check_pairing(problem, instance)
    return _exact(problem, instance)


def _greedy_ids(t: SetSystem) -> list[int]:
    masks = t.set_masks
    remaining = sorted(range(t.m), key=lambda j: (len(t.sets[j]), j))
    picked = []
    while remaining:
        j = remaining[0]
        picked.append(j)
        remaining = [k for k in remaining[1:] if not masks[k] & masks[j]]
    return picked


def greedy_set_packing(t: SetSystem) -> SolveReport:
    """Smallest remaining set first (ties to lower index), discarding everything it meets."""
    t0 = time.perf_counter()
    sol = SetPacking(_greedy_ids(t))
    if not is_set_packing(t, sol):
        raise InvariantViolation("greedy produced an infeasible set packing")
    return SolveReport("sp", "greedy", sol, False, (time.perf_counter() - t0) * 1e3)


def approx_element_packing(t: SetSystem) -> SolveReport:
    """Transpose, run the greedy set packing, map back."""
    t0 = time.perf_counter()
    w = reductions.sc_to_set_packing(t.normalize()[0])
    sol = reductions.map_sets_to_elements(w, _greedy_ids(w.target))
    return SolveReport("scbar", "approx-chain", sol, False, (time.perf_counter() - t0) * 1e3)


def approx_vertex_packing(g: Graph) -> SolveReport:
    """Closed-neighborhood hypergraph, transpose, greedy, then back through both maps."""
    t0 = time.perf_counter()
    hyper = reductions.vertex_packing_to_sc(g)
    w = reductions.sc_to_set_packing(hyper)
    elements = reductions.map_sets_to_elements(w, _greedy_ids(w.target))
    sol = VertexPacking(elements.ids)
    if not is_vertex_packing(g, sol):
        raise InvariantViolation("approximation chain produced an infeasible vertex packing")
    return SolveReport("vp", "approx-chain", sol, False, (time.perf_counter() - t0) * 1e3)


def approx_edge_packing(g: Graph) -> SolveReport:
    """Line graph, then the vertex packing chain; vertex ids there are edge ids here."""
    t0 = time.perf_counter()
    inner = approx_vertex_packing(reductions.edge_packing_to_vertex_packing(g))
    sol = EdgePacking(inner.solution.ids)
    if not is_edge_packing(g, sol):
        raise InvariantViolation("approximation chain produced an infeasible edge packing")
    return SolveReport("ep", "approx-chain", sol, False, (time.perf_counter() - t0) * 1e3)


def solve_approx(problem: str, instance: Instance) -> SolveReport:
    check_pairing(problem, instance)
    return {
        "vp": approx_vertex_packing,
        "ep": approx_edge_packing,
        "sp": greedy_set_packing,
        "scbar": approx_element_packing,
    }[problem](instance)


def approx_bound(opt: int, items: int) -> float:
    """Smallest size the sqrt-factor guarantee allows: ``opt / ceil(sqrt(items))``."""
    return opt / max(1, math.ceil(math.sqrt(items)))


def find_packing(problem: str, instance: Instance, k: int) -> Packing | None:
    """A feasible packing of exactly ``k`` items, or None if none exists."""
    check_pairing(problem, instance)
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    ids = _bounded_search(conflict_masks(problem, instance), k)
    return None if ids is None else make_packing(problem, ids)


def decide_packing(problem: str, instance: Instance, k: int) -> bool:
    """Whether a packing of size at least ``k`` exists."""
    return find_packing(problem, instance, k) is not None
