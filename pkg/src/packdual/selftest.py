"""Equivalence driver: runs every reduction route on instance families and
checks optima, solution maps, the Hall precondition, decision agreement and
the approximation guarantees.

Failures are recorded, never raised. ``inject_corruption`` is the negative
control: each forward-mapped solution is extended by an item that conflicts
with it before the feasibility check, so every such record must fail.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Union

from . import reductions as red
from .errors import PackingError
from .generators import all_graphs, canonical_setsystems, random_graphs, random_setsystems, ATLAS_MAX_N
from .matching import hall_violator
from .model import EdgePacking, ElementPacking, Graph, SetSystem, VertexPacking
from .formats import serialize_instance
from .solvers import (
    approx_bound,
    approx_edge_packing,
    approx_vertex_packing,
    conflict_masks,
    decide_packing,
    greedy_set_packing,
    is_feasible,
    item_count,
    iter_packings,
    solve_exact,
)

SAMPLE_LIMIT = 100
ENUMERATION_LIMIT = 20000


@dataclass
class RouteRecord:
    route: str
    digest: str
    source_opt: int = -1
    target_opt: int = -1
    forward_size: int = -1
    backward_size: int = -1
    forward_checked: int = 0
    backward_checked: int = 0
    forward_ok: bool = True
    backward_ok: bool = True
    hall_ok: bool = True
    decisions_ok: bool = True
    skipped: str | None = None
    detail: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.skipped:
            return not self.detail
        return (
            self.source_opt == self.target_opt
            and self.forward_ok
            and self.backward_ok
            and self.hall_ok
            and self.decisions_ok
            and not self.detail
        )

    def fail(self, msg: str) -> None:
        self.detail.append(msg)


@dataclass
class EquivalenceReport:
    records: list[RouteRecord] = field(default_factory=list)
    instances: int = 0
    injected: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[RouteRecord]:
        return [r for r in self.records if not r.passed]

    def summary(self) -> dict:
        by_route: dict[str, dict[str, int]] = {}
        for r in self.records:
            d = by_route.setdefault(r.route, {"records": 0, "failed": 0, "skipped": 0})
            d["records"] += 1
            d["failed"] += not r.passed
            d["skipped"] += r.skipped is not None
        return {
            "passed": self.passed,
            "instances": self.instances,
            "records": len(self.records),
            "injected_corruptions": self.injected,
            "by_route": by_route,
            "failures": [dict(asdict(r), passed=False) for r in self.failures[:20]],
        }


def digest(x: Union[Graph, SetSystem]) -> str:
    return hashlib.sha256(serialize_instance(x).encode()).hexdigest()[:12]


@dataclass(frozen=True)
class Route:
    name: str
    source_problem: str
    target_problem: str
    build: Callable
    target_of: Callable
    forward: Callable
    backward: Callable


def _enc(w):
    return w.target


ROUTE_TABLE = {
    "scbar-sp": Route("scbar-sp", "scbar", "sp", red.sc_to_set_packing, _enc,
                      red.map_elements_to_sets, red.map_sets_to_elements),
    "scbar-ep": Route("scbar-ep", "scbar", "ep", red.sc_to_edge_packing, _enc,
                      red.map_elements_to_edges, red.map_edges_to_elements),
    "scbar-vp": Route("scbar-vp", "scbar", "vp", red.sc_to_vertex_packing, _enc,
                      red.map_elements_to_vertices, red.map_vertices_to_elements),
    "vp-scbar": Route("vp-scbar", "vp", "scbar", red.vertex_packing_to_sc, lambda t: t,
                      lambda _, s: ElementPacking(s), lambda _, s: VertexPacking(s)),
    "ep-vp": Route("ep-vp", "ep", "vp", red.edge_packing_to_vertex_packing, lambda t: t,
                   lambda _, s: VertexPacking(s), lambda _, s: EdgePacking(s)),
}


class _Sampler:
    """Optimal packings plus a uniform sample of feasible ones."""

    def __init__(self, problem: str, instance, opt: int, rng: random.Random):
        self.optimal: list[list[int]] = []
        sample: list[list[int]] = []
        seen = 0
        for ids in iter_packings(conflict_masks(problem, instance)):
            if len(ids) == opt and len(self.optimal) < SAMPLE_LIMIT:
                self.optimal.append(ids)
            seen += 1
            if len(sample) < SAMPLE_LIMIT:
                sample.append(ids)
            else:
                k = rng.randrange(seen)
                if k < SAMPLE_LIMIT:
                    sample[k] = ids
            if seen >= ENUMERATION_LIMIT:
                break
        self.sample = sample

    def all(self) -> list[list[int]]:
        return self.optimal + self.sample


class Checker:
    def __init__(self, seed: int = 0, inject_corruption: bool = False):
        self.rng = random.Random(seed)
        self.inject = inject_corruption
        self.injected = 0

    def _corrupt(self, problem: str, instance, ids: list[int]) -> list[int]:
        conf = conflict_masks(problem, instance)
        present = set(ids)
        for i in ids:
            c = conf[i]
            while c:
                j = (c & -c).bit_length() - 1
                c &= c - 1
                if j not in present:
                    self.injected += 1
                    return sorted(ids + [j])
        return ids

    def _map_all(self, rec: RouteRecord, fn, w, sols, problem, instance, direction: str) -> bool:
        ok = True
        for sol in sols:
            try:
                out = list(fn(w, sol))
            except PackingError as exc:
                rec.fail(f"{direction} map raised on {sol}: {exc}")
                return False
            if direction == "forward" and self.inject:
                out = self._corrupt(problem, instance, out)
            if not is_feasible(problem, instance, out):
                rec.fail(f"{direction} map of {sol} -> {out} is infeasible")
                ok = False
            elif len(out) != len(sol):
                rec.fail(f"{direction} map of {sol} changed size to {len(out)}")
                ok = False
        return ok

    def check_route(self, name: str, source) -> RouteRecord:
        route = ROUTE_TABLE[name]
        rec = RouteRecord(name, digest(source))
        try:
            w = route.build(source)
        except PackingError as exc:
            if name == "scbar-ep" and not source.covers_universe:
                rec.skipped = f"precondition rejected: {exc}"
            else:
                rec.fail(f"construction raised: {exc}")
            return rec
        target = route.target_of(w)
        sp, tp = route.source_problem, route.target_problem

        src_exact = solve_exact(sp, source)
        tgt_exact = solve_exact(tp, target)
        rec.source_opt, rec.target_opt = src_exact.size, tgt_exact.size
        if rec.source_opt != rec.target_opt:
            rec.fail(f"optima differ: {rec.source_opt} vs {rec.target_opt}")

        try:
            rec.forward_size = len(route.forward(w, src_exact.solution))
            rec.backward_size = len(route.backward(w, tgt_exact.solution))
        except PackingError as exc:
            rec.fail(f"map of exact optimum raised: {exc}")
        if rec.forward_size != rec.source_opt or rec.backward_size != rec.target_opt:
            rec.fail("map of exact optimum changed size")

        src_sols = _Sampler(sp, source, rec.source_opt, self.rng).all()
        tgt_sols = _Sampler(tp, target, rec.target_opt, self.rng).all()
        rec.forward_checked, rec.backward_checked = len(src_sols), len(tgt_sols)
        rec.forward_ok = self._map_all(rec, route.forward, w, src_sols, tp, target, "forward")
        rec.backward_ok = self._map_all(rec, route.backward, w, tgt_sols, sp, source, "backward")

        if name == "scbar-ep":
            for sol in src_sols:
                b, _, _ = red.induced_bipartite(w, sol)
                if hall_violator(b) is not None:
                    rec.hall_ok = False
                    rec.fail(f"Hall condition fails for feasible {sol}")
                    break

        for k in range(rec.source_opt + 2):
            if decide_packing(sp, source, k) != decide_packing(tp, target, k):
                rec.decisions_ok = False
                rec.fail(f"decision at k={k} differs across the route")
        return rec

    def check_approx(self, problem: str, instance) -> RouteRecord:
        rec = RouteRecord(f"approx:{problem}", digest(instance))
        opt = solve_exact(problem, instance).size
        rep = {"sp": greedy_set_packing, "vp": approx_vertex_packing, "ep": approx_edge_packing}[problem](instance)
        rec.source_opt = opt
        rec.target_opt = opt
        rec.forward_size = rep.size
        if not is_feasible(problem, instance, rep.solution):
            rec.fail("approximate solution is infeasible")
        bound = approx_bound(opt, item_count_for_bound(problem, instance))
        if rep.size < bound:
            rec.fail(f"size {rep.size} below guarantee {bound:.3f} (opt {opt})")
        return rec


def item_count_for_bound(problem: str, instance) -> int:
    """Size parameter under the square root: |U| for set packing, |V| or |E| for graphs."""
    if problem == "sp":
        return instance.n
    return item_count(problem, instance)


SET_ROUTES = ("scbar-sp", "scbar-ep", "scbar-vp")
GRAPH_ROUTES = ("vp-scbar", "ep-vp")


def check_setsystem(checker: Checker, t: SetSystem) -> list[RouteRecord]:
    recs = [checker.check_route(r, t) for r in SET_ROUTES]
    recs.append(checker.check_approx("sp", t))
    recs.append(checker.check_approx("sp", red.sc_to_set_packing(t).target))
    recs.append(checker.check_approx("vp", red.sc_to_vertex_packing(t).target))
    if t.covers_universe:
        recs.append(checker.check_approx("ep", red.sc_to_edge_packing(t).target))
    return recs


def check_graph(checker: Checker, g: Graph) -> list[RouteRecord]:
    recs = [checker.check_route(r, g) for r in GRAPH_ROUTES]
    recs.append(checker.check_approx("vp", g))
    recs.append(checker.check_approx("ep", g))
    return recs


def selftest_instances(max_n: int, max_m: int, sample_count: int, seed: int) -> Iterator[Union[Graph, SetSystem]]:
    """Exhaustive set systems (n <= max_n, m <= max_m) and graphs (n <= min(max_n, 7))
    up to isomorphism, then ``sample_count`` random set systems with n <= max_n + 2,
    m <= max_m + 2 and ``sample_count`` random graphs with n <= max_n + 1."""
    yield from canonical_setsystems(max_n, max_m)
    yield from all_graphs(min(max_n, ATLAS_MAX_N))
    if sample_count:
        yield from random_setsystems(sample_count, max_n + 2, max_m + 2, seed)
        yield from random_graphs(sample_count, max_n + 1, seed + 1)


def run_selftest(
    max_n: int,
    max_m: int,
    sample_count: int,
    seed: int,
    inject_corruption: bool = False,
    instances: Iterable[Union[Graph, SetSystem]] | None = None,
) -> EquivalenceReport:
    checker = Checker(seed, inject_corruption)
    report = EquivalenceReport()
    if instances is None:
        instances = selftest_instances(max_n, max_m, sample_count, seed)
    for x in instances:
        report.instances += 1
        if isinstance(x, SetSystem):
            report.records.extend(check_setsystem(checker, x.normalize()[0]))
        else:
            report.records.extend(check_graph(checker, x))
    report.injected = checker.injected
    return report
