import pytest
from hypothesis import given, settings

import oracle
from conftest import graphs, path, setsystems, star
from packdual import (
    ContractViolation,
    InputError,
    SetSystem,
    edge_packing_to_vertex_packing,
    hall_violator,
    is_edge_packing,
    is_element_packing,
    is_set_packing,
    is_vertex_packing,
    line_graph,
    map_edges_to_elements,
    map_elements_to_edges,
    map_elements_to_sets,
    map_elements_to_vertices,
    map_sets_to_elements,
    map_vertices_to_elements,
    sc_to_edge_packing,
    sc_to_set_packing,
    sc_to_vertex_packing,
    vertex_packing_to_sc,
)
from packdual.model import ElementPacking, SetPacking
from packdual.reductions import EdgeTag, induced_bipartite
from packdual.solvers import enumerate_packings


class TestTranspose:
    def test_singletons(self):
        w = sc_to_set_packing(SetSystem(2, ((0,), (1,))))
        assert w.target.n == 2 and w.target.sets == ((0,), (1,))

    def test_one_set(self):
        w = sc_to_set_packing(SetSystem(2, ((0, 1),)))
        assert w.target.n == 1 and w.target.sets == ((0,), (0,))

    def test_worked(self, worked):
        w = sc_to_set_packing(worked)
        assert w.target.sets == ((0,), (0, 1), (1,))
        assert oracle.brute_opt("sp", w.target) == 2 == oracle.brute_opt("scbar", worked)

    def test_requires_normalized(self):
        with pytest.raises(InputError):
            sc_to_set_packing(SetSystem(2, ((0,), ())))

    def test_uncovered_element_gives_empty_set(self):
        w = sc_to_set_packing(SetSystem(2, ((0,),)))
        assert w.target.sets == ((0,), ())

    @given(setsystems())
    def test_double_transpose(self, t):
        if not t.covers_universe:
            # an uncovered element would give an empty target set
            t = SetSystem(t.n, t.sets + tuple((a,) for a in range(t.n) if not t.memberships[a]))
        assert sc_to_set_packing(sc_to_set_packing(t).target).target == t

    def test_sets_to_elements(self, worked):
        w = sc_to_set_packing(worked)
        assert map_sets_to_elements(w, []) == ElementPacking()
        assert map_sets_to_elements(w, [0, 2]) == ElementPacking([0, 2])
        w1 = sc_to_set_packing(SetSystem(1, ((0,),)))
        assert map_sets_to_elements(w1, [0]).ids == (0,)

    def test_elements_to_sets(self, worked):
        w = sc_to_set_packing(worked)
        assert map_elements_to_sets(w, []) == SetPacking()
        assert map_elements_to_sets(w, [0, 2]) == SetPacking([0, 2])
        w1 = sc_to_set_packing(SetSystem(1, ((0,),)))
        assert map_elements_to_sets(w1, [0]).ids == (0,)

    def test_infeasible_rejected(self, worked):
        w = sc_to_set_packing(worked)
        with pytest.raises(ContractViolation):
            map_sets_to_elements(w, [0, 1])
        with pytest.raises(ContractViolation):
            map_elements_to_sets(w, [0, 1])


class TestEdgeRoute:
    def test_singletons(self):
        w = sc_to_edge_packing(SetSystem(2, ((0,), (1,))))
        assert w.target.n == 4
        assert w.target.edges == ((0, 2), (1, 3))
        assert all(tg.kind == "es" for tg in w.tags)

    def test_triangle(self):
        w = sc_to_edge_packing(SetSystem(2, ((0, 1),)))
        assert w.target.edges == ((0, 1), (0, 2), (1, 2))
        assert w.tags == (EdgeTag("ee", 0, 1), EdgeTag("es", 0, 0), EdgeTag("es", 1, 0))

    def test_worked(self, worked):
        w = sc_to_edge_packing(worked)
        ee = {(tg.element, tg.other) for tg in w.tags if tg.kind == "ee"}
        es = {(tg.element, tg.other) for tg in w.tags if tg.kind == "es"}
        assert ee == {(0, 1), (1, 2)}
        assert es == {(0, 0), (1, 0), (1, 1), (2, 1)}

    def test_no_set_set_edges(self, worked):
        w = sc_to_edge_packing(worked)
        assert all(min(e) < worked.n for e in w.target.edges)

    def test_uncovered_rejected(self):
        with pytest.raises(InputError):
            sc_to_edge_packing(SetSystem(2, ((0,),)))

    def test_uncovered_breaks_equivalence(self):
        # why the covering precondition exists
        t = SetSystem(2, ((0,),))
        from packdual.model import Graph
        g = Graph(3, ((0, 2),))
        assert oracle.brute_opt("scbar", t) == 2 and oracle.brute_opt("ep", g) == 1

    def test_elements_to_edges_singletons(self):
        w = sc_to_edge_packing(SetSystem(3, ((0,), (1,), (2,))))
        out = map_elements_to_edges(w, [0, 1, 2])
        assert [w.target.edges[e] for e in out] == [(0, 3), (1, 4), (2, 5)]

    def test_elements_to_edges_worked(self, worked):
        w = sc_to_edge_packing(worked)
        out = map_elements_to_edges(w, [0, 2])
        assert {w.target.edges[e] for e in out} == {(0, 3), (2, 4)}
        assert oracle.feasible("ep", w.target, out)

    def test_elements_to_edges_empty(self, worked):
        assert len(map_elements_to_edges(sc_to_edge_packing(worked), [])) == 0

    def test_edges_to_elements(self, worked):
        w = sc_to_edge_packing(worked)
        assert len(map_edges_to_elements(w, [])) == 0
        f = [w.target.edge_index[(0, 3)], w.target.edge_index[(2, 4)]]
        out = map_edges_to_elements(w, f)
        assert out.ids == (0, 2) and oracle.feasible("scbar", worked, out)

    def test_lower_endpoint_rule(self):
        w = sc_to_edge_packing(SetSystem(2, ((0, 1),)))
        assert map_edges_to_elements(w, [w.target.edge_index[(0, 1)]]).ids == (0,)

    def test_infeasible_rejected(self, worked):
        w = sc_to_edge_packing(worked)
        with pytest.raises(ContractViolation):
            map_elements_to_edges(w, [0, 1])
        with pytest.raises(ContractViolation):
            map_edges_to_elements(w, [0, 1])


class TestVertexRoute:
    def test_single(self):
        assert sc_to_vertex_packing(SetSystem(1, ((0,),))).target.edges == ((0, 1),)

    def test_overlap(self):
        g = sc_to_vertex_packing(SetSystem(2, ((0,), (0, 1)))).target
        assert g.edges == ((0, 2), (0, 3), (1, 3), (2, 3))

    def test_worked(self, worked):
        g = sc_to_vertex_packing(worked).target
        assert g.edges == ((0, 3), (1, 3), (1, 4), (2, 4), (3, 4))

    def test_elements_to_vertices(self, worked):
        w = sc_to_vertex_packing(SetSystem(2, ((0,), (1,))))
        assert len(map_elements_to_vertices(w, [])) == 0
        assert map_elements_to_vertices(w, [0, 1]).ids == (0, 1)
        w2 = sc_to_vertex_packing(worked)
        out = map_elements_to_vertices(w2, [0, 2])
        assert oracle.feasible("vp", w2.target, out)

    def test_vertices_to_elements(self, worked):
        w = sc_to_vertex_packing(SetSystem(2, ((0,), (1,))))
        assert len(map_vertices_to_elements(w, [])) == 0
        assert map_vertices_to_elements(w, [2, 3]).ids == (0, 1)
        w2 = sc_to_vertex_packing(worked)
        assert map_vertices_to_elements(w2, [0]).ids == (0,)
        for vp in oracle.all_feasible("vp", w2.target):
            out = map_vertices_to_elements(w2, vp)
            assert len(out) == len(vp) and oracle.feasible("scbar", worked, out)

    def test_min_element_choice(self):
        w = sc_to_vertex_packing(SetSystem(3, ((2, 1),)))
        assert map_vertices_to_elements(w, [3]).ids == (1,)

    def test_infeasible_rejected(self, worked):
        w = sc_to_vertex_packing(worked)
        with pytest.raises(ContractViolation):
            map_vertices_to_elements(w, [3, 4])


class TestIdentityRoutes:
    def test_hypergraph_examples(self):
        assert vertex_packing_to_sc(path(3)).sets == ((0, 1), (0, 1, 2), (1, 2))

    def test_line_graph_examples(self):
        assert edge_packing_to_vertex_packing(star(3)) == line_graph(star(3))

    @given(graphs(max_n=6))
    def test_vp_iff_element_packing(self, g):
        h = vertex_packing_to_sc(g)
        for mask in range(1 << g.n):
            ids = [v for v in range(g.n) if mask >> v & 1]
            assert is_vertex_packing(g, ids) == is_element_packing(h, ids)


def _all(problem, inst):
    return [p.ids for p in enumerate_packings(problem, inst)]


def _opt(problem, inst):
    """Brute-force optimum when enumeration is cheap, else None."""
    if oracle.items(problem, inst) > 14:
        return None
    return oracle.brute_opt(problem, inst)


@settings(max_examples=60, deadline=None)
@given(setsystems(max_n=5, max_m=4))
def test_set_routes_preserve_size_and_feasibility(t):
    ws = sc_to_set_packing(t)
    wv = sc_to_vertex_packing(t)
    for ep in _all("scbar", t):
        assert is_set_packing(ws.target, map_elements_to_sets(ws, ep))
        out = map_elements_to_vertices(wv, ep)
        assert len(out) == len(ep) and is_vertex_packing(wv.target, out)
    for sp in _all("sp", ws.target):
        out = map_sets_to_elements(ws, sp)
        assert len(out) == len(sp) and is_element_packing(t, out)
    for vp in _all("vp", wv.target):
        out = map_vertices_to_elements(wv, vp)
        assert len(out) == len(vp) and is_element_packing(t, out)


@settings(max_examples=60, deadline=None)
@given(setsystems(max_n=5, max_m=4))
def test_edge_route_lemmas(t):
    if not t.covers_universe:
        return
    w = sc_to_edge_packing(t)
    for ep in _all("scbar", t):
        b, _, _ = induced_bipartite(w, ep)
        assert hall_violator(b) is None
        f = map_elements_to_edges(w, ep)
        assert len(f) == len(ep) and is_edge_packing(w.target, f)
    for f in _all("ep", w.target):
        out = map_edges_to_elements(w, f)
        assert len(out) == len(f) and is_element_packing(t, out)


@settings(max_examples=60, deadline=None)
@given(setsystems(max_n=5, max_m=4))
def test_optima_agree(t):
    opt = oracle.brute_opt("scbar", t)
    assert oracle.brute_opt("sp", sc_to_set_packing(t).target) == opt
    assert oracle.brute_opt("vp", sc_to_vertex_packing(t).target) == opt
    if t.covers_universe:
        assert _opt("ep", sc_to_edge_packing(t).target) in (opt, None)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_graph_optima_agree(g):
    assert oracle.brute_opt("vp", g) == oracle.brute_opt("scbar", vertex_packing_to_sc(g))
    assert _opt("ep", g) in (_opt("vp", line_graph(g)), None)
