"""Vertex, edge, set and element packing: reductions, solution maps and solvers."""

from .errors import ContractViolation, InputError, InvariantViolation, PackingError, ParseError
from .matching import BipartiteGraph, Matching, hall_violator, max_matching
from .model import (
    EdgePacking,
    ElementPacking,
    Graph,
    SetPacking,
    SetSystem,
    VertexPacking,
    closed_nbhd_edge,
    closed_nbhd_hypergraph,
    closed_nbhd_vertex,
    is_edge_packing,
    is_element_packing,
    is_set_packing,
    is_vertex_packing,
    line_graph,
)
from .reductions import (
    edge_packing_to_vertex_packing,
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
from .solvers import (
    SolveReport,
    approx_edge_packing,
    approx_vertex_packing,
    decide_packing,
    exact_edge_packing,
    exact_element_packing,
    exact_set_packing,
    exact_vertex_packing,
    greedy_set_packing,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
