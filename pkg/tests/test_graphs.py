import random

import networkx as nx
import pytest
from hypothesis import given, settings

from gainline.errors import DomainError, StructuralError
from gainline.generate import connected_graphs, connected_graphs_with_edges
from gainline.graphs import (
    SimpleGraph,
    circuit_rank,
    claws,
    complete_graph,
    cycle_graph,
    is_cycle_graph,
    is_path_graph,
    path_graph,
    star_graph,
)
from gainline.isomorphism import are_isomorphic, automorphisms, canonical_form, isomorphisms

from .conftest import graphs


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_structural_errors():
    with pytest.raises(StructuralError):
        SimpleGraph(2, ((0, 0),))
    with pytest.raises(StructuralError):
        SimpleGraph(2, ((0, 1), (1, 0)))
    with pytest.raises(StructuralError):
        SimpleGraph(2, ((0, 2),))


def test_edges_normalised_in_order():
    g = SimpleGraph(3, ((2, 0), (1, 0)))
    assert g.edges == ((0, 2), (0, 1))
    assert g.edge_index[(2, 0)] == 0


def test_circuit_rank():
    assert circuit_rank(path_graph(5)) == 0
    assert circuit_rank(cycle_graph(6)) == 1
    assert circuit_rank(complete_graph(4)) == 3
    with pytest.raises(DomainError):
        circuit_rank(SimpleGraph(2, ()))


def test_path_and_cycle_predicates():
    assert is_path_graph(path_graph(1)) and is_path_graph(path_graph(4))
    assert not is_path_graph(star_graph(3))
    assert is_cycle_graph(cycle_graph(3)) and not is_cycle_graph(path_graph(3))


def test_claws():
    assert list(claws(star_graph(3))) == [(0, 1, 2, 3)]
    assert list(claws(complete_graph(5))) == []


def test_edge_subgraph_differs_from_vertex_induced():
    c4 = cycle_graph(4)
    sub, verts, ks = c4.edge_subgraph([0, 1, 2])
    assert verts == (0, 1, 2, 3) and sub.m == 3
    full, _ = c4.induced(verts)
    assert full.m == 4


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_isomorphism_matches_networkx(g):
    rng = random.Random(g.m * 31 + g.n)
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert are_isomorphic(g, h)
    assert canonical_form(g) == canonical_form(h)
    for phi in list(isomorphisms(g, h))[:5]:
        assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edges)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_form_is_complete_invariant(a, b):
    same = nx.is_isomorphic(to_nx(a), to_nx(b))
    assert (canonical_form(a) == canonical_form(b)) == same
    assert are_isomorphic(a, b) == same


def test_automorphism_counts():
    assert len(automorphisms(complete_graph(4))) == 24
    assert len(automorphisms(cycle_graph(5))) == 10
    assert len(automorphisms(star_graph(3))) == 6


def test_connected_graph_counts():
    # known sequence of connected graphs on n unlabelled vertices
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_generated_graphs_against_atlas():
    # independent oracle: networkx graph atlas lists every graph up to 7 vertices
    atlas = [h for h in nx.graph_atlas_g()[1:] if nx.is_connected(h) and h.number_of_nodes() <= 6]
    for n in range(1, 7):
        ours = connected_graphs(n)
        theirs = [h for h in atlas if h.number_of_nodes() == n]
        assert len(ours) == len(theirs)
        for g in ours:
            assert nx.is_connected(to_nx(g))


def test_graphs_by_edge_count():
    # connected graphs with m edges (no isolated vertices)
    assert [len(connected_graphs_with_edges(m)) for m in range(1, 8)] == [1, 1, 3, 5, 12, 30, 79]
    for m in range(1, 7):
        forms = {canonical_form(g) for g in connected_graphs_with_edges(m)}
        assert len(forms) == len(connected_graphs_with_edges(m))
