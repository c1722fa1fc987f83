#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Third-party modules
import pytest

# Internal modules
from spexlab.errors import CapacityExceeded, InvalidVertex, LoopRejected, ParseError
from spexlab.graphs.canon import is_isomorphic
from spexlab.graphs.graph import (
    VertexSet,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    double_star,
    empty_graph,
    from_edges,
    induced_subgraph,
    join,
    matching_graph,
    path_graph,
    star_graph,
)
from spexlab.graphs.named import parse_graph


###############################################################################
def test_from_edges_path():
    g = from_edges(3, [(0, 1), (1, 2)])
    assert g.degrees == (1, 2, 1)
    assert g.edges == ((0, 1), (1, 2))


def test_from_edges_empty_and_duplicates():
    assert from_edges(2, []) == empty_graph(2)
    assert from_edges(3, [(0, 1), (1, 0)]).num_edges == 1


def test_from_edges_errors():
    with pytest.raises(InvalidVertex):
        from_edges(3, [(0, 3)])
    with pytest.raises(LoopRejected):
        from_edges(3, [(1, 1)])
    with pytest.raises(CapacityExceeded):
        from_edges(65, [])


def test_from_edges_matching():
    m4 = from_edges(4, [(0, 1), (2, 3)])
    assert m4 == matching_graph(2)
    assert len(m4.components) == 2


###############################################################################
def test_disjoint_union():
    two_edges = disjoint_union(complete_graph(2), complete_graph(2))
    assert is_isomorphic(two_edges, matching_graph(2))
    g = cycle_graph(5)
    assert disjoint_union(g, empty_graph(0)) == g
    two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
    assert (two_triangles.n, two_triangles.num_edges) == (6, 6)


def test_join():
    assert join(empty_graph(1), empty_graph(1)) == complete_graph(2)
    wheel = join(empty_graph(1), cycle_graph(4))
    assert wheel.num_edges == 8
    assert wheel.degree(0) == 4


def test_join_capacity():
    with pytest.raises(CapacityExceeded):
        join(empty_graph(40), empty_graph(40))


###############################################################################
def test_induced_subgraph():
    assert induced_subgraph(complete_graph(4), [0, 2, 3]) == complete_graph(3)
    # Isolated vertices are kept
    ends = VertexSet.of([0, 2], 4)
    assert induced_subgraph(matching_graph(2), ends) == empty_graph(2)
    assert induced_subgraph(path_graph(3), [0, 1]) == complete_graph(2)


def test_dropped_neighbours_are_cut():
    assert induced_subgraph(complete_graph(4), [0, 1, 2]) == complete_graph(3)
    assert star_graph(5).delete_vertex(0) == empty_graph(4)
    assert cycle_graph(5).relabel([4, 0, 1]) == path_graph(3)


def test_induced_subgraph_outside():
    with pytest.raises(InvalidVertex):
        induced_subgraph(path_graph(3), [0, 5])
    with pytest.raises(InvalidVertex):
        VertexSet.of([4], 4)


###############################################################################
def test_bipartition():
    assert cycle_graph(6).is_bipartite
    assert not cycle_graph(5).is_bipartite
    side_a, side_b = path_graph(4).bipartition
    assert (side_a, side_b) == (0b0101, 0b1010)


def test_covers_and_independence():
    g = star_graph(4)
    assert g.is_cover(0b0001)
    assert not g.is_cover(0b0110)
    assert g.is_independent(0b1110)


def test_edge_edits():
    g = cycle_graph(4)
    assert g.toggle_edge(0, 2).num_edges == 5
    assert g.delete_edge(0, 1).num_edges == 3
    with pytest.raises(InvalidVertex):
        g.delete_edge(0, 2)
    assert g.delete_vertex(0) == path_graph(3)


def test_named_constructors():
    assert complete_multipartite([2, 2]).num_edges == 4
    assert double_star(3).degrees == (3, 3, 1, 1, 1, 1)
    assert star_graph(4).max_degree == 3


###############################################################################
@pytest.mark.parametrize(
    "token, n, edges",
    [
        ("path:5", 5, 4),
        ("cycle:6", 6, 6),
        ("star:4", 4, 3),
        ("matching:3", 6, 3),
        ("clique:4", 4, 6),
        ("A_", 2, 1),
    ],
)
def test_parse_graph(token, n, edges):
    g = parse_graph(token)
    assert (g.n, g.num_edges) == (n, edges)


def test_star_token_counts_vertices():
    assert parse_graph("star:4") == star_graph(4)
    assert parse_graph("star:4").max_degree == 3


@pytest.mark.parametrize("token", ["wheel:5", "path:x", "cycle:2", ""])
def test_parse_graph_errors(token):
    with pytest.raises(ParseError):
        parse_graph(token)
