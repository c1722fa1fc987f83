#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Third-party modules
import numpy
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

# Internal modules
from spexlab.construct.blocks import turan_graph
from spexlab.graphs.covers import to_networkx
from spexlab.graphs.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    join,
    matching_graph,
    path_graph,
    star_graph,
)
from spexlab.graphs.subgraph import contains_subgraph, is_free_of, twin_classes

PATTERNS = [
    path_graph(3),
    complete_graph(3),
    cycle_graph(4),
    matching_graph(2),
    star_graph(4),
    path_graph(5),
    disjoint_union(complete_graph(2), empty_graph(1)),
    disjoint_union(complete_graph(3), complete_graph(2)),
    complete_graph(4),
]


def random_graph(n: int, density: float, rng: numpy.random.Generator) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density
    ]
    return from_edges(n, edges)


###############################################################################
def test_examples():
    assert contains_subgraph(complete_graph(4), path_graph(3))
    assert not contains_subgraph(cycle_graph(5), complete_graph(3))
    assert contains_subgraph(turan_graph(6, 2), cycle_graph(4))
    assert is_free_of(turan_graph(9, 3), complete_graph(4))


def test_isolated_pattern_vertices_need_room():
    assert not contains_subgraph(complete_graph(2), empty_graph(3))
    assert contains_subgraph(empty_graph(3), empty_graph(3))
    k2_k1 = disjoint_union(complete_graph(2), empty_graph(1))
    assert contains_subgraph(complete_graph(3), k2_k1)


def test_twin_classes_of_turan_graph():
    classes = twin_classes(turan_graph(7, 3))
    assert sorted(c.bit_count() for c in classes) == [2, 2, 3]


@pytest.mark.parametrize("seed", range(6))
def test_agrees_with_networkx(seed):
    rng = numpy.random.default_rng(seed)
    for _ in range(15):
        host = random_graph(int(rng.integers(4, 9)), float(rng.uniform(0.2, 0.8)), rng)
        for pattern in PATTERNS:
            expected = GraphMatcher(
                to_networkx(host), to_networkx(pattern)
            ).subgraph_is_monomorphic()
            assert contains_subgraph(host, pattern) == expected


def test_structured_hosts():
    # Hosts with large twin classes exercise the quotient search
    host = join(empty_graph(2), turan_graph(20, 3))
    assert contains_subgraph(host, disjoint_union(complete_graph(4), complete_graph(4)))
    assert not contains_subgraph(turan_graph(30, 3), complete_graph(4))
    assert contains_subgraph(
        turan_graph(30, 3).toggle_edge(0, 1),
        disjoint_union(complete_graph(4), complete_graph(3)),
    )
