#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Third-party modules
import networkx as nx
import numpy
import pytest

# Internal modules
from spexlab.errors import CapacityExceeded, ParseError
from spexlab.graphs.covers import to_networkx
from spexlab.graphs.graph import Graph, complete_graph, empty_graph, from_edges
from spexlab.graphs.graph6 import graph6_decode, graph6_encode


###############################################################################
def random_graph(n: int, density: float, seed: int) -> Graph:
    rng = numpy.random.default_rng(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density
    ]
    return from_edges(n, edges)


def nx_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


###############################################################################
def test_small_strings():
    assert graph6_encode(empty_graph(2)) == "A?"
    assert graph6_encode(complete_graph(2)) == "A_"
    assert graph6_decode("A_") == complete_graph(2)
    assert graph6_decode("@") == empty_graph(1)


@pytest.mark.parametrize("n", [1, 2, 5, 7, 12, 30, 62, 63, 64])
def test_agrees_with_networkx(n):
    g = random_graph(n, 0.4, seed=n)
    text = graph6_encode(g)
    assert text == nx_graph6(g)
    decoded = nx.from_graph6_bytes(text.encode("ascii"))
    assert sorted(map(tuple, map(sorted, decoded.edges()))) == list(g.edges)
    assert graph6_decode(text) == g


@pytest.mark.parametrize("text", ["", ">>graph6<<A_", "A", "A~", "A__", "A\n_"])
def test_malformed(text):
    with pytest.raises(ParseError):
        graph6_decode(text)


def test_too_many_vertices():
    big = nx.to_graph6_bytes(nx.empty_graph(65), header=False).decode("ascii").strip()
    with pytest.raises(CapacityExceeded):
        graph6_decode(big)
