#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Third-party modules
import networkx as nx
import numpy
import pytest

# Internal modules
from spexlab import paths
from spexlab.errors import BudgetExceeded
from spexlab.graphs.canon import (
    IsoClassSet,
    canonical_form,
    canonical_graph,
    is_isomorphic,
)
from spexlab.graphs.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    double_star,
    empty_graph,
    from_edges,
    path_graph,
    star_graph,
)
from spexlab.search.generate import (
    Constraint,
    Enumerator,
    enumerate_graphs,
    graphs_up_to,
)


###############################################################################
@pytest.mark.parametrize(
    "g",
    [
        path_graph(6),
        cycle_graph(7),
        double_star(4),
        disjoint_union(complete_graph(3), star_graph(4)),
        from_edges(8, [(0, 1), (1, 2), (2, 0), (3, 4), (5, 6), (6, 7), (7, 5), (2, 3)]),
    ],
)
def test_invariant_under_relabelling(g):
    rng = numpy.random.default_rng(7)
    for _ in range(10):
        order = [int(v) for v in rng.permutation(g.n)]
        h = g.relabel(order)
        assert canonical_form(h) == canonical_form(g)
        assert is_isomorphic(g, h)


def test_distinguishes():
    assert not is_isomorphic(path_graph(4), star_graph(4))
    two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
    assert not is_isomorphic(cycle_graph(6), two_triangles)
    assert canonical_form(cycle_graph(6)) != canonical_form(
        two_triangles
    )


def test_canonical_graph_is_a_representative():
    g = double_star(3)
    assert is_isomorphic(canonical_graph(g), g)
    assert canonical_graph(g.relabel([5, 4, 3, 2, 1, 0])) == canonical_graph(g)


###############################################################################
def test_iso_class_set():
    family = IsoClassSet([path_graph(3), from_edges(3, [(0, 2), (1, 2)])])
    assert len(family) == 1
    assert not family.add(from_edges(3, [(0, 1), (0, 2)]))
    assert family.add(complete_graph(3))
    assert from_edges(3, [(1, 0), (2, 0)]) in family
    assert family.to_graph6() == sorted(family.to_graph6())


def test_minimal_members():
    k2_k1 = disjoint_union(complete_graph(2), empty_graph(1))
    family = IsoClassSet([complete_graph(3), k2_k1])
    assert family.minimal() == IsoClassSet([k2_k1])


###############################################################################
@pytest.mark.parametrize(
    "n, count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)]
)
def test_enumeration_counts(n, count):
    assert len(enumerate_graphs(n)) == count


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_enumeration_matches_atlas(n):
    atlas = IsoClassSet(
        from_edges(n, g.edges()) for g in nx.graph_atlas_g() if g.number_of_nodes() == n
    )
    assert IsoClassSet(enumerate_graphs(n)) == atlas


@pytest.mark.slow
def test_enumeration_seven():
    assert len(enumerate_graphs(7)) == 1044


def test_enumeration_is_sorted():
    level = enumerate_graphs(5)
    forms = [canonical_form(g) for g in level]
    assert forms == sorted(forms)


def test_constrained_enumeration():
    triangle_free = enumerate_graphs(5, Constraint(forbidden=(complete_graph(3),)))
    expected = [
        g for g in enumerate_graphs(5) if not any(
            g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
            for a in range(5) for b in range(a + 1, 5) for c in range(b + 1, 5)
        )
    ]
    assert IsoClassSet(triangle_free) == IsoClassSet(expected)
    assert all(g.max_degree <= 2 for g in enumerate_graphs(6, Constraint(max_degree=2)))


def test_graphs_up_to():
    assert sum(1 for _ in graphs_up_to(4)) == 1 + 1 + 2 + 4 + 11


def test_workers_do_not_change_results():
    assert enumerate_graphs(6, workers=1) == enumerate_graphs(6, workers=2)


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_graphs(11)


###############################################################################
def test_checkpoint_resume(tmp_path, monkeypatch):
    monkeypatch.setenv("SPEXLAB_OUTPUT_DIR", str(tmp_path))
    paths.get_output_dir.cache_clear()
    paths.get_checkpoint_dir.cache_clear()
    try:
        constraint = Constraint(max_degree=3)
        first = enumerate_graphs(5, constraint, workers=1, checkpoint=True)
        enumerator = Enumerator(constraint, workers=1, checkpoint=True)
        assert enumerator.load_level(5) is not None
        k, level = enumerator.resume(5)
        assert k == 5
        assert IsoClassSet(level) == IsoClassSet(first)
        assert enumerate_graphs(5, constraint, workers=1, checkpoint=True) == first
    finally:
        paths.get_output_dir.cache_clear()
        paths.get_checkpoint_dir.cache_clear()
