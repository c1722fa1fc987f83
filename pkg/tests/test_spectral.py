#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Built-in modules
import math

# Third-party modules
import numpy
import pytest

# Internal modules
from spexlab.construct.blocks import assemble, turan_graph, turan_parts
from spexlab.construct.family import h_base
from spexlab.errors import ConvergenceFailure, InvalidParameters
from spexlab.graphs.graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    path_graph,
)
from spexlab.spectral.radius import (
    MIN_TOL,
    Ordering,
    compare_spectral,
    spectral_radius,
    support,
)


###############################################################################
@pytest.mark.parametrize("n", [2, 3, 7, 16, 30])
def test_closed_forms(n):
    assert spectral_radius(complete_graph(n)).rho_hat == pytest.approx(n - 1, abs=1e-8)
    assert spectral_radius(path_graph(n)).rho_hat == pytest.approx(
        2 * math.cos(math.pi / (n + 1)), abs=1e-8
    )
    if n >= 3:
        assert spectral_radius(cycle_graph(n)).rho_hat == pytest.approx(2, abs=1e-8)


@pytest.mark.parametrize("a, b", [(1, 1), (1, 5), (3, 4), (10, 12)])
def test_complete_bipartite(a, b):
    found = spectral_radius(complete_multipartite([a, b]))
    assert found.rho_hat == pytest.approx(math.sqrt(a * b), abs=1e-8)


def test_residual_is_certified():
    found = spectral_radius(path_graph(25), tol=1e-10)
    assert found.residual_bound <= 1e-10
    assert found.lower <= 2 * math.cos(math.pi / 26) <= found.upper


def test_trivial_graphs():
    assert spectral_radius(empty_graph(0)).rho_hat == 0.0
    found = spectral_radius(empty_graph(4))
    assert (found.rho_hat, found.residual_bound) == (0.0, 0.0)


###############################################################################
@pytest.mark.parametrize("n, p", [(9, 3), (13, 4), (20, 2), (40, 5)])
def test_quotient_matches_explicit(n, p):
    model = assemble(Graph(0, ()), turan_parts(n, p))
    explicit = spectral_radius(turan_graph(n, p))
    implicit = spectral_radius(model)
    assert abs(explicit.rho_hat - implicit.rho_hat) <= 2e-9
    assert len(implicit.perron) == n


@pytest.mark.slow
@pytest.mark.parametrize("p", range(2, 7))
def test_quotient_matches_explicit_for_every_turan_graph(p):
    for n in range(p, 65):
        model = assemble(Graph(0, ()), turan_parts(n, p))
        explicit = spectral_radius(turan_graph(n, p))
        implicit = spectral_radius(model)
        assert abs(explicit.rho_hat - implicit.rho_hat) <= 2e-9, n


def test_large_block_model():
    found = spectral_radius(h_base(70, 3, 2))
    assert found.rho_hat == pytest.approx(23 + math.sqrt(598), abs=1e-8)


###############################################################################
def test_compare_spectral():
    joined = h_base(10, 3, 2)
    plain = turan_graph(10, 3)
    assert compare_spectral(joined, plain) is Ordering.GREATER
    assert compare_spectral(plain, joined) is Ordering.LESS
    assert compare_spectral(plain, turan_graph(10, 3)) is Ordering.INDISTINGUISHABLE


def test_adding_an_edge_raises_the_radius():
    rng = numpy.random.default_rng(7)
    g = cycle_graph(9)
    for _ in range(10):
        u, v = (int(x) for x in rng.choice(9, size=2, replace=False))
        if g.has_edge(u, v):
            continue
        bigger = g.toggle_edge(u, v)
        assert compare_spectral(g, bigger) is Ordering.LESS
        g = bigger


@pytest.mark.parametrize("seed", range(4))
def test_average_degree_bound(seed):
    rng = numpy.random.default_rng(seed)
    n = 12
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    g = from_edges(n, edges)
    assert spectral_radius(g).upper >= 2 * g.num_edges / n
    assert spectral_radius(g).lower <= g.max_degree


###############################################################################
def test_errors():
    with pytest.raises(InvalidParameters):
        spectral_radius(path_graph(4), tol=MIN_TOL / 10)
    with pytest.raises(ConvergenceFailure):
        spectral_radius(path_graph(30), max_iter=5)


def test_support():
    found = spectral_radius(disjoint_union(complete_graph(3), complete_graph(2)))
    assert found.rho_hat == pytest.approx(2, abs=1e-8)
    assert support(found) == [0, 1, 2]
    assert len(found.to_dict(verbose=True)["perron"]) == 5
