#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Third-party modules
import pytest

# Internal modules
from spexlab.construct.blocks import turan_graph
from spexlab.errors import BudgetExceeded, InvalidParameters
from spexlab.graphs.canon import IsoClassSet
from spexlab.graphs.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    matching_graph,
    path_graph,
    star_graph,
)
from spexlab.graphs.graph6 import graph6_encode
from spexlab.search.oracle import (
    ex_bruteforce,
    hillclimb_restarts,
    hillclimb_spex,
    is_blowup_free,
    spex_bruteforce,
)
from spexlab.search.verify import (
    SearchReport,
    containment_trail,
    hillclimb_check,
    verify_instance,
)
from spexlab.theory.blowup import BlowupSpec
from spexlab.theory.params import compute_profile

TRIANGLE = BlowupSpec(complete_graph(2), 2)


###############################################################################
def test_is_blowup_free():
    assert is_blowup_free(cycle_graph(5), TRIANGLE)
    assert not is_blowup_free(complete_graph(3), TRIANGLE)
    bowtie = BlowupSpec(path_graph(3), 2)
    assert is_blowup_free(complete_graph(4), bowtie)
    assert not is_blowup_free(complete_graph(5), bowtie)


def test_mantel():
    assert ex_bruteforce(5, TRIANGLE)[0] == 6
    value, classes = ex_bruteforce(6, TRIANGLE)
    assert value == 9
    assert classes == IsoClassSet([turan_graph(6, 2)])


def test_spex_small():
    found, classes = spex_bruteforce(4, TRIANGLE)
    assert found.rho_hat == pytest.approx(2, abs=1e-8)
    assert classes == IsoClassSet([cycle_graph(4)])


def test_spex_budget():
    with pytest.raises(BudgetExceeded):
        spex_bruteforce(10, TRIANGLE)
    with pytest.raises(BudgetExceeded):
        spex_bruteforce(11, TRIANGLE, allow_ten=True)


@pytest.mark.slow
@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", range(4, 9))
def test_spectral_turan(n, p):
    _, classes = spex_bruteforce(n, BlowupSpec(complete_graph(2), p))
    assert classes == IsoClassSet([turan_graph(n, p)])


###############################################################################
@pytest.mark.slow
@pytest.mark.parametrize("n", range(4, 9))
def test_verify_matching(n):
    report = verify_instance(n, compute_profile(matching_graph(2), 3))
    assert report.asserted_ok
    assert report.enumerated_count > 0
    assert report.to_dict()["asserted_ok"]
    assert report.to_row()["n"] == n


@pytest.mark.slow
@pytest.mark.parametrize("n", range(4, 9))
def test_verify_star_below_lemma_range(n):
    profile = compute_profile(star_graph(3), 2, oracle=True, m_vertex_max=5)
    assert (profile.q, profile.mu, profile.lam) == (1, 1, 2)
    report = verify_instance(n, profile)
    assert report.asserted_ok


@pytest.mark.slow
def test_verify_single_edge():
    profile = compute_profile(complete_graph(2), 2, oracle=True, m_vertex_max=4)
    report = verify_instance(8, profile)
    assert report.asserted_ok
    assert report.spex_subset_ex
    assert report.SPEX_classes == IsoClassSet([turan_graph(8, 2)])
    assert report.EX_classes == IsoClassSet([turan_graph(8, 2)])


def test_containment_trail():
    def report(n, flag):
        return SearchReport(n=n, p=3, F="A_", spex_subset_ex=flag)

    reports = [report(7, True), report(4, True), report(5, False), report(6, True)]
    assert containment_trail(reports) == 6
    assert containment_trail([report(4, False), report(5, None)]) is None
    assert containment_trail([]) is None


###############################################################################
def test_hillclimb_is_deterministic():
    spec = BlowupSpec(matching_graph(2), 3)
    first, first_rho = hillclimb_spex(9, spec, iters=150, seed=3)
    second, second_rho = hillclimb_spex(9, spec, iters=150, seed=3)
    assert graph6_encode(first) == graph6_encode(second)
    assert first_rho.rho_hat == second_rho.rho_hat
    assert is_blowup_free(first, spec)


def test_hillclimb_never_goes_down():
    start = turan_graph(8, 2)
    graph, found = hillclimb_spex(8, TRIANGLE, iters=100, seed=1, start=start)
    assert is_blowup_free(graph, TRIANGLE)
    assert found.rho_hat >= 4 - 1e-9


def test_hillclimb_errors():
    with pytest.raises(InvalidParameters):
        hillclimb_spex(4, TRIANGLE, start=complete_graph(4))
    with pytest.raises(InvalidParameters):
        hillclimb_spex(65, TRIANGLE)
    with pytest.raises(InvalidParameters):
        hillclimb_restarts(5, TRIANGLE, seeds=[])


def test_hillclimb_restarts_worker_count():
    single = hillclimb_restarts(7, TRIANGLE, seeds=[0, 1, 2], iters=60, workers=1)
    pooled = hillclimb_restarts(7, TRIANGLE, seeds=[0, 1, 2], iters=60, workers=2)
    assert graph6_encode(single[0]) == graph6_encode(pooled[0])


def test_hillclimb_on_empty_start():
    graph, found = hillclimb_spex(1, TRIANGLE, start=empty_graph(1))
    assert found.rho_hat == 0.0


@pytest.mark.slow
def test_hillclimb_check():
    profile = compute_profile(matching_graph(2), 3)
    result = hillclimb_check(20, profile, seeds=list(range(8)), iters=300)
    assert result["n"] == 20
    assert result["rho_best"]["rho"] >= result["rho_construction"]["rho"] - 1e-9
    assert isinstance(result["exceeds_construction"], bool)
