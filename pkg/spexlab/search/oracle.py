#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exhaustive and heuristic searches over F^{p+1}-free graphs.

`ex_bruteforce` and `spex_bruteforce` scan every free class on n vertices,
which the pruned generator produces directly. Beyond that range
`hillclimb_spex` gives a certified lower bound on spex by local search.
"""

# Built-in modules
import logging
from functools import lru_cache, partial
from itertools import combinations
from multiprocessing import Pool

# Third-party modules
import numpy

# Internal modules
from spexlab.errors import BudgetExceeded, InvalidParameters
from spexlab.graphs.canon import IsoClassSet
from spexlab.graphs.graph import MAX_VERTICES, Graph, empty_graph
from spexlab.graphs.subgraph import contains_subgraph
from spexlab.paths import get_workers
from spexlab.search.generate import (
    ENUMERATION_MAX_VERTICES,
    Constraint,
    enumerate_graphs,
)
from spexlab.spectral.radius import (
    DEFAULT_TOL,
    Ordering,
    SpectralResult,
    compare_results,
    spectral_radius,
)
from spexlab.theory.blowup import BlowupSpec

logger = logging.getLogger(__name__)

SPEX_MAX_VERTICES = 9


###############################################################################
def is_blowup_free(g: Graph, spec: BlowupSpec) -> bool:
    return not contains_subgraph(g, spec.blowup)


@lru_cache(maxsize=32)
def free_graphs(
    n: int, spec: BlowupSpec, workers: int | None = None
) -> tuple[Graph, ...]:
    """Every F^{p+1}-free class on n vertices, sorted by canonical form."""
    if n > ENUMERATION_MAX_VERTICES:
        raise BudgetExceeded(
            f"exhaustive search stops at {ENUMERATION_MAX_VERTICES} vertices"
        )
    level = enumerate_graphs(n, Constraint(forbidden=(spec.blowup,)), workers=workers)
    logger.info("%d free classes on %d vertices", len(level), n)
    return tuple(level)


def ex_bruteforce(
    n: int, spec: BlowupSpec, workers: int | None = None
) -> tuple[int, IsoClassSet]:
    level = free_graphs(n, spec, workers)
    best = max(g.num_edges for g in level)
    return best, IsoClassSet(g for g in level if g.num_edges == best)


def spex_bruteforce(
    n: int,
    spec: BlowupSpec,
    tol: float = DEFAULT_TOL,
    allow_ten: bool = False,
    workers: int | None = None,
) -> tuple[SpectralResult, IsoClassSet]:
    """
    The largest certified spectral radius over free classes, with every
    class whose interval overlaps the winner's.
    """
    limit = ENUMERATION_MAX_VERTICES if allow_ten else SPEX_MAX_VERTICES
    if n > limit:
        raise BudgetExceeded(
            f"spex is searched exhaustively up to {limit} vertices, got {n}"
        )
    level = free_graphs(n, spec, workers)
    results = [spectral_radius(g, tol) for g in level]
    best = max(range(len(level)), key=lambda i: results[i].rho_hat)
    winner = results[best]
    ties = IsoClassSet(
        g
        for g, r in zip(level, results)
        if compare_results(r, winner) is Ordering.INDISTINGUISHABLE
    )
    if len(ties) > 1:
        logger.info("%d classes tie with spex up to tolerance", len(ties))
    return winner, ties


###############################################################################
def random_free_graph(n: int, spec: BlowupSpec, rng: numpy.random.Generator) -> Graph:
    """Visit pairs in random order, keeping each coin-flipped edge that stays free."""
    g = empty_graph(n)
    pairs = list(combinations(range(n), 2))
    for index in rng.permutation(len(pairs)):
        if rng.random() < 0.5:
            continue
        u, v = pairs[index]
        candidate = g.toggle_edge(u, v)
        if is_blowup_free(candidate, spec):
            g = candidate
    return g


def hillclimb_spex(
    n: int,
    spec: BlowupSpec,
    iters: int = 2000,
    seed: int = 0,
    start: Graph | None = None,
    tol: float = DEFAULT_TOL,
) -> tuple[Graph, SpectralResult]:
    """
    Each step toggles a random pair, or with probability one half moves a
    random edge to a random non-edge. A step is kept only when the graph
    stays free and its certified radius is strictly larger.
    """
    if n > MAX_VERTICES:
        raise InvalidParameters(
            f"hill climbing needs explicit graphs, n={n} exceeds {MAX_VERTICES}"
        )
    rng = numpy.random.default_rng(seed)
    if start is None:
        current = random_free_graph(n, spec, rng)
    elif start.n != n or not is_blowup_free(start, spec):
        raise InvalidParameters("the start graph must be free and have n vertices")
    else:
        current = start
    score = spectral_radius(current, tol)
    if n < 2:
        return current, score

    for _ in range(iters):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        move = rng.random() < 0.5
        candidate = current.toggle_edge(u, v)
        if move and current.num_edges and not current.has_edge(u, v):
            a, b = current.edges[int(rng.integers(current.num_edges))]
            candidate = candidate.toggle_edge(a, b)
        # Deleting edges never raises the radius
        if candidate.num_edges < current.num_edges:
            continue
        if not is_blowup_free(candidate, spec):
            continue
        result = spectral_radius(candidate, tol)
        if compare_results(result, score) is Ordering.GREATER:
            current, score = candidate, result
    return current, score


def _climb(
    job: tuple[int, Graph | None], n: int, spec: BlowupSpec, iters: int, tol: float
):
    seed, start = job
    return hillclimb_spex(n, spec, iters=iters, seed=seed, start=start, tol=tol)


def hillclimb_restarts(
    n: int,
    spec: BlowupSpec,
    seeds: list[int],
    iters: int = 2000,
    starts: list[Graph] = (),
    tol: float = DEFAULT_TOL,
    workers: int | None = None,
) -> tuple[Graph, SpectralResult]:
    """Best of one climb per seed from a random free graph and one per start graph."""
    jobs = [(seed, None) for seed in seeds] + [(0, start) for start in starts]
    if not jobs:
        raise InvalidParameters("hill climbing needs at least one seed or start graph")
    work = partial(_climb, n=n, spec=spec, iters=iters, tol=tol)
    workers = workers or get_workers()
    if workers > 1 and len(jobs) > 1:
        with Pool(processes=min(workers, len(jobs))) as pool:
            outcomes = pool.map(work, jobs)
    else:
        outcomes = list(map(work, jobs))
    return max(outcomes, key=lambda pair: pair[1].rho_hat)
