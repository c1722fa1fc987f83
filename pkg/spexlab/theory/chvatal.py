#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The Chvátal–Hanson function f(nu, delta), the maximum number of edges of a
graph with matching number at most nu and maximum degree at most delta, and
the family of graphs placed inside one Turán class of the extremal
construction.
"""

# Built-in modules
import logging

# Internal modules
from spexlab.errors import BudgetExceeded, InvalidParameters
from spexlab.graphs.canon import IsoClassSet
from spexlab.graphs.graph import complete_graph, disjoint_union, empty_graph
from spexlab.search.generate import Constraint, enumerate_graphs, graphs_up_to

logger = logging.getLogger(__name__)

EVEN_LAMBDA_LIMIT = 6
BRUTEFORCE_MAX_VERTICES = 9


###############################################################################
def chvatal_hanson(nu: int, delta: int) -> int:
    if nu <= 0 or delta <= 0:
        return 0
    return nu * delta + (delta // 2) * (nu // -(-delta // 2))


def chvatal_hanson_bruteforce(nu: int, delta: int) -> int:
    """Most edges over graphs on up to nu(delta+1)+delta vertices, capped at 9."""
    order = min(nu * (delta + 1) + delta, BRUTEFORCE_MAX_VERTICES)
    constraint = Constraint(max_degree=delta, max_matching=nu)
    return max(g.num_edges for g in graphs_up_to(order, constraint))


###############################################################################
def family_D(lam: int, max_even_lambda: int = 4) -> IsoClassSet:
    """
    The graphs reaching f(lam-1, lam-1). For lam = 1 that is only the graph
    with no vertices, for odd lam it is two disjoint copies of K_lam, and
    for even lam it is found by enumerating the graphs on 2 lam - 1 vertices
    with maximum degree lam - 1.
    """
    if lam < 1:
        raise InvalidParameters(f"lambda must be positive, got {lam}")
    if lam == 1:
        return IsoClassSet([empty_graph(0)])
    if lam % 2:
        return IsoClassSet([disjoint_union(complete_graph(lam), complete_graph(lam))])

    limit = min(max_even_lambda, EVEN_LAMBDA_LIMIT)
    if lam > limit:
        raise BudgetExceeded(
            f"the family for even lambda={lam} is enumerated only up to {limit}"
        )
    target = lam * (2 * lam - 3) // 2
    level = enumerate_graphs(2 * lam - 1, Constraint(max_degree=lam - 1))
    family = IsoClassSet(
        g for g in level if g.num_edges == target and g.max_degree == lam - 1
    )
    logger.info("D family for lambda=%d: %d classes", lam, len(family))
    return family
