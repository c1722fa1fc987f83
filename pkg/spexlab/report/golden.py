#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Parameter profiles of the worked families, next to their closed forms.

Each case is computed at p = max(4 mu - 2, chi(F) + 1), the smallest p for
which the containment theorem applies. The splits of F do not depend on p,
so mu is found from a first profile at p = chi(F) + 1.
"""

# Built-in modules
import logging
from dataclasses import dataclass
from math import comb

# Internal modules
from spexlab.graphs.canon import IsoClassSet
from spexlab.graphs.covers import chromatic_number
from spexlab.graphs.graph import Graph, complete_graph, disjoint_union, empty_graph
from spexlab.graphs.named import parse_graph
from spexlab.theory.params import ParamProfile, compute_profile

logger = logging.getLogger(__name__)


###############################################################################
@dataclass(frozen=True)
class ClosedForm:
    q: int
    beta: int
    mu: int
    lam: int
    B: tuple[Graph, ...]

    @property
    def B_set(self) -> IsoClassSet:
        return IsoClassSet(self.B)


def closed_form(family: str, size: int) -> ClosedForm:
    """Closed forms by token family, `size` being the number after the colon."""
    if family == "matching":
        t = size
        return ClosedForm(t, t, 1, 1, (complete_graph(t),))
    if family == "star":
        leaves = size - 1
        return ClosedForm(1, 1, 1, leaves, (complete_graph(1),))
    if family == "path":
        q = size // 2
        return ClosedForm(q, q, 2, 2 if size % 2 else 1, (complete_graph(q),))
    if family == "cycle":
        q = (size + 1) // 2
        return ClosedForm(q, q, 2, 1 if size % 2 else 2, (complete_graph(q),))
    if family == "clique":
        q = comb(size - 1, 2) + 1
        beta = 2 + comb(size - 2, 2)
        if beta < q:
            b = disjoint_union(complete_graph(2), empty_graph(comb(size - 2, 2)))
        else:
            b = complete_graph(q)
        return ClosedForm(q, beta, size - 1, 1, (b,))
    raise KeyError(family)


GOLDEN_TOKENS = (
    "matching:2",
    "matching:3",
    "star:3",
    "star:4",
    "star:5",
    "path:4",
    "path:5",
    "path:6",
    "path:7",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "cycle:7",
    "clique:3",
    "clique:4",
)


###############################################################################
def golden_p(f: Graph) -> int:
    chi = chromatic_number(f)
    first = compute_profile(f, chi + 1)
    return max(4 * first.mu - 2, chi + 1)


def golden_profile(token: str) -> ParamProfile:
    f = parse_graph(token)
    return compute_profile(f, golden_p(f))


def golden_row(token: str) -> dict:
    family, _, size = token.partition(":")
    expected = closed_form(family, int(size))
    profile = golden_profile(token)
    computed = (profile.q, profile.beta, profile.mu, profile.lam)
    wanted = (expected.q, expected.beta, expected.mu, expected.lam)
    match = computed == wanted and profile.B == expected.B_set
    if not match:
        logger.warning("%s: computed %s, closed form %s", token, computed, wanted)
    return {
        "F": token,
        "p": profile.p,
        "q": profile.q,
        "q_closed": expected.q,
        "beta": profile.beta,
        "beta_closed": expected.beta,
        "mu": profile.mu,
        "mu_closed": expected.mu,
        "lambda": profile.lam,
        "lambda_closed": expected.lam,
        "B": " ".join(profile.B.to_graph6()),
        "B_closed": " ".join(expected.B_set.to_graph6()),
        "match": match,
    }


def golden_table(tokens: tuple[str, ...] = GOLDEN_TOKENS) -> list[dict]:
    return [golden_row(token) for token in tokens]
