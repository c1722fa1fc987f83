#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Checks the extremal claims on one small instance.

Two kinds of claims are separated. Those that hold for every n are
asserted: the lower construction is F^{p+1}-free, its spectral radius does
not exceed spex, and spex is at least the Turán lower bound. Those that
only hold for large n are reported: SPEX inside EX, spex below the radius
of the upper construction, and ex within the edge count of the upper
construction.
"""

# Built-in modules
import logging
import time
from dataclasses import dataclass, field

# Internal modules
from spexlab.construct.blocks import turan_rho_lower_bound
from spexlab.construct.family import (
    ConstructionFamily,
    build_H_family,
    h_base,
    h_edge_count,
)
from spexlab.errors import InvalidParameters
from spexlab.graphs.canon import IsoClassSet
from spexlab.graphs.graph import Graph
from spexlab.graphs.graph6 import graph6_encode
from spexlab.search.oracle import (
    ex_bruteforce,
    free_graphs,
    hillclimb_restarts,
    is_blowup_free,
    spex_bruteforce,
)
from spexlab.spectral.radius import (
    DEFAULT_TOL,
    Ordering,
    SpectralResult,
    compare_results,
    spectral_radius,
)
from spexlab.theory.params import ParamProfile, theorem_conditions, turan_regime

logger = logging.getLogger(__name__)


###############################################################################
@dataclass
class SearchReport:
    n: int
    p: int
    F: str
    ex_value: int | None = None
    EX_classes: IsoClassSet = field(default_factory=IsoClassSet)
    spex_value: SpectralResult | None = None
    SPEX_classes: IsoClassSet = field(default_factory=IsoClassSet)
    spex_subset_ex: bool | None = None
    sandwich_lower_ok: bool = True
    construction_free_ok: bool = True
    turan_bound_ok: bool = True
    rho_h_lower: SpectralResult | None = None
    rho_h_upper: SpectralResult | None = None
    spex_below_upper: bool | None = None
    ex_within_upper: bool | None = None
    ex_equals_upper: bool | None = None
    enumerated_count: int = 0
    runtime: float = 0.0
    theorem: dict = field(default_factory=dict)
    regime: str | None = None

    @property
    def asserted_ok(self) -> bool:
        return (
            self.construction_free_ok
            and self.sandwich_lower_ok
            and self.turan_bound_ok
        )

    def to_dict(self) -> dict:
        def rho(r: SpectralResult | None):
            return None if r is None else r.to_dict()

        return {
            "n": self.n,
            "p": self.p,
            "F": self.F,
            "ex": self.ex_value,
            "EX": self.EX_classes.to_graph6(),
            "spex": rho(self.spex_value),
            "SPEX": self.SPEX_classes.to_graph6(),
            "SPEX_up_to_tolerance": len(self.SPEX_classes) > 1,
            "spex_subset_ex": self.spex_subset_ex,
            "sandwich_lower_ok": self.sandwich_lower_ok,
            "construction_free_ok": self.construction_free_ok,
            "turan_bound_ok": self.turan_bound_ok,
            "rho_H_lower": rho(self.rho_h_lower),
            "rho_H_upper": rho(self.rho_h_upper),
            "spex_below_upper": self.spex_below_upper,
            "ex_within_upper": self.ex_within_upper,
            "ex_equals_upper": self.ex_equals_upper,
            "enumerated_count": self.enumerated_count,
            "asserted_ok": self.asserted_ok,
            "theorem": self.theorem,
            "regime": self.regime,
        }

    def to_row(self) -> dict:
        """One line of the verification table."""

        def value(r: SpectralResult | None):
            return None if r is None else r.rho_hat

        return {
            "n": self.n,
            "ex": self.ex_value,
            "spex": value(self.spex_value),
            "rho_H_lower": value(self.rho_h_lower),
            "rho_H_upper": value(self.rho_h_upper),
            "free": self.construction_free_ok,
            "lower_ok": self.sandwich_lower_ok,
            "spex_subset_ex": self.spex_subset_ex,
            "spex_below_upper": self.spex_below_upper,
            "ex_within_upper": self.ex_within_upper,
        }


###############################################################################
def _family_or_none(
    n: int, profile: ParamProfile, lam: int
) -> ConstructionFamily | None:
    try:
        return build_H_family(n, profile.p, profile.q, lam, profile.B)
    except InvalidParameters as error:
        logger.info("No H family at n=%d, lambda=%d: %s", n, lam, error)
        return None


def _best(results: list[SpectralResult]) -> SpectralResult | None:
    return max(results, key=lambda r: r.rho_hat, default=None)


def verify_instance(
    n: int,
    profile: ParamProfile,
    tol: float = DEFAULT_TOL,
    allow_ten: bool = False,
    workers: int | None = None,
) -> SearchReport:
    spec = profile.spec
    started = time.perf_counter()
    report = SearchReport(n=n, p=profile.p, F=graph6_encode(profile.F))
    report.theorem = theorem_conditions(profile)
    report.regime = turan_regime(profile)

    lower = _family_or_none(n, profile, 1)
    upper = _family_or_none(n, profile, profile.lam)

    # Freeness of the lower construction
    checked: list[Graph] = []
    if lower is not None:
        checked = lower.graphs + [h_base(n, profile.p, profile.q)]
    report.construction_free_ok = all(is_blowup_free(g, spec) for g in checked)

    # Exhaustive side
    ex_value, ex_classes = ex_bruteforce(n, spec, workers)
    spex, spex_classes = spex_bruteforce(
        n, spec, tol, allow_ten=allow_ten, workers=workers
    )
    report.ex_value, report.EX_classes = ex_value, ex_classes
    report.spex_value, report.SPEX_classes = spex, spex_classes
    report.enumerated_count = len(free_graphs(n, spec, workers))
    report.spex_subset_ex = all(g in ex_classes for g in spex_classes)

    report.turan_bound_ok = spex.upper >= turan_rho_lower_bound(n, profile.p)

    if lower is not None:
        report.rho_h_lower = _best([spectral_radius(g, tol) for g in lower.graphs])
        report.sandwich_lower_ok = (
            compare_results(report.rho_h_lower, spex) is not Ordering.GREATER
        )
    if upper is not None:
        report.rho_h_upper = _best([spectral_radius(g, tol) for g in upper.graphs])
        ordering = compare_results(spex, report.rho_h_upper)
        report.spex_below_upper = ordering is Ordering.LESS
        bound = h_edge_count(n, profile.p, profile.q, profile.lam, profile.B)
        report.ex_within_upper = ex_value <= bound
        report.ex_equals_upper = ex_value == bound

    report.runtime = time.perf_counter() - started
    verdict = "ok" if report.asserted_ok else "FAILED"
    logger.info(
        "n=%d: asserted checks %s, SPEX in EX: %s", n, verdict, report.spex_subset_ex
    )
    return report


def containment_trail(reports: list[SearchReport]) -> int | None:
    """Smallest n from which SPEX inside EX held for the rest of the range."""
    since = None
    for report in sorted(reports, key=lambda r: r.n):
        if report.spex_subset_ex:
            since = report.n if since is None else since
        else:
            since = None
    return since


###############################################################################
def hillclimb_check(
    n: int,
    profile: ParamProfile,
    seeds: list[int],
    iters: int = 2000,
    tol: float = DEFAULT_TOL,
    slack: float = 1e-6,
    workers: int | None = None,
) -> dict:
    """
    Local search from random free graphs and from the lower construction.
    Finding a free graph whose radius beats every member of the upper
    construction by more than `slack` is worth a warning but never fails
    a run.
    """
    members = build_H_family(n, profile.p, profile.q, 1, profile.B).graphs
    upper = build_H_family(n, profile.p, profile.q, profile.lam, profile.B).graphs
    construction = _best([spectral_radius(g, tol) for g in upper])
    graph, found = hillclimb_restarts(
        n, profile.spec, seeds, iters=iters, starts=members, tol=tol, workers=workers
    )
    exceeded = found.rho_hat > construction.rho_hat + slack
    if exceeded:
        logger.warning(
            "Hill climbing found rho=%.9f above the construction's %.9f at n=%d: %s",
            found.rho_hat,
            construction.rho_hat,
            n,
            graph6_encode(graph),
        )
    return {
        "n": n,
        "seeds": list(seeds),
        "iters": iters,
        "best": graph6_encode(graph),
        "rho_best": found.to_dict(),
        "rho_construction": construction.to_dict(),
        "exceeds_construction": exceeded,
    }
