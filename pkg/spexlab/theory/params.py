#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The parameter profile of a forbidden graph F for the edge blow-up F^{p+1}.

Everything is computed from definitions over the decomposition family:
beta and q are the smallest covering and independent covering numbers,
B is the family of graphs spanned by small coverings, U and mu describe
which splits of F reach q, and lambda is the smallest degree met inside a
minimum independent covering of a bipartite member.
"""

# Built-in modules
import logging
from dataclasses import dataclass, field

# Internal modules
from spexlab.errors import EmptyFamily, InternalInvariantViolation
from spexlab.graphs.canon import IsoClassSet
from spexlab.graphs.covers import (
    coverings_strictly_below,
    independent_covering_number,
    independent_coverings_of_size,
    vertex_cover_number,
)
from spexlab.graphs.graph import Graph, VertexSet, complete_graph, induced_subgraph
from spexlab.graphs.graph6 import graph6_encode
from spexlab.theory.blowup import (
    BlowupSpec,
    bipartite_subfamily,
    decomposition_family,
    decomposition_family_oracle,
    vertex_split,
)

logger = logging.getLogger(__name__)


###############################################################################
def param_beta(family: IsoClassSet) -> int:
    if not family:
        raise EmptyFamily("beta of an empty family")
    return min(vertex_cover_number(m) for m in family)


def param_q(family: IsoClassSet) -> int:
    bipartite = [m for m in family if m.is_bipartite]
    if not bipartite:
        raise InternalInvariantViolation(
            "the decomposition family has no bipartite member"
        )
    return min(independent_covering_number(m) for m in bipartite)


def family_B(
    family: IsoClassSet, beta: int, q: int, minimal: bool = True
) -> IsoClassSet:
    """
    {K_q} when beta == q, otherwise the graphs M[S] for coverings S of
    members M with |S| < q. Only B-freeness is ever used, so by default
    members containing another member are dropped.
    """
    if beta == q:
        return IsoClassSet([complete_graph(q)])
    spanned = IsoClassSet()
    for m in family:
        for cover in coverings_strictly_below(m, q):
            spanned.add(induced_subgraph(m, cover))
    return spanned.minimal() if minimal else spanned


def family_U_and_mu(f: Graph, q: int) -> tuple[list[VertexSet], int]:
    qualifying = []
    for mask in range(1, 1 << f.n):
        if not f.is_independent(f.full_mask & ~mask):
            continue
        split = vertex_split(f, VertexSet(mask, f.n))
        if split.is_bipartite and independent_covering_number(split) == q:
            qualifying.append(VertexSet(mask, f.n))
    if not qualifying:
        raise InternalInvariantViolation(f"no vertex set of F reaches q={q}")
    mu = min(max(f.degree(x) for x in u) for u in qualifying)
    return qualifying, mu


def param_lambda(mstar: IsoClassSet, q: int) -> int:
    """Minimum of d_M(x) over members M, size-q independent coverings L, x in L."""
    if not mstar:
        raise EmptyFamily("lambda of an empty family")
    degrees = [
        m.degree(x)
        for m in mstar
        for cover in independent_coverings_of_size(m, q)
        for x in cover
    ]
    if not degrees:
        raise EmptyFamily(f"no member has an independent covering of size {q}")
    return min(degrees)


###############################################################################
@dataclass
class ParamProfile:
    """All parameters of one (F, p)."""

    F: Graph
    p: int
    chi_F: int
    M: IsoClassSet
    Mstar: IsoClassSet
    beta: int
    q: int
    B: IsoClassSet
    U_family: list[VertexSet]
    mu: int
    lam: int
    B_literal: IsoClassSet = field(default_factory=IsoClassSet)

    def __post_init__(self):
        if self.beta > self.q:
            raise InternalInvariantViolation(f"beta={self.beta} exceeds q={self.q}")
        if self.mu < 1 or self.lam < 1 or not self.B:
            raise InternalInvariantViolation(
                "mu and lambda must be positive and B nonempty"
            )

    @property
    def spec(self) -> BlowupSpec:
        return BlowupSpec(self.F, self.p)

    def to_dict(self) -> dict:
        return {
            "F": graph6_encode(self.F),
            "p": self.p,
            "chi_F": self.chi_F,
            "beta": self.beta,
            "q": self.q,
            "mu": self.mu,
            "lambda": self.lam,
            "B": self.B.to_graph6(),
            "B_literal": self.B_literal.to_graph6(),
            "M": self.M.to_graph6(),
            "Mstar": self.Mstar.to_graph6(),
            "U": [u.mask for u in self.U_family],
        }


def compute_profile(
    f: Graph,
    p: int,
    oracle: bool = False,
    t_max: int = 3,
    m_vertex_max: int = 8,
) -> ParamProfile:
    """
    Profile of F (isolated vertices removed first). With `oracle` the
    decomposition family comes from the definition instead of splits.
    """
    spec = BlowupSpec.of(f, p)
    if oracle:
        family = decomposition_family_oracle(
            spec, t_max=t_max, m_vertex_max=m_vertex_max
        )
    else:
        family = decomposition_family(spec)
    beta = param_beta(family)
    q = param_q(family)
    literal = family_B(family, beta, q, minimal=False)
    mstar = bipartite_subfamily(family, q)
    u_family, mu = family_U_and_mu(spec.F, q)
    lam = param_lambda(mstar, q)
    logger.info(
        "Profile of %s with p=%d: beta=%d q=%d mu=%d lambda=%d",
        spec.F,
        p,
        beta,
        q,
        mu,
        lam,
    )
    return ParamProfile(
        F=spec.F,
        p=p,
        chi_F=spec.chi,
        M=family,
        Mstar=mstar,
        beta=beta,
        q=q,
        B=literal.minimal() if beta < q else literal,
        U_family=u_family,
        mu=mu,
        lam=lam,
        B_literal=literal,
    )


###############################################################################
def theorem_conditions(profile: ParamProfile, p: int | None = None) -> dict:
    """Whether the spectral containment theorem covers (F, p)."""
    p = profile.p if p is None else p
    p_min = max(4 * profile.mu - 2, profile.chi_F + 1)
    bipartite = profile.F.is_bipartite
    q_F = independent_covering_number(profile.F) if bipartite else None
    structural = (not bipartite) or profile.q < q_F
    return {
        "p_min": p_min,
        "p_ok": p >= p_min,
        "F_bipartite": bipartite,
        "q_F": q_F,
        "structural_ok": structural,
        "applies": p >= p_min and structural,
    }


def turan_regime(profile: ParamProfile) -> str:
    """Which classical description of EX(n, F^{p+1}) holds for large n."""
    if not profile.F.is_bipartite:
        return "non_bipartite"
    if profile.q < independent_covering_number(profile.F):
        return "bipartite_q_below_qF"
    return "bipartite_q_equals_qF"
