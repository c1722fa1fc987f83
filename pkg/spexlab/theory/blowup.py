#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Edge blow-ups, vertex splits and decomposition families.

F^{p+1} replaces every edge of F by its own copy of K_{p+1}. Splitting a
vertex set U of F replaces each v in U by d_F(v) independent copies, each
taking one of the edges of v. The decomposition family is the set of all
such splits of F, which is the family of minimal graphs that force F^{p+1}
when joined with a large (p-1)-partite Turán graph, as long as
2 <= chi(F) <= p - 1. The oracle below checks that second description
directly on small instances.
"""

# Built-in modules
import logging
from dataclasses import dataclass
from functools import cached_property

# Internal modules
from spexlab.construct.blocks import turan_graph
from spexlab.errors import (
    BudgetExceeded,
    EmptyForbiddenGraph,
    InvalidParameters,
    LemmaInapplicable,
)
from spexlab.graphs.canon import IsoClassSet
from spexlab.graphs.covers import chromatic_number, independent_covering_number
from spexlab.graphs.graph import (
    Graph,
    VertexSet,
    check_capacity,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    iter_bits,
    join,
)
from spexlab.graphs.subgraph import contains_subgraph
from spexlab.search.generate import enumerate_graphs

logger = logging.getLogger(__name__)

# Oracle limits
ORACLE_MAX_BLOWUP = 12
ORACLE_MAX_T = 4
ORACLE_MAX_M = 8


###############################################################################
def strip_isolated(f: Graph) -> Graph:
    if f.num_edges == 0:
        raise EmptyForbiddenGraph(f"the forbidden graph on {f.n} vertices has no edges")
    return induced_subgraph(f, VertexSet(f.full_mask & ~f.isolated.mask, f.n))


###############################################################################
@dataclass(frozen=True)
class BlowupSpec:
    """A forbidden graph F without isolated vertices and the clique parameter p."""

    F: Graph
    p: int

    def __post_init__(self):
        if self.p < 2:
            raise InvalidParameters(f"p must be at least 2, got {self.p}")
        if self.F.num_edges == 0:
            raise EmptyForbiddenGraph("the forbidden graph has no edges")
        if self.F.min_degree < 1:
            raise InvalidParameters("F has isolated vertices, use BlowupSpec.of")

    @classmethod
    def of(cls, f: Graph, p: int) -> "BlowupSpec":
        return cls(strip_isolated(f), p)

    @property
    def blowup_order(self) -> int:
        return self.F.n + (self.p - 1) * self.F.num_edges

    @cached_property
    def chi(self) -> int:
        return chromatic_number(self.F)

    @cached_property
    def blowup(self) -> Graph:
        return edge_blowup(self)


###############################################################################
def edge_blowup(spec: BlowupSpec) -> Graph:
    """Original vertices keep their labels; the fresh ones follow, edge by edge."""
    f, p = spec.F, spec.p
    check_capacity(spec.blowup_order)
    edges = []
    fresh = f.n
    for u, v in f.edges:
        clique = [u, v] + list(range(fresh, fresh + p - 1))
        fresh += p - 1
        edges.extend((a, b) for i, a in enumerate(clique) for b in clique[i + 1 :])
    return from_edges(spec.blowup_order, edges)


def vertex_split(f: Graph, u: VertexSet) -> Graph:
    """
    Every vertex of `u` is split at once: an edge with both ends in `u`
    becomes an edge between two fresh copies. Vertices outside `u` come
    first in their original order, copies follow in edge order.
    """
    if u.n != f.n:
        raise InvalidParameters(f"vertex set over {u.n} vertices used on {f.n}")
    kept = [v for v in f.vertices if v not in u]
    index = {v: i for i, v in enumerate(kept)}
    n = len(kept) + sum(f.degree(v) for v in u)
    check_capacity(n)
    fresh = len(kept)
    edges = []
    for a, b in f.edges:
        ends = []
        for x in (a, b):
            if x in u:
                ends.append(fresh)
                fresh += 1
            else:
                ends.append(index[x])
        edges.append(tuple(ends))
    return from_edges(n, edges)


###############################################################################
def decomposition_family(spec: BlowupSpec) -> IsoClassSet:
    """All splits of F up to isomorphism."""
    if not 2 <= spec.chi <= spec.p - 1:
        raise LemmaInapplicable(
            f"splits describe the decomposition family only for 2 <= chi(F) <= p - 1,"
            f" here chi(F)={spec.chi} and p={spec.p}"
        )
    f = spec.F
    family = IsoClassSet(
        vertex_split(f, VertexSet(mask, f.n)) for mask in range(1 << f.n)
    )
    logger.info("Decomposition family of %s: %d classes", f, len(family))
    return family


def bipartite_subfamily(family: IsoClassSet, q: int) -> IsoClassSet:
    return family.filter(
        lambda m: m.is_bipartite and independent_covering_number(m) == q
    )


###############################################################################
class DecompositionOracle:
    """
    Finds the decomposition family from its definition: the minimal graphs M
    such that F^{p+1} embeds into (M plus t isolated vertices) joined with
    T_{p-1}((p-1)t). Embedding only gets easier as t grows, so one check at
    t = t_max decides every t <= t_max.
    """

    def __init__(
        self, spec: BlowupSpec, t_max: int = 3, m_vertex_max: int = ORACLE_MAX_M
    ):
        if spec.blowup_order > ORACLE_MAX_BLOWUP:
            raise BudgetExceeded(
                f"|V(F^(p+1))| = {spec.blowup_order}"
                f" exceeds the oracle limit {ORACLE_MAX_BLOWUP}"
            )
        if not 1 <= t_max <= ORACLE_MAX_T:
            raise BudgetExceeded(f"t_max must lie in 1..{ORACLE_MAX_T}, got {t_max}")
        if not 1 <= m_vertex_max <= ORACLE_MAX_M:
            raise BudgetExceeded(
                f"m_vertex_max must lie in 1..{ORACLE_MAX_M}, got {m_vertex_max}"
            )
        self.spec = spec
        self.t_max = t_max
        self.m_vertex_max = m_vertex_max

    @cached_property
    def turan_side(self) -> Graph:
        return turan_graph((self.spec.p - 1) * self.t_max, self.spec.p - 1)

    def satisfies(self, m: Graph) -> bool:
        host = join(disjoint_union(m, empty_graph(self.t_max)), self.turan_side)
        return contains_subgraph(host, self.spec.blowup)

    def __call__(self) -> IsoClassSet:
        satisfied = IsoClassSet()
        minimal = IsoClassSet()
        for size in range(1, self.m_vertex_max + 1):
            level = [m for m in enumerate_graphs(size) if self.satisfies(m)]
            satisfied.update(level)
            for m in level:
                if any(m.delete_edge(a, b) in satisfied for a, b in m.edges):
                    continue
                loose = iter_bits(m.isolated.mask)
                if any(m.delete_vertex(v) in satisfied for v in loose):
                    continue
                minimal.add(m)
            logger.info(
                "Oracle level %d: %d satisfied, %d minimal",
                size,
                len(level),
                len(minimal),
            )
        return minimal


def decomposition_family_oracle(
    spec: BlowupSpec, t_max: int = 3, m_vertex_max: int = ORACLE_MAX_M
) -> IsoClassSet:
    return DecompositionOracle(spec, t_max=t_max, m_vertex_max=m_vertex_max)()
