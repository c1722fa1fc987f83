#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The candidate extremal graphs H(n,p,q) and H(n,p,q,lambda-1,B).

H(n,p,q) joins q - 1 universal vertices to T_p(n-q+1). The family member
additionally carries an edge-extremal B-free graph on the universal
vertices and a graph reaching f(lambda-1, lambda-1) inside one Turán class.
"""

# Built-in modules
import logging
from dataclasses import dataclass, field

# Internal modules
from spexlab.construct.blocks import (
    BlockModel,
    assemble,
    turan_edge_count,
    turan_parts,
)
from spexlab.errors import BudgetExceeded, InvalidParameters
from spexlab.graphs.canon import IsoClassSet, canonical_form
from spexlab.graphs.graph import MAX_VERTICES, Graph, empty_graph
from spexlab.graphs.graph6 import graph6_encode
from spexlab.search.generate import Constraint, enumerate_graphs
from spexlab.theory.chvatal import chvatal_hanson, family_D

logger = logging.getLogger(__name__)

EX_SMALL_MAX_VERTICES = 9


###############################################################################
def _check(n: int, p: int, q: int) -> None:
    if p < 2 or q < 1:
        raise InvalidParameters(f"need p >= 2 and q >= 1, got p={p}, q={q}")
    if n < q - 1 + p:
        raise InvalidParameters(
            f"H(n,p,q) needs n >= q - 1 + p = {q - 1 + p}, got n={n}"
        )


def h_base(n: int, p: int, q: int) -> Graph | BlockModel:
    _check(n, p, q)
    model = assemble(empty_graph(q - 1), turan_parts(n - q + 1, p))
    return model.to_graph() if n <= MAX_VERTICES else model


def ex_small(m: int, forbidden: IsoClassSet) -> tuple[int, IsoClassSet]:
    """ex(m, forbidden) and its extremal classes by exhaustive search."""
    if m > EX_SMALL_MAX_VERTICES:
        raise BudgetExceeded(
            f"ex_small is exhaustive only up to {EX_SMALL_MAX_VERTICES} vertices"
        )
    level = enumerate_graphs(m, Constraint(forbidden=tuple(forbidden)))
    best = max(g.num_edges for g in level)
    return best, IsoClassSet(g for g in level if g.num_edges == best)


###############################################################################
@dataclass
class ConstructionFamily:
    n: int
    p: int
    q: int
    lam: int
    B: IsoClassSet
    members: list[Graph | BlockModel]
    Q_choices: IsoClassSet
    D_choices: IsoClassSet
    embed_class_sizes: list[int]
    host_sizes: list[int] = field(default_factory=list)

    @property
    def explicit(self) -> bool:
        return self.n <= MAX_VERTICES

    @property
    def graphs(self) -> list[Graph]:
        return [m if isinstance(m, Graph) else m.to_graph() for m in self.members]

    @property
    def edge_count(self) -> int:
        return self.members[0].num_edges

    def to_dict(self) -> dict:
        if self.explicit:
            members = [graph6_encode(m) for m in self.members]
        else:
            members = [m.to_dict() for m in self.members]
        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "lambda": self.lam,
            "B": self.B.to_graph6(),
            "Q_choices": self.Q_choices.to_graph6(),
            "D_choices": self.D_choices.to_graph6(),
            "embed_class_sizes": self.embed_class_sizes,
            "edges": self.edge_count,
            "members": members,
        }


def build_H_family(
    n: int, p: int, q: int, lam: int, B: IsoClassSet
) -> ConstructionFamily:
    """
    One member per choice of Q in EX(q-1, B), D in the lambda family and
    distinct size of the Turán class receiving D. Members are deduplicated
    by canonical form when explicit.
    """
    _check(n, p, q)
    if lam < 1:
        raise InvalidParameters(f"lambda must be positive, got {lam}")
    _, q_choices = ex_small(q - 1, B)
    d_choices = family_D(lam)
    parts = turan_parts(n - q + 1, p)

    members: list[Graph | BlockModel] = []
    seen: set = set()
    hosts = []
    for top in q_choices:
        for inner in d_choices:
            if inner.num_edges == 0:
                options = [None]
            else:
                options = [s for s in sorted(set(parts), reverse=True) if s >= inner.n]
                if not options:
                    raise InvalidParameters(
                        f"no class of T_{p}({n - q + 1}) holds {inner.n} vertices"
                    )
            for size in options:
                host = None if size is None else parts.index(size)
                model = assemble(top, parts, inner, host)
                if n <= MAX_VERTICES:
                    member = model.to_graph()
                    key = canonical_form(member)
                else:
                    member = model
                    key = (canonical_form(top), canonical_form(inner), size)
                if key in seen:
                    continue
                seen.add(key)
                members.append(member)
                hosts.append(size or 0)

    logger.info("H(%d,%d,%d,%d,B): %d members", n, p, q, lam - 1, len(members))
    return ConstructionFamily(
        n=n,
        p=p,
        q=q,
        lam=lam,
        B=B,
        members=members,
        Q_choices=q_choices,
        D_choices=d_choices,
        embed_class_sizes=parts,
        host_sizes=hosts,
    )


def h_edge_count(n: int, p: int, q: int, lam: int, B: IsoClassSet) -> int:
    _check(n, p, q)
    return (
        (q - 1) * (n - q + 1)
        + turan_edge_count(n - q + 1, p)
        + ex_small(q - 1, B)[0]
        + chvatal_hanson(lam - 1, lam - 1)
    )
