#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Matchings, vertex covers, independent covers and colourings."""

# Built-in modules
from itertools import combinations, product

# Third-party modules
import networkx as nx

# Internal modules
from spexlab.errors import BudgetExceeded, NotBipartite
from spexlab.graphs.graph import Graph, VertexSet, iter_bits, mask_of

# Exact colouring is exponential in n
CHROMATIC_MAX_VERTICES = 20


###############################################################################
def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(g.edges)
    return out


def matching_number(g: Graph) -> int:
    if g.num_edges == 0:
        return 0
    return len(nx.max_weight_matching(to_networkx(g), maxcardinality=True))


###############################################################################
def vertex_cover_number(g: Graph) -> int:
    adj = g.adj
    memo: dict[int, int] = {}

    def solve(alive: int) -> int:
        if alive in memo:
            return memo[alive]
        pivot, pivot_degree = -1, 0
        for v in iter_bits(alive):
            d = (adj[v] & alive).bit_count()
            if d == 1:
                # A leaf edge is covered at its other end without loss
                u = (adj[v] & alive).bit_length() - 1
                result = 1 + solve(alive & ~(1 << u) & ~(1 << v))
                memo[alive] = result
                return result
            if d > pivot_degree:
                pivot, pivot_degree = v, d
        if pivot_degree == 0:
            memo[alive] = 0
            return 0
        nbrs = adj[pivot] & alive
        take = 1 + solve(alive & ~(1 << pivot))
        skip = pivot_degree + solve(alive & ~nbrs & ~(1 << pivot))
        memo[alive] = min(take, skip)
        return memo[alive]

    return solve(g.full_mask)


###############################################################################
def _sides(g: Graph) -> list[tuple[int, int]]:
    """Per component with an edge: its two colour classes."""
    parts = g.bipartition
    if parts is None:
        raise NotBipartite(f"graph with edges {g.edges} has an odd cycle")
    side_a, side_b = parts
    return [
        (comp & side_a, comp & side_b) for comp in g.components if comp & (comp - 1)
    ]


def independent_covering_number(g: Graph) -> int:
    return sum(min(a.bit_count(), b.bit_count()) for a, b in _sides(g))


def independent_coverings_of_size(g: Graph, k: int) -> list[VertexSet]:
    """
    Every independent vertex cover of size exactly k. Inside a connected
    bipartite component the only independent covers are its two sides,
    and vertices without edges can be added freely.
    """
    sides = _sides(g)
    loose = list(iter_bits(g.isolated.mask))
    found = set()
    for choice in product(*sides):
        base = 0
        for part in choice:
            base |= part
        spare = k - base.bit_count()
        if spare < 0 or spare > len(loose):
            continue
        for extra in combinations(loose, spare):
            found.add(base | mask_of(extra))
    return [VertexSet(mask, g.n) for mask in sorted(found)]


def coverings_strictly_below(g: Graph, k: int) -> list[VertexSet]:
    """Every vertex cover of size less than k, isolated vertices allowed."""
    found = []
    for size in range(min(k, g.n + 1)):
        for subset in combinations(range(g.n), size):
            mask = mask_of(subset)
            if g.is_cover(mask):
                found.append(mask)
    return [VertexSet(mask, g.n) for mask in sorted(found)]


###############################################################################
def is_colourable(g: Graph, k: int) -> bool:
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    classes = [0] * k

    def place(i: int, opened: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(min(opened + 1, k)):
            if not g.adj[v] & classes[c]:
                classes[c] |= 1 << v
                if place(i + 1, max(opened, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n > CHROMATIC_MAX_VERTICES:
        raise BudgetExceeded(
            f"chromatic number is exact only up to {CHROMATIC_MAX_VERTICES} vertices,"
            f" got {g.n}"
        )
    if g.n == 0:
        return 0
    if g.num_edges == 0:
        return 1
    if g.is_bipartite:
        return 2
    k = 3
    while not is_colourable(g, k):
        k += 1
    return k
