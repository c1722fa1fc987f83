#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Non-induced subgraph containment.

Hosts here are mostly Turán-like: a few large classes of interchangeable
vertices. The host is therefore compressed into twin classes first (vertices
with identical neighbourhoods apart from each other). A twin class is either
a clique or an independent set and every pair of classes is either fully
joined or not joined at all, so an embedding only has to say which class
each pattern vertex goes to, subject to the class sizes.

The search assigns pattern vertices to classes in a connectivity order with
forward checking. Two symmetries are broken: twins of the pattern take
classes in non-decreasing order, and among host classes that nothing has
used yet only one per group of interchangeable classes is tried.
"""

# Built-in modules
from dataclasses import dataclass
from functools import lru_cache

# Internal modules
from spexlab.graphs.graph import Graph, iter_bits


###############################################################################
def twin_classes(g: Graph) -> list[int]:
    """Partition V(g) into twin classes, as bitsets ordered by lowest vertex."""
    assigned = 0
    classes = []
    for v in range(g.n):
        if assigned >> v & 1:
            continue
        cls = 1 << v
        av = g.adj[v]
        for u in range(v + 1, g.n):
            if not assigned >> u & 1 and (g.adj[u] & ~(1 << v)) == (av & ~(1 << u)):
                cls |= 1 << u
        assigned |= cls
        classes.append(cls)
    return classes


###############################################################################
@dataclass(frozen=True)
class _Quotient:
    size: tuple[int, ...]
    # Classes a neighbour of a vertex in class i may occupy
    allowed: tuple[int, ...]
    degree: tuple[int, ...]
    group: tuple[int, ...]

    @classmethod
    def of(cls, host: Graph) -> "_Quotient":
        classes = twin_classes(host)
        k = len(classes)
        reps = [c.bit_length() - 1 for c in classes]
        size = tuple(c.bit_count() for c in classes)
        clique = [
            size[i] > 1 and bool(host.adj[reps[i]] & classes[i]) for i in range(k)
        ]
        nbr = [0] * k
        for i in range(k):
            for j in range(k):
                if j != i and host.adj[reps[i]] & classes[j]:
                    nbr[i] |= 1 << j
        allowed = tuple(nbr[i] | (1 << i if clique[i] else 0) for i in range(k))

        group = [-1] * k
        next_group = 0
        for i in range(k):
            if group[i] >= 0:
                continue
            group[i] = next_group
            for j in range(i + 1, k):
                if (
                    group[j] < 0
                    and size[j] == size[i]
                    and clique[j] == clique[i]
                    and (nbr[j] & ~(1 << i)) == (nbr[i] & ~(1 << j))
                ):
                    group[j] = next_group
            next_group += 1

        degree = tuple(host.adj[r].bit_count() for r in reps)
        return cls(size, allowed, degree, tuple(group))


###############################################################################
@dataclass(frozen=True)
class _Plan:
    """Search order over the non-isolated pattern vertices."""

    degree: tuple[int, ...]
    # Positions (in search order) of earlier and later neighbours
    before: tuple[tuple[int, ...], ...]
    after: tuple[tuple[int, ...], ...]
    # Position of the previous twin in search order, or -1
    prev_twin: tuple[int, ...]


@lru_cache(maxsize=4096)
def _plan(pattern: Graph) -> _Plan:
    adj = pattern.adj
    remaining = [v for v in range(pattern.n) if adj[v]]
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(
            remaining,
            key=lambda u: ((adj[u] & placed).bit_count(), adj[u].bit_count(), -u),
        )
        remaining.remove(v)
        order.append(v)
        placed |= 1 << v

    position = {v: i for i, v in enumerate(order)}
    before = tuple(
        tuple(sorted(position[u] for u in iter_bits(adj[v]) if position[u] < i))
        for i, v in enumerate(order)
    )
    after = tuple(
        tuple(sorted(position[u] for u in iter_bits(adj[v]) if position[u] > i))
        for i, v in enumerate(order)
    )

    twin_of = {}
    for cls in twin_classes(pattern):
        for v in iter_bits(cls):
            twin_of[v] = cls
    prev_twin = []
    for i, v in enumerate(order):
        earlier = [j for j in range(i) if twin_of[order[j]] >> v & 1]
        prev_twin.append(earlier[-1] if earlier else -1)

    degree = tuple(adj[v].bit_count() for v in order)
    return _Plan(degree, before, after, tuple(prev_twin))


###############################################################################
def _degree_dominated(host: Graph, pattern: Graph) -> bool:
    hd = sorted(host.degrees, reverse=True)
    pd = sorted(pattern.degrees, reverse=True)
    return all(a <= b for a, b in zip(pd, hd))


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    """Is there an injective map V(pattern) -> V(host) sending edges to edges?"""
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return False
    if pattern.num_edges == 0:
        return True
    if not _degree_dominated(host, pattern):
        return False

    quotient = _Quotient.of(host)
    plan = _plan(pattern)
    m = len(plan.degree)
    k = len(quotient.size)
    size, allowed, group = quotient.size, quotient.allowed, quotient.group

    domains = [
        sum(1 << c for c in range(k) if quotient.degree[c] >= plan.degree[i])
        for i in range(m)
    ]
    if not all(domains):
        return False
    used = [0] * k
    assign = [-1] * m
    full = (1 << k) - 1

    def extend(i: int, domains: list[int], free: int) -> bool:
        if i == m:
            return True
        candidates = domains[i] & free
        prev = plan.prev_twin[i]
        if prev >= 0:
            candidates &= ~((1 << assign[prev]) - 1)
        seen_groups = set()
        for c in iter_bits(candidates):
            if not used[c]:
                if group[c] in seen_groups:
                    continue
                seen_groups.add(group[c])
            used[c] += 1
            assign[i] = c
            now_free = free & ~(1 << c) if used[c] == size[c] else free
            narrowed = domains
            ok = True
            if plan.after[i]:
                narrowed = list(domains)
                for j in plan.after[i]:
                    narrowed[j] &= allowed[c]
                    if not narrowed[j] & now_free:
                        ok = False
                        break
            if ok and extend(i + 1, narrowed, now_free):
                return True
            used[c] -= 1
        assign[i] = -1
        return False

    return extend(0, domains, full)


def is_free_of(host: Graph, pattern: Graph) -> bool:
    return not contains_subgraph(host, pattern)
