#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Canonical labelling by individualisation and refinement.

The vertex partition is refined to an equitable one, then the search tree
individualises each vertex of the first smallest non-trivial cell in turn.
Every leaf is a discrete partition, that is a vertex ordering, and the
ordering with the largest adjacency rows wins. Two kinds of children are
skipped because they only reproduce a sibling subtree: twins of an
already tried vertex, and images of tried vertices under automorphisms
discovered so far that fix the current path.
"""

# Built-in modules
from collections import deque
from functools import lru_cache
from typing import Callable, Iterable, Iterator

# Internal modules
from spexlab.graphs.graph import Graph, iter_bits
from spexlab.graphs.graph6 import graph6_decode, graph6_encode
from spexlab.graphs.subgraph import contains_subgraph


###############################################################################
def _refine(adj: tuple[int, ...], cells: list[int], n: int) -> list[int]:
    """Split cells by neighbour counts until the ordered partition is equitable."""
    queue = deque(cells)
    while queue and len(cells) < n:
        splitter = queue.popleft()
        refined = []
        for cell in cells:
            if not cell & (cell - 1):
                refined.append(cell)
                continue
            groups: dict[int, int] = {}
            for v in iter_bits(cell):
                k = (adj[v] & splitter).bit_count()
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                refined.append(cell)
                continue
            pieces = [groups[k] for k in sorted(groups)]
            refined.extend(pieces)
            queue.extend(pieces)
        cells = refined
    return cells


def _rows(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    position = [0] * len(order)
    for i, v in enumerate(order):
        position[v] = i
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << position[u]
        rows.append(row)
    return tuple(rows)


def _orbit(v: int, generators: list[list[int]]) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for gamma in generators:
            y = gamma[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


###############################################################################
def canonical_order(g: Graph) -> list[int]:
    """A vertex ordering such that `g.relabel(order)` is the canonical copy."""
    n, adj = g.n, g.adj
    if n <= 1:
        return list(range(n))

    best: dict = {"rows": None, "order": None}
    automorphisms: list[list[int]] = []

    def leaf(cells: list[int]) -> None:
        order = [c.bit_length() - 1 for c in cells]
        rows = _rows(adj, order)
        if best["rows"] is None or rows > best["rows"]:
            best["rows"], best["order"] = rows, order
        elif rows == best["rows"]:
            gamma = [0] * n
            for a, b in zip(best["order"], order):
                gamma[a] = b
            automorphisms.append(gamma)

    def visit(cells: list[int], path: list[int]) -> None:
        if len(cells) == n:
            leaf(cells)
            return
        target = min(
            (i for i, c in enumerate(cells) if c & (c - 1)),
            key=lambda i: cells[i].bit_count(),
        )
        cell = cells[target]
        representatives: list[int] = []
        for v in iter_bits(cell):
            if any(
                (adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in representatives
            ):
                continue
            representatives.append(v)
        tried: list[int] = []
        for v in representatives:
            if tried and automorphisms:
                fixing = [a for a in automorphisms if all(a[x] == x for x in path)]
                if fixing and _orbit(v, fixing).intersection(tried):
                    continue
            child = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :]
            visit(_refine(adj, child, n), path + [v])
            tried.append(v)

    visit(_refine(adj, [g.full_mask], n), [])
    return best["order"]


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonical relabelling, equal iff isomorphic."""
    return graph6_encode(g.relabel(canonical_order(g))).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    return graph6_decode(canonical_form(g).decode("ascii"))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)


###############################################################################
class IsoClassSet:
    """
    A family of graphs up to isomorphism: one representative per class,
    keyed by canonical form. Iteration and serialisation follow the sorted
    canonical keys, so the order never depends on insertion order.
    """

    def __init__(self, graphs: Iterable[Graph] = ()):
        self._members: dict[bytes, Graph] = {}
        for g in graphs:
            self.add(g)

    @classmethod
    def from_graph6(cls, strings: Iterable[str]) -> "IsoClassSet":
        return cls(graph6_decode(s) for s in strings)

    def add(self, g: Graph) -> bool:
        """Insert `g`, returns False when its class was already present."""
        key = canonical_form(g)
        if key in self._members:
            return False
        self._members[key] = g
        return True

    def update(self, graphs: Iterable[Graph]) -> "IsoClassSet":
        for g in graphs:
            self.add(g)
        return self

    def __contains__(self, g: Graph) -> bool:
        return canonical_form(g) in self._members

    def __len__(self) -> int:
        return len(self._members)

    def __bool__(self) -> bool:
        return bool(self._members)

    def __iter__(self) -> Iterator[Graph]:
        return (self._members[k] for k in sorted(self._members))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IsoClassSet):
            return NotImplemented
        return self._members.keys() == other._members.keys()

    def __or__(self, other: "IsoClassSet") -> "IsoClassSet":
        return IsoClassSet(self).update(other)

    def __repr__(self) -> str:
        return f"IsoClassSet({self.to_graph6()})"

    def keys(self) -> list[bytes]:
        return sorted(self._members)

    def filter(self, predicate: Callable[[Graph], bool]) -> "IsoClassSet":
        return IsoClassSet(g for g in self if predicate(g))

    def to_graph6(self) -> list[str]:
        """Sorted canonical graph6 strings, the exchange format of families."""
        return [k.decode("ascii") for k in sorted(self._members)]

    def minimal(self) -> "IsoClassSet":
        """Members that contain no other member as a subgraph."""
        members = list(self)
        return IsoClassSet(
            g
            for g in members
            if not any(
                h is not g
                and (h.n, h.num_edges) <= (g.n, g.num_edges)
                and contains_subgraph(g, h)
                for h in members
            )
        )
