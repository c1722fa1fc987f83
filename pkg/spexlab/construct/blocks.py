#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Turán graphs and block models.

A `BlockModel` describes a graph by cells of interchangeable vertices: every
cell is an independent set, two cells are either completely joined or not
joined at all, and a few extra edges may run between cells of size one.
That is exactly the shape of H(n,p,q) with a small graph placed on the
universal vertices and another inside one Turán class, and it is an
equitable partition, so spectral work on it stays small for any n.
"""

# Built-in modules
from dataclasses import dataclass, field
from functools import cached_property

# Internal modules
from spexlab.errors import InvalidParameters
from spexlab.graphs.graph import MAX_VERTICES, Graph, complete_multipartite, from_edges


###############################################################################
def turan_parts(n: int, p: int) -> list[int]:
    """Part sizes of T_p(n), larger parts first."""
    if p < 1 or n < 0:
        raise InvalidParameters(f"T_p(n) needs p >= 1 and n >= 0, got p={p}, n={n}")
    base, extra = divmod(n, p)
    return [base + 1] * extra + [base] * (p - extra)


def turan_edge_count(n: int, p: int) -> int:
    parts = turan_parts(n, p)
    return (n * n - sum(s * s for s in parts)) // 2


def turan_edge_lower_bound(n: int, p: int) -> float:
    return (p - 1) / (2 * p) * n * n - p / 8


def turan_rho_lower_bound(n: int, p: int) -> float:
    if n == 0:
        return 0.0
    return (p - 1) / p * n - p / (4 * n)


def turan_graph(n: int, p: int) -> Graph:
    return complete_multipartite(turan_parts(n, p))


###############################################################################
@dataclass(frozen=True)
class BlockModel:
    """
    Cells of sizes `sizes`, `links[i][j] == 1` when cells i and j are
    completely joined, and `extra_edges` as pairs of cell indices of size one.
    Vertices are numbered cell after cell.
    """

    sizes: tuple[int, ...]
    links: tuple[tuple[int, ...], ...]
    extra_edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        k = len(self.sizes)
        if any(s < 0 for s in self.sizes):
            raise InvalidParameters(f"negative cell size in {self.sizes}")
        if len(self.links) != k or any(len(row) != k for row in self.links):
            raise InvalidParameters("the link matrix must be square over the cells")
        for i in range(k):
            if self.links[i][i]:
                raise InvalidParameters(f"cell {i} must be independent")
            for j in range(k):
                value = self.links[i][j]
                if value not in (0, 1) or value != self.links[j][i]:
                    raise InvalidParameters("the link matrix must be symmetric 0/1")
        for i, j in self.extra_edges:
            if i == j or self.sizes[i] != 1 or self.sizes[j] != 1:
                raise InvalidParameters(
                    f"extra edge ({i}, {j}) must join two distinct singletons"
                )
            if self.links[i][j]:
                raise InvalidParameters(f"extra edge ({i}, {j}) duplicates a link")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @cached_property
    def extra_adjacency(self) -> tuple[frozenset[int], ...]:
        out = [set() for _ in self.sizes]
        for i, j in self.extra_edges:
            out[i].add(j)
            out[j].add(i)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def num_edges(self) -> int:
        k = len(self.sizes)
        joined = sum(
            self.sizes[i] * self.sizes[j]
            for i in range(k)
            for j in range(i + 1, k)
            if self.links[i][j]
        )
        return joined + len(set(map(frozenset, self.extra_edges)))

    def degree_into(self, i: int, j: int) -> int:
        """Neighbours in cell j of any vertex of cell i."""
        return self.links[i][j] * self.sizes[j] + (j in self.extra_adjacency[i])

    def to_graph(self) -> Graph:
        if self.n > MAX_VERTICES:
            raise InvalidParameters(f"{self.n} vertices cannot be made explicit")
        starts = []
        total = 0
        for s in self.sizes:
            starts.append(total)
            total += s
        k = len(self.sizes)
        edges = []
        for i in range(k):
            for j in range(i + 1, k):
                if self.links[i][j]:
                    edges.extend(
                        (a, b)
                        for a in range(starts[i], starts[i] + self.sizes[i])
                        for b in range(starts[j], starts[j] + self.sizes[j])
                    )
        edges.extend((starts[i], starts[j]) for i, j in self.extra_edges)
        return from_edges(self.n, edges)

    def to_dict(self) -> dict:
        return {
            "blocks": list(self.sizes),
            "density": [list(row) for row in self.links],
            "exceptional_edges": [list(e) for e in self.extra_edges],
        }


###############################################################################
def assemble(
    top: Graph,
    parts: list[int],
    inner: Graph | None = None,
    host_class: int | None = None,
) -> BlockModel:
    """
    Join the vertices of `top` to a complete multipartite graph with the
    given parts, placing `inner` on the first vertices of part `host_class`.
    `top` and `inner` become singleton cells carrying their own edges.
    """
    cells: list[int] = []
    owner: list[int] = []
    extra: list[tuple[int, int]] = []

    for _ in range(top.n):
        cells.append(1)
        owner.append(-1)
    extra.extend(top.edges)

    for index, size in enumerate(parts):
        if inner is not None and index == host_class and inner.n:
            if inner.n > size:
                raise InvalidParameters(
                    f"{inner.n} vertices do not fit in a part of {size}"
                )
            offset = len(cells)
            for _ in range(inner.n):
                cells.append(1)
                owner.append(index)
            extra.extend((offset + a, offset + b) for a, b in inner.edges)
            size -= inner.n
        cells.append(size)
        owner.append(index)

    k = len(cells)
    links = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            if owner[i] == -1 and owner[j] == -1:
                continue
            if owner[i] != owner[j]:
                links[i][j] = 1
    return BlockModel(tuple(cells), tuple(map(tuple, links)), tuple(extra))


def turan(n: int, p: int) -> Graph | BlockModel:
    """T_p(n), explicit while it fits in a `Graph`."""
    if n <= MAX_VERTICES:
        return turan_graph(n, p)
    return assemble(Graph(0, ()), turan_parts(n, p))
