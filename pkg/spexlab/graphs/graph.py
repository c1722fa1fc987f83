#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Small simple undirected graphs stored as one neighbourhood bitset per
vertex. A `Graph` never changes after construction, every operation
returns a new one.
"""

# Built-in modules
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

# Internal modules
from spexlab.errors import CapacityExceeded, InvalidVertex, LoopRejected

# One neighbourhood fits in a machine word
MAX_VERTICES = 64


###############################################################################
def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of `mask`, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def check_capacity(n: int) -> None:
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"{n} vertices exceed the capacity of {MAX_VERTICES}")


###############################################################################
@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of some graph on `n` vertices."""

    mask: int
    n: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise InvalidVertex(
                f"vertex set {self.mask:#x} is not inside 0..{self.n - 1}"
            )

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise InvalidVertex(f"vertex {v} is not inside 0..{n - 1}")
        return cls(mask_of(vertices), n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"


###############################################################################
@dataclass(frozen=True)
class Graph:
    """
    A simple undirected graph on vertices 0..n-1 where `adj[v]` is the
    bitset of the neighbours of `v`. Build instances with `from_edges` or
    the other constructors of this module, they check the invariants.
    """

    n: int
    adj: tuple[int, ...]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Every edge once as (u, v) with u < v, in lexicographic order."""
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> u + 1 << u + 1)
        )

    @cached_property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    @cached_property
    def isolated(self) -> VertexSet:
        return VertexSet(mask_of(v for v in self.vertices if not self.adj[v]), self.n)

    @cached_property
    def components(self) -> tuple[int, ...]:
        """The vertex bitsets of the connected components."""
        remaining = self.full_mask
        found = []
        while remaining:
            seed = remaining & -remaining
            comp = frontier = seed
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~comp
                comp |= frontier
            found.append(comp)
            remaining &= ~comp
        return tuple(found)

    @cached_property
    def bipartition(self) -> tuple[int, int] | None:
        """
        Two-colouring as a pair of bitsets (side A, side B), where in each
        component the side holding its lowest vertex is A. None when the
        graph contains an odd cycle.
        """
        side_a = side_b = 0
        for comp in self.components:
            seed = comp & -comp
            colour = {seed.bit_length() - 1: 0}
            stack = [seed.bit_length() - 1]
            while stack:
                v = stack.pop()
                for u in iter_bits(self.adj[v]):
                    if u not in colour:
                        colour[u] = 1 - colour[v]
                        stack.append(u)
                    elif colour[u] == colour[v]:
                        return None
            for v, c in colour.items():
                if c == 0:
                    side_a |= 1 << v
                else:
                    side_b |= 1 << v
        return side_a, side_b

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    def is_independent(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in iter_bits(mask))

    def is_cover(self, mask: int) -> bool:
        """Does the vertex bitset `mask` meet every edge?"""
        rest = self.full_mask & ~mask
        return all(not self.adj[v] & rest for v in iter_bits(rest))

    def relabel(self, order: list[int]) -> "Graph":
        """The graph whose vertex i is vertex `order[i]` of this one."""
        position = {v: i for i, v in enumerate(order)}
        keep = mask_of(order)
        adj = tuple(
            mask_of(position[u] for u in iter_bits(self.adj[v] & keep)) for v in order
        )
        return Graph(len(order), adj)

    def toggle_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        return Graph(self.n, tuple(adj))

    def delete_vertex(self, v: int) -> "Graph":
        return induced_subgraph(self, VertexSet(self.full_mask & ~(1 << v), self.n))

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidVertex(f"({u}, {v}) is not an edge")
        return self.toggle_edge(u, v)


###############################################################################
def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on `n` vertices, duplicated edges are collapsed."""
    check_capacity(n)
    if n < 0:
        raise InvalidVertex(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) leaves 0..{n - 1}")
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    check_capacity(g.n + h.n)
    shifted = tuple(a << g.n for a in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


def join(g: Graph, h: Graph) -> Graph:
    check_capacity(g.n + h.n)
    h_block = ((1 << h.n) - 1) << g.n
    g_block = g.full_mask
    adj = tuple(a | h_block for a in g.adj) + tuple((a << g.n) | g_block for a in h.adj)
    return Graph(g.n + h.n, adj)


def induced_subgraph(g: Graph, subset: VertexSet | Iterable[int]) -> Graph:
    """Keep the vertices of `subset` in increasing order, isolated ones too."""
    if isinstance(subset, VertexSet):
        if subset.n != g.n:
            raise InvalidVertex(f"vertex set over {subset.n} vertices used on {g.n}")
        order = list(subset)
    else:
        order = sorted(set(subset))
        for v in order:
            if not 0 <= v < g.n:
                raise InvalidVertex(f"vertex {v} is not inside 0..{g.n - 1}")
    return g.relabel(order)


###############################################################################
def empty_graph(n: int) -> Graph:
    check_capacity(n)
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    check_capacity(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidVertex(f"a cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def star_graph(n: int) -> Graph:
    """The star S_n on n vertices, centre 0 and n - 1 leaves."""
    return from_edges(n, [(0, v) for v in range(1, n)])


def matching_graph(t: int) -> Graph:
    """M_{2t}: t independent edges on 2t vertices."""
    return from_edges(2 * t, [(2 * i, 2 * i + 1) for i in range(t)])


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    sizes = list(sizes)
    n = sum(sizes)
    check_capacity(n)
    adj = []
    start = 0
    full = (1 << n) - 1
    for size in sizes:
        part = ((1 << size) - 1) << start
        adj.extend([full & ~part] * size)
        start += size
    return Graph(n, tuple(adj))


def double_star(k: int) -> Graph:
    """S_{k,k}: two copies of S_k with their centres joined."""
    leaves = [(0, v) for v in range(2, k + 1)] + [(1, v) for v in range(k + 1, 2 * k)]
    return from_edges(2 * k, [(0, 1)] + leaves)

