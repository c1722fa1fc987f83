#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Isomorph-free generation of small graphs by canonical vertex augmentation.

Level k+1 is built from the representatives of level k by adding one new
vertex with every possible neighbourhood. A child G is kept only when its
parent is isomorphic to G - u, where u is the vertex labelled last by the
canonical labelling of G. Different parents can still produce isomorphic
children, so each finished level is deduplicated through an `IsoClassSet`
before it is expanded.

An optional `Constraint` prunes the tree. It must be hereditary, that is
preserved by deleting vertices, which holds for freeness and for bounds on
the maximum degree or the matching number.
"""

# Built-in modules
import hashlib
import logging
from dataclasses import dataclass
from functools import partial
from multiprocessing import Pool
from typing import Iterable

# Third-party modules
import fsspec

# Internal modules
from spexlab.errors import BudgetExceeded
from spexlab.graphs.canon import IsoClassSet, canonical_form, canonical_order
from spexlab.graphs.covers import matching_number
from spexlab.graphs.graph import Graph, empty_graph
from spexlab.graphs.graph6 import graph6_decode, graph6_encode
from spexlab.graphs.subgraph import contains_subgraph
from spexlab.paths import get_checkpoint_dir, get_workers

logger = logging.getLogger(__name__)

ENUMERATION_MAX_VERTICES = 10
# Levels smaller than this are expanded in-process
POOL_THRESHOLD = 64


###############################################################################
@dataclass(frozen=True)
class Constraint:
    """A hereditary property of graphs, picklable so pool workers can use it."""

    forbidden: tuple[Graph, ...] = ()
    max_degree: int | None = None
    max_matching: int | None = None

    def __call__(self, g: Graph) -> bool:
        if self.max_degree is not None and g.max_degree > self.max_degree:
            return False
        if self.max_matching is not None and matching_number(g) > self.max_matching:
            return False
        return not any(contains_subgraph(g, f) for f in self.forbidden)

    @property
    def key(self) -> str:
        """Stable name of the constraint, used for checkpoint directories."""
        parts = [graph6_encode(f) for f in self.forbidden]
        parts.append(f"deg={self.max_degree}")
        parts.append(f"nu={self.max_matching}")
        return hashlib.sha1("|".join(parts).encode()).hexdigest()[:16]


NO_CONSTRAINT = Constraint()


###############################################################################
def augmentations(parent: Graph, constraint: Constraint = NO_CONSTRAINT) -> list[Graph]:
    """The accepted children of one level representative."""
    k = parent.n
    parent_form = canonical_form(parent)
    siblings = IsoClassSet()
    for neighbourhood in range(1 << k):
        adj = tuple(a | (neighbourhood >> v & 1) << k for v, a in enumerate(parent.adj))
        child = Graph(k + 1, adj + (neighbourhood,))
        if not constraint(child):
            continue
        last = canonical_order(child)[-1]
        if last != k:
            if child.degree(last) != child.degree(k):
                continue
            if canonical_form(child.delete_vertex(last)) != parent_form:
                continue
        siblings.add(child)
    return list(siblings)


###############################################################################
class Enumerator:
    """
    Runs the level by level generation, optionally spreading each level over
    a process pool and saving every finished level as a graph6 file.
    """

    def __init__(
        self,
        constraint: Constraint = NO_CONSTRAINT,
        workers: int | None = None,
        checkpoint: bool = False,
    ):
        self.constraint = constraint
        self.workers = workers or get_workers()
        self.checkpoint = checkpoint

    def __repr__(self):
        name = self.__class__.__name__
        return f"{name}(key={self.constraint.key}, workers={self.workers})"

    def level_path(self, k: int) -> str:
        return str(get_checkpoint_dir() / self.constraint.key / f"level_{k}.g6")

    def save_level(self, k: int, graphs: list[Graph]) -> None:
        with fsspec.open(self.level_path(k), "wt", auto_mkdir=True) as handle:
            handle.write("".join(graph6_encode(g) + "\n" for g in graphs))
            handle.write("# complete\n")

    def load_level(self, k: int) -> list[Graph] | None:
        path = self.level_path(k)
        fs, _, _ = fsspec.get_fs_token_paths(path)
        if not fs.exists(path):
            return None
        with fsspec.open(path, "rt") as handle:
            lines = handle.read().splitlines()
        if not lines or lines[-1] != "# complete":
            return None
        return [graph6_decode(line) for line in lines[:-1]]

    def resume(self, n: int) -> tuple[int, list[Graph]]:
        """Deepest complete checkpoint level up to n, or level 0."""
        if self.checkpoint:
            for k in range(n, 0, -1):
                graphs = self.load_level(k)
                if graphs is not None:
                    logger.info("Resuming at level %d from %s", k, self.level_path(k))
                    return k, graphs
        start = empty_graph(0)
        return 0, [start] if self.constraint(start) else []

    def expand(self, parents: list[Graph]) -> list[Graph]:
        work = partial(augmentations, constraint=self.constraint)
        if self.workers > 1 and len(parents) >= POOL_THRESHOLD:
            with Pool(processes=self.workers) as pool:
                chunksize = max(1, len(parents) // (4 * self.workers))
                batches = pool.map(work, parents, chunksize=chunksize)
        else:
            batches = map(work, parents)
        level = IsoClassSet()
        for batch in batches:
            level.update(batch)
        return list(level)

    def __call__(self, n: int) -> list[Graph]:
        if n > ENUMERATION_MAX_VERTICES:
            raise BudgetExceeded(
                f"exhaustive enumeration stops at {ENUMERATION_MAX_VERTICES} vertices,"
                f" got {n}"
            )
        k, level = self.resume(n)
        while k < n and level:
            level = self.expand(level)
            k += 1
            logger.info("Level %d: %d classes", k, len(level))
            if self.checkpoint:
                self.save_level(k, level)
        return level


###############################################################################
def enumerate_graphs(
    n: int,
    constraint: Constraint = NO_CONSTRAINT,
    workers: int | None = None,
    checkpoint: bool = False,
) -> list[Graph]:
    """One representative per isomorphism class on n vertices, in canonical order."""
    return Enumerator(constraint, workers=workers, checkpoint=checkpoint)(n)


def graphs_up_to(n: int, constraint: Constraint = NO_CONSTRAINT) -> Iterable[Graph]:
    """Every class on 0..n vertices, smallest orders first."""
    enumerator = Enumerator(constraint)
    level = [empty_graph(0)] if constraint(empty_graph(0)) else []
    yield from level
    for _ in range(n):
        if not level:
            return
        level = enumerator.expand(level)
        yield from level
