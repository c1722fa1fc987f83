#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Spectral radius with a certified error bound.

Power iteration runs on A + I, which keeps the dominant eigenvalue of every
connected component simple and positive even for bipartite components, and
starts from the all-ones vector. For a unit vector x the residual
||Ax - rho x|| bounds the distance from the Rayleigh quotient rho to an
eigenvalue of the symmetric matrix A, and the iteration stops once that
bound drops below `tol`.

Block models are evaluated on their quotient matrix. The partition into
cells is equitable, so the quotient has the same spectral radius as the
graph. It is symmetrised with the cell sizes, which keeps the residual
bound valid for the lifted vector on the full graph.
"""

# Built-in modules
import enum
import logging
from dataclasses import dataclass, field

# Third-party modules
import numpy

# Internal modules
from spexlab.construct.blocks import BlockModel
from spexlab.errors import ConvergenceFailure, InvalidParameters
from spexlab.graphs.graph import Graph

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
MIN_TOL = 1e-13
MAX_ITERATIONS = 10**6


###############################################################################
@dataclass(frozen=True)
class SpectralResult:
    rho_hat: float
    residual_bound: float
    iterations: int
    perron: numpy.ndarray = field(compare=False, repr=False)

    @property
    def lower(self) -> float:
        return self.rho_hat - self.residual_bound

    @property
    def upper(self) -> float:
        return self.rho_hat + self.residual_bound

    def to_dict(self, verbose: bool = False) -> dict:
        out = {
            "rho": self.rho_hat,
            "residual": self.residual_bound,
            "iterations": self.iterations,
        }
        if verbose:
            out["perron"] = [float(v) for v in self.perron]
        return out


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INDISTINGUISHABLE = "indistinguishable"


###############################################################################
def adjacency_matrix(g: Graph) -> numpy.ndarray:
    matrix = numpy.zeros((g.n, g.n))
    for u, v in g.edges:
        matrix[u, v] = matrix[v, u] = 1.0
    return matrix


def quotient_matrix(model: BlockModel) -> tuple[numpy.ndarray, list[int]]:
    """Symmetrised quotient over the non-empty cells, and those cells' indices."""
    cells = [i for i, s in enumerate(model.sizes) if s]
    roots = numpy.sqrt([model.sizes[i] for i in cells])
    k = len(cells)
    matrix = numpy.zeros((k, k))
    for a, i in enumerate(cells):
        for b, j in enumerate(cells):
            if a != b:
                matrix[a, b] = model.degree_into(i, j) * roots[a] / roots[b]
    return matrix, cells


def _matrix_components(matrix: numpy.ndarray) -> list[list[int]]:
    k = matrix.shape[0]
    seen = [False] * k
    found = []
    for start in range(k):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in numpy.flatnonzero(matrix[a]):
                if not seen[b]:
                    seen[b] = True
                    stack.append(int(b))
        found.append(sorted(comp))
    return found


def power_iteration(
    matrix: numpy.ndarray, tol: float, max_iter: int = MAX_ITERATIONS
) -> tuple[float, numpy.ndarray, float, int]:
    """Dominant eigenpair of a connected nonnegative symmetric matrix."""
    size = matrix.shape[0]
    if size == 1:
        return float(matrix[0, 0]), numpy.ones(1), 0.0, 0
    x = numpy.full(size, 1.0 / numpy.sqrt(size))
    ax = matrix @ x
    for iteration in range(1, max_iter + 1):
        y = ax + x
        x = y / numpy.linalg.norm(y)
        ax = matrix @ x
        rho = float(x @ ax)
        residual = float(numpy.linalg.norm(ax - rho * x))
        if residual <= tol:
            return rho, x, residual, iteration
    raise ConvergenceFailure(f"no convergence to {tol} within {max_iter} iterations")


def _dominant(
    matrix: numpy.ndarray, tol: float, max_iter: int
) -> tuple[float, numpy.ndarray, float, int]:
    """Best component of a possibly disconnected matrix, vector padded with zeros."""
    size = matrix.shape[0]
    best = None
    total = 0
    for comp in _matrix_components(matrix):
        block = matrix[numpy.ix_(comp, comp)]
        rho, x, residual, iterations = power_iteration(block, tol, max_iter)
        total += iterations
        if best is None or rho > best[0]:
            vector = numpy.zeros(size)
            vector[comp] = x
            best = (rho, vector, residual)
    return best[0], best[1], best[2], total


###############################################################################
def spectral_radius(
    g: Graph | BlockModel, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITERATIONS
) -> SpectralResult:
    if tol < MIN_TOL:
        raise InvalidParameters(f"tol must be at least {MIN_TOL}, got {tol}")
    if g.n == 0:
        return SpectralResult(0.0, 0.0, 0, numpy.zeros(0))

    if isinstance(g, BlockModel):
        matrix, cells = quotient_matrix(g)
        rho, y, residual, iterations = _dominant(matrix, tol, max_iter)
        per_cell = numpy.zeros(len(g.sizes))
        for a, i in enumerate(cells):
            per_cell[i] = y[a] / numpy.sqrt(g.sizes[i])
        perron = numpy.repeat(per_cell, g.sizes)
        return SpectralResult(rho, residual, iterations, perron)

    if g.num_edges == 0:
        perron = numpy.zeros(g.n)
        perron[0] = 1.0
        return SpectralResult(0.0, 0.0, 0, perron)
    rho, x, residual, iterations = _dominant(adjacency_matrix(g), tol, max_iter)
    return SpectralResult(rho, residual, iterations, x)


def compare_results(a: SpectralResult, b: SpectralResult) -> Ordering:
    """A strict answer only when the certified intervals are disjoint."""
    if a.upper < b.lower:
        return Ordering.LESS
    if a.lower > b.upper:
        return Ordering.GREATER
    return Ordering.INDISTINGUISHABLE


def compare_spectral(
    g: Graph | BlockModel | SpectralResult,
    h: Graph | BlockModel | SpectralResult,
    tol: float = DEFAULT_TOL,
) -> Ordering:
    a = g if isinstance(g, SpectralResult) else spectral_radius(g, tol)
    b = h if isinstance(h, SpectralResult) else spectral_radius(h, tol)
    return compare_results(a, b)


def support(result: SpectralResult) -> list[int]:
    """Vertices where the Perron vector is positive."""
    return [int(v) for v in numpy.flatnonzero(result.perron > 0)]
