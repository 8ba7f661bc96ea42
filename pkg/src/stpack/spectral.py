"""Spectral radius and Perron vectors, two independent ways.

Power iteration on the full adjacency operator gives the working value with a
residual-certified interval; an exact small eigenproblem on an equitable
quotient matrix cross-checks it for the structured families.  Also houses the
closed-form upper bound rho <= (d-1)/2 + sqrt(2m - dn + (d+1)^2/4) and its
companion decreasing function.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, GraphError, VertexPartition

DEFAULT_TOL = 1e-10
MAX_ITERATIONS = 10**6


class SpectralError(RuntimeError):
    pass


@dataclass
class SpectralResult:
    rho: float
    perron: np.ndarray  # positive unit vector indexed by vertex
    residual: float  # inf-norm of A x - rho x
    iterations: int


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Power iteration with fixed all-ones start; deterministic.

    Residual is measured as ||A x - rho x||_inf with rho the Rayleigh
    quotient, giving rho(G) in [rho, rho + residual * sqrt(n)].
    """
    if tol <= 0:
        raise SpectralError(f"tolerance must be positive, got {tol}")
    if g.n < 1:
        raise SpectralError("spectral_radius needs n >= 1")
    if not g.is_connected():
        raise SpectralError("spectral_radius requires a connected graph")
    if g.m == 0:
        return SpectralResult(0.0, np.ones(g.n) / math.sqrt(g.n), 0.0, 0)
    a = adjacency_matrix(g)
    x = np.ones(g.n) / math.sqrt(g.n)
    for it in range(1, MAX_ITERATIONS + 1):
        y = a @ x
        rho = float(x @ y)
        residual = float(np.max(np.abs(y - rho * x)))
        if residual <= tol:
            return SpectralResult(rho, x, residual, it)
        # iterate on A + I: keeps the Perron direction dominant even when
        # lambda_min = -lambda_max (bipartite graphs)
        z = y + x
        nrm = float(np.linalg.norm(z))
        if nrm == 0.0:
            raise SpectralError("power iteration collapsed to zero vector")
        x = z / nrm
    raise SpectralError(
        f"power iteration did not reach residual {tol} in {MAX_ITERATIONS} "
        f"iterations (last residual {residual})"
    )


@dataclass
class QuotientMatrix:
    cells: tuple[tuple[int, ...], ...]
    B: np.ndarray  # integer counts; B[i][j] = edges from one cell-i vertex into cell j


def equitable_quotient(g: Graph, seed_cells: Sequence[Iterable[int]]) -> QuotientMatrix:
    """Coarsest equitable refinement of seed_cells, with verified quotient."""
    cells = [sorted(c) for c in seed_cells]
    VertexPartition(g.n, cells)  # validates disjoint cover
    changed = True
    rounds = 0
    while changed:
        rounds += 1
        if rounds > g.n + 1:
            raise AssertionError("equitable refinement failed to stabilize")
        changed = False
        nxt: list[list[int]] = []
        for cell in cells:
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(
                    sum(1 for w in g.neighbors(v) if w in cset)
                    for cset in (set(c) for c in cells)
                )
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            nxt.extend(groups[s] for s in sorted(groups))
        cells = nxt
    t = len(cells)
    b = np.zeros((t, t), dtype=np.int64)
    cell_sets = [set(c) for c in cells]
    for i, cell in enumerate(cells):
        v = cell[0]
        for j, cset in enumerate(cell_sets):
            b[i, j] = sum(1 for w in g.neighbors(v) if w in cset)
    # verify equitability vertex by vertex, not just on representatives
    for i, cell in enumerate(cells):
        for v in cell:
            for j, cset in enumerate(cell_sets):
                if sum(1 for w in g.neighbors(v) if w in cset) != b[i, j]:
                    raise AssertionError("refinement produced a non-equitable partition")
    return QuotientMatrix(tuple(tuple(c) for c in cells), b)


def quotient_spectral_radius(q: QuotientMatrix) -> float:
    """Largest eigenvalue of the quotient matrix; equals rho of the source graph."""
    eig = np.linalg.eigvals(q.B.astype(float))
    return float(np.max(eig.real))


def hong_nikiforov_bound(n: int, m: int, delta: int) -> float:
    """(delta-1)/2 + sqrt(2m - delta n + (delta+1)^2 / 4).

    Equality holds exactly for delta-regular graphs and for bidegreed graphs
    whose degrees are delta and n-1.
    """
    if delta < 1:
        raise GraphError(f"minimum degree must be >= 1, got {delta}")
    if m < 1:
        raise GraphError(f"edge count must be >= 1, got {m}")
    radicand = 2 * m - delta * n + (delta + 1) ** 2 / 4.0
    if radicand < 0:
        raise GraphError(f"inconsistent inputs: negative radicand {radicand}")
    return (delta - 1) / 2.0 + math.sqrt(radicand)


def f_decreasing(x: float, p: int, q: int) -> float:
    """(x-1)/2 + sqrt(2q - px + (x+1)^2/4); decreasing on 0 <= x <= p-1.

    Requires 2q <= p(p-1).  At the boundary 2q = p(p-1) the function is the
    constant p-1.
    """
    if 2 * q > p * (p - 1):
        raise GraphError(f"need 2q <= p(p-1); got p={p}, q={q}")
    if not 0 <= x <= p - 1:
        raise GraphError(f"x={x} outside [0, {p - 1}]")
    radicand = 2 * q - p * x + (x + 1) ** 2 / 4.0
    if radicand < 0:
        raise GraphError(f"negative radicand {radicand}")
    return (x - 1) / 2.0 + math.sqrt(radicand)


class Ordering(enum.Enum):
    LESS = "LESS"
    GREATER = "GREATER"
    INDISTINGUISHABLE = "INDISTINGUISHABLE"


@dataclass
class SpectralComparison:
    ordering: Ordering
    gap: float  # rho(g1) - rho(g2)
    rho1: float
    rho2: float


def compare_spectral(g1: Graph, g2: Graph, tol: float = DEFAULT_TOL) -> SpectralComparison:
    """Compare spectral radii; never silently resolves a numeric tie.

    GREATER/LESS only when |rho1 - rho2| > 10 * tol, else INDISTINGUISHABLE.
    """
    r1 = spectral_radius(g1, tol).rho
    r2 = spectral_radius(g2, tol).rho
    gap = r1 - r2
    if abs(gap) > 10 * tol:
        ordering = Ordering.GREATER if gap > 0 else Ordering.LESS
    else:
        ordering = Ordering.INDISTINGUISHABLE
    return SpectralComparison(ordering, gap, r1, r2)
