"""Sombor index, adjacency and Sombor matrices, spectra and energies.

Eigenvalues come from a cyclic Jacobi solver written here rather than
LAPACK so the energy side of every check is computed by one small,
deterministic routine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .errors import ConvergenceError, ParameterError, ResourceError
from .graph import Graph, edges

KRONECKER_MAX_ORDER = 4096
DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


class DenseSymMatrix:
    """Read-only real symmetric matrix backed by a float64 array.

    Symmetry is checked exactly (``a[i, j] == a[j, i]``) at construction.
    """

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ParameterError(f"expected a non-empty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ParameterError("matrix has non-finite entries")
        if not np.array_equal(a, a.T):
            raise ParameterError("matrix is not symmetric")
        a.flags.writeable = False
        self._a = a

    @property
    def order(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self._a

    def __getitem__(self, idx):
        return self._a[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseSymMatrix):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    __hash__ = None

    def __repr__(self) -> str:
        return f"DenseSymMatrix(order={self.order})"

    def __mul__(self, scalar: float) -> DenseSymMatrix:
        return DenseSymMatrix(self._a * scalar)

    __rmul__ = __mul__

    def frobenius(self) -> float:
        return float(np.linalg.norm(self._a))

    def trace(self) -> float:
        return float(np.trace(self._a))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order."""

    values: tuple[float, ...]

    @classmethod
    def from_values(cls, values: Iterable[float]) -> Spectrum:
        return cls(tuple(sorted((float(v) for v in values), reverse=True)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def abs_sum(self) -> float:
        return math.fsum(abs(v) for v in self.values)

    def nonzero(self, atol: float) -> tuple[float, ...]:
        return tuple(v for v in self.values if abs(v) > atol)


def spectra_close(a: Sequence[float], b: Sequence[float], atol: float) -> bool:
    """Multiset comparison by sorting both sides and zipping."""
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= atol for x, y in zip(sorted(a), sorted(b)))


# graph matrices and the index


def sombor_index(G: Graph) -> float:
    """Sum of ``sqrt(d(u)^2 + d(v)^2)`` over edges, in lexicographic edge order."""
    deg = G.degrees()
    total = 0.0
    for u, v in edges(G):
        total += math.sqrt(deg[u] ** 2 + deg[v] ** 2)
    return total


def adjacency_matrix(G: Graph) -> DenseSymMatrix:
    a = np.zeros((G.n, G.n))
    for u, v in edges(G):
        a[u, v] = a[v, u] = 1.0
    return DenseSymMatrix(a)


def sombor_matrix(G: Graph) -> DenseSymMatrix:
    deg = G.degrees()
    a = np.zeros((G.n, G.n))
    for u, v in edges(G):
        a[u, v] = a[v, u] = math.sqrt(deg[u] ** 2 + deg[v] ** 2)
    return DenseSymMatrix(a)


# eigenvalues


def symmetric_eigenvalues(M: DenseSymMatrix, tol: float = DEFAULT_TOL) -> Spectrum:
    """Cyclic Jacobi with row-cyclic sweeps.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * ||M||_F``.
    """
    if not tol > 0:
        raise ParameterError(f"tol must be positive, got {tol}")
    a = np.array(M.array, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise ParameterError("matrix has non-finite entries")
    n = a.shape[0]
    scale = float(np.linalg.norm(a))
    if scale == 0.0 or n == 1:
        return Spectrum.from_values(np.diag(a))
    target = tol * scale
    diag_mask = np.eye(n, dtype=bool)

    for _ in range(MAX_SWEEPS):
        off = float(np.linalg.norm(a[~diag_mask]))
        if off < target:
            return Spectrum.from_values(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                h = a[q, q] - a[p, p]
                if abs(h) + 100.0 * abs(apq) == abs(h):
                    t = apq / h  # tiny pivot: theta^2 would overflow
                else:
                    theta = h / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p].copy()
                rq = a[q].copy()
                a[p] = c * rp - s * rq
                a[q] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not reach tol={tol} in {MAX_SWEEPS} sweeps")


def energy(M: DenseSymMatrix, tol: float = DEFAULT_TOL) -> float:
    """Sum of absolute eigenvalues.

    ``energy(adjacency_matrix(G))`` is the graph energy and
    ``energy(sombor_matrix(G))`` the Sombor energy.
    """
    return symmetric_eigenvalues(M, tol).abs_sum()


def graph_energy(G: Graph, tol: float = DEFAULT_TOL) -> float:
    return energy(adjacency_matrix(G), tol)


def sombor_energy(G: Graph, tol: float = DEFAULT_TOL) -> float:
    return energy(sombor_matrix(G), tol)


# Kronecker structure and the reduced (m+1) x (m+1) matrices


def kronecker(A: DenseSymMatrix, B: DenseSymMatrix, max_order: int = KRONECKER_MAX_ORDER) -> DenseSymMatrix:
    """Block matrix whose ``(i, j)`` block is ``A[i, j] * B``."""
    order = A.order * B.order
    if order > max_order:
        raise ResourceError(f"Kronecker product of order {order} exceeds cap {max_order}")
    return DenseSymMatrix(np.kron(A.array, B.array))


def _check_km(k: int, m: int) -> None:
    if k < 1 or m < 1:
        raise ParameterError(f"k and m must be >= 1, got k={k}, m={m}")


def reduced_matrix(kind: str, k: int, m: int) -> DenseSymMatrix:
    """Arrowhead matrix of order ``m + 1`` carrying the block weights of the
    Sombor matrix of a transformed ``k``-regular graph.

    ``splitting``: head ``(m+1) k sqrt2``, arms ``k sqrt(m^2 + 2m + 2)``.
    ``shadow``: head and arms ``m k sqrt2`` (the printed matrix; it is not the
    block pattern of the constructed shadow graph).
    """
    _check_km(k, m)
    if kind == "splitting":
        head = (m + 1) * k * math.sqrt(2)
        arm = k * math.sqrt(m * m + 2 * m + 2)
    elif kind == "shadow":
        head = arm = m * k * math.sqrt(2)
    else:
        raise ParameterError(f"kind must be 'splitting' or 'shadow', got {kind!r}")
    return arrowhead(head, arm, m)


def arrowhead(a: float, b: float, m: int) -> DenseSymMatrix:
    """``(m+1) x (m+1)`` matrix with ``a`` at (0, 0), ``b`` along row/column 0."""
    out = np.zeros((m + 1, m + 1))
    out[0, 0] = a
    out[0, 1:] = b
    out[1:, 0] = b
    return DenseSymMatrix(out)


def rank2_spectrum(a: float, b: float, m: int) -> Spectrum:
    """Closed-form spectrum of :func:`arrowhead`: ``m - 1`` zeros plus the
    roots of ``x^2 - a x - m b^2 = 0``."""
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    disc = math.sqrt(a * a + 4.0 * m * b * b)
    # larger-magnitude root first, the other from the product -m b^2
    big = (a + disc) / 2.0 if a >= 0 else (a - disc) / 2.0
    small = -m * b * b / big if big != 0.0 else 0.0
    return Spectrum.from_values([big, small] + [0.0] * (m - 1))


# debug dump


def dump_matrix(M: DenseSymMatrix, fh: TextIO) -> None:
    fh.write(f"{M.order}\n")
    for row in M.array:
        fh.write(" ".join(f"{x:.17g}" for x in row) + "\n")


def load_matrix(fh: TextIO) -> DenseSymMatrix:
    lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    order = int(lines[0])
    rows = [[float(x) for x in ln.split()] for ln in lines[1 : order + 1]]
    return DenseSymMatrix(rows)
