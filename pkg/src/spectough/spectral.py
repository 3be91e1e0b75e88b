"""Distance matrices, the distance spectral radius and quotient matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt
from typing import Sequence

import numpy as np

from .errors import InvalidArgument, NotConnectedError, NumericFailure
from .graph import Graph

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000
EPS_CMP = 1e-8


@dataclass(frozen=True)
class DistanceMatrix:
    entries: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def row_sums(self) -> np.ndarray:
        return self.entries.sum(axis=1)


@dataclass(frozen=True)
class SpectralResult:
    lambda1: float
    perron: np.ndarray = field(repr=False)
    iterations: int
    residual: float
    method: str  # "power" or "jacobi"

    def to_json(self) -> dict:
        return {
            "lambda1": self.lambda1,
            "residual": self.residual,
            "iterations": self.iterations,
            "method": self.method,
        }


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    block_sizes: tuple[int, ...]
    equitable: bool

    @property
    def m(self) -> int:
        return len(self.entries)

    def to_array(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.entries])

    def largest_eigenvalue(self) -> float:
        return float(np.max(np.linalg.eigvals(self.to_array()).real))

    def to_json(self) -> dict:
        return {
            "entries": [[str(v) for v in row] for row in self.entries],
            "block_sizes": list(self.block_sizes),
            "equitable": self.equitable,
        }


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances by one BFS per source vertex."""
    n = g.n
    d = np.zeros((n, n), dtype=np.int64)
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        frontier = [src]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for u in frontier:
                for w in g.neighbors(u):
                    if dist[w] < 0:
                        dist[w] = level
                        nxt.append(w)
            frontier = nxt
        if min(dist) < 0:
            raise NotConnectedError(src, dist.index(-1))
        d[src] = dist
    d.setflags(write=False)
    return DistanceMatrix(d)


def _as_array(d: DistanceMatrix | np.ndarray) -> np.ndarray:
    a = d.entries if isinstance(d, DistanceMatrix) else np.asarray(d)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidArgument(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise InvalidArgument("matrix is not symmetric")
    return a.astype(np.float64)


def jacobi_eigh(a: np.ndarray, tol: float = 1e-15, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigensolver for a real symmetric matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvectors as columns,
    eigenvalues in ascending order.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    scale = max(np.linalg.norm(a), 1.0)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise NumericFailure("Jacobi sweeps did not converge")
    w = np.diag(a).copy()
    order = np.argsort(w)
    return w[order], v[:, order]


def spectral_radius(
    d: DistanceMatrix | np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SpectralResult:
    """Largest eigenvalue and unit Perron vector of a distance matrix.

    Power iteration from the all-ones vector, stopping once
    ``max|Dx - λx| <= tol`` with ``λ`` the Rayleigh quotient.  If ``max_iter``
    runs out the cyclic Jacobi solver takes over.
    """
    if tol <= 0:
        raise InvalidArgument("tol must be positive")
    a = _as_array(d)
    n = a.shape[0]
    x = np.full(n, 1.0 / sqrt(n))
    for it in range(1, max_iter + 1):
        y = a @ x
        lam = float(x @ y)
        res = float(np.max(np.abs(y - lam * x)))
        if res <= tol:
            return SpectralResult(lam, x, it, res, "power")
        norm = np.linalg.norm(y)
        if norm == 0.0:
            break
        x = y / norm

    w, vecs = jacobi_eigh(a)
    x = vecs[:, -1]
    x = x * np.sign(x.sum())
    x = x / np.linalg.norm(x)
    lam = float(x @ a @ x)
    res = float(np.max(np.abs(a @ x - lam * x)))
    if res > tol or np.any(x <= 0):
        raise NumericFailure(f"Jacobi fallback left residual {res:.3e} > tol {tol:.1e}")
    return SpectralResult(lam, x, max_iter, res, "jacobi")


def lambda1(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return spectral_radius(distance_matrix(g), tol).lambda1


def compare(a: float, b: float, eps: float = EPS_CMP) -> tuple[int, float]:
    """Sign of ``a - b`` with a relative tie band, plus the signed margin."""
    margin = a - b
    band = eps * max(abs(a), abs(b), 1.0)
    if margin > band:
        return 1, margin
    if margin < -band:
        return -1, margin
    return 0, margin


def wiener_indices(g: Graph) -> tuple[int, int]:
    """``(W, W2)``: sums of distances and of squared distances over pairs."""
    d = distance_matrix(g).entries
    iu = np.triu_indices(g.n, 1)
    upper = d[iu]
    return int(upper.sum()), int((upper * upper).sum())


def distance_bounds(g: Graph) -> tuple[float, float]:
    """Lower ``2W/n`` and upper ``sqrt(2(n-1)W2/n)`` bounds on λ₁."""
    n = g.n
    if n < 2:
        raise InvalidArgument("bounds need n >= 2")
    w, w2 = wiener_indices(g)
    return 2 * w / n, sqrt(2 * (n - 1) * w2 / n)


def quotient_matrix(d: DistanceMatrix | np.ndarray, blocks: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Block-average row sums, computed exactly.

    The equitable flag is true iff, for every pair of blocks, every row of
    the block has the same sum.
    """
    a = d.entries if isinstance(d, DistanceMatrix) else np.asarray(d)
    n = a.shape[0]
    blocks = [list(b) for b in blocks]
    seen = sorted(v for b in blocks for v in b)
    if any(not b for b in blocks) or seen != list(range(n)):
        raise InvalidArgument("blocks must partition 0..n-1 into nonempty sets")
    equitable = True
    entries = []
    for bi in blocks:
        row = []
        for bj in blocks:
            sums = [int(s) for s in a[np.ix_(bi, bj)].sum(axis=1)]
            if len(set(sums)) > 1:
                equitable = False
            row.append(Fraction(sum(sums), len(bi)))
        entries.append(tuple(row))
    return QuotientMatrix(tuple(entries), tuple(len(b) for b in blocks), equitable)


def charpoly3(q: QuotientMatrix | Sequence[Sequence]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients ``(1, c2, c1, c0)`` of ``det(xI - q)`` for a 3x3 matrix."""
    m = q.entries if isinstance(q, QuotientMatrix) else q
    if len(m) != 3 or any(len(r) != 3 for r in m):
        raise InvalidArgument("charpoly3 needs a 3x3 matrix")
    a = [[Fraction(v) for v in r] for r in m]
    trace = a[0][0] + a[1][1] + a[2][2]
    minors = (
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
        + a[0][0] * a[2][2] - a[0][2] * a[2][0]
        + a[1][1] * a[2][2] - a[1][2] * a[2][1]
    )
    det = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    return Fraction(1), -trace, minors, -det
