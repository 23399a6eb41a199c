"""Largest eigenvalues of the adjacency matrix and the signless Laplacian.

The engine is a cyclic Jacobi rotation method written over a batch axis, so the same code diagonalises one matrix or a few hundred thousand.
Only elementwise IEEE operations (+, -, *, /, sqrt) touch the data, and each
matrix decides for itself whether a rotation is applied, which keeps every
result independent of what else shares the batch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 60
# off-diagonal entries below this fraction of ||M||_F are treated as zero
OFFDIAG_RTOL = 1e-14


class SpectralError(ArithmeticError):
    pass


class ConvergenceError(SpectralError):
    """Jacobi sweeps hit the iteration cap or the residual check failed."""


@dataclass(frozen=True)
class SpectralResult:
    value: float
    vector: np.ndarray
    residual: float


def adjacency(g: Graph) -> np.ndarray:
    return g.to_numpy()


def signless_laplacian(g: Graph) -> np.ndarray:
    a = g.to_numpy()
    a[np.diag_indices(g.n)] = a.sum(axis=1)
    return a


def check_symmetric(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=np.float64)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise SpectralError(f"expected square matrices, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise SpectralError("matrix has non-finite entries")
    if not np.array_equal(m, np.swapaxes(m, -1, -2)):
        raise SpectralError("matrix is not symmetric")
    return m


def jacobi_eigh(mats: np.ndarray, vectors: bool = False, max_sweeps: int = MAX_SWEEPS):
    """Diagonalise a stack of symmetric matrices of shape ``(B, n, n)``.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues unsorted in
    shape ``(B, n)``; eigenvectors are columns of ``(B, n, n)`` or ``None``.
    Raises :class:`ConvergenceError` if any matrix is still not diagonal
    after ``max_sweeps`` sweeps.
    """
    a = np.asarray(mats, dtype=np.float64)
    if a.ndim == 2:
        a = a[None]
    b, n, _ = a.shape
    # batch axis last keeps every row/column slice contiguous
    a = np.moveaxis(a, 0, -1).copy(order="C")
    v = np.broadcast_to(np.eye(n)[:, :, None], (n, n, b)).copy(order="C") if vectors else None
    if n < 2 or b == 0:
        return _unpack(a, v)
    thr = OFFDIAG_RTOL * np.sqrt((a * a).sum(axis=(0, 1)))
    iu, ju = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        if not np.any(np.abs(a[iu, ju]) > thr):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q, thr)
    else:
        bad = np.nonzero(np.any(np.abs(a[iu, ju]) > thr, axis=0))[0]
        if bad.size:
            raise ConvergenceError(f"{bad.size} matrices not diagonal after {max_sweeps} sweeps")
    return _unpack(a, v)


def _unpack(a, v):
    n = a.shape[0]
    w = np.ascontiguousarray(a[np.arange(n), np.arange(n)].T)
    if v is not None:
        v = np.moveaxis(v, -1, 0)
    return w, v


def _rotate(a, v, p, q, thr):
    apq = a[p, q].copy()
    rot = np.abs(apq) > thr
    if not rot.any():
        return
    app = a[p, p].copy()
    aqq = a[q, q].copy()
    safe = np.where(rot, apq, 1.0)
    theta = (aqq - app) / (2.0 * safe)
    t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
    t = np.where(rot, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    rowp = a[p].copy()
    rowq = a[q].copy()
    newp = c * rowp - s * rowq
    newq = s * rowp + c * rowq
    a[p] = newp
    a[q] = newq
    a[:, p] = newp
    a[:, q] = newq
    a[p, p] = app - t * apq
    a[q, q] = aqq + t * apq
    new_pq = np.where(rot, 0.0, apq)
    a[p, q] = new_pq
    a[q, p] = new_pq
    if v is not None:
        vp = v[:, p].copy()
        vq = v[:, q].copy()
        v[:, p] = c * vp - s * vq
        v[:, q] = s * vp + c * vq


def largest_eigenvalues(mats: np.ndarray) -> np.ndarray:
    """Largest eigenvalue of each matrix in a ``(B, n, n)`` stack."""
    w, _ = jacobi_eigh(mats)
    return w.max(axis=1)


def largest_eigenvalue(m: np.ndarray, tol: float = DEFAULT_TOL) -> SpectralResult:
    if not tol >= 1e-12:
        raise ValueError("tol must be at least 1e-12")
    m = check_symmetric(m)
    if m.ndim != 2:
        raise SpectralError("expected a single matrix")
    n = m.shape[0]
    w, vecs = jacobi_eigh(m, vectors=True)
    w, vecs = w[0], vecs[0]
    idx = int(np.argmax(w))
    value = float(w[idx])
    x = vecs[:, idx]
    x = x / np.sqrt(x @ x)
    # sign convention: largest-magnitude entry positive
    if x[int(np.argmax(np.abs(x)))] < 0:
        x = -x
    residual = float(np.max(np.abs(m @ x - value * x))) if n else 0.0
    limit = 10 * tol * (1 + float(np.abs(m).sum(axis=1).max()))
    if residual > limit:
        raise ConvergenceError(f"residual {residual:.3e} exceeds {limit:.3e}")
    return SpectralResult(value, x, residual)


def q_index(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return largest_eigenvalue(signless_laplacian(g), tol).value


def mu_index(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return largest_eigenvalue(adjacency(g), tol).value


def m_rowsums(g: Graph) -> list[float]:
    """Row sums of Q^2 - (Delta + 2 delta - 1) Q from degrees alone.

    Uses r_k(Q^2) = 2 d_k^2 + 2 * (sum of neighbour degrees) and r_k(Q) = 2 d_k.
    """
    d = g.degrees()
    shift = max(d) + 2 * min(d) - 1
    out = []
    for k in range(g.n):
        nbr = sum(d[i] for i in g.neighbors(k))
        out.append(float(2 * d[k] ** 2 + 2 * nbr - shift * 2 * d[k]))
    return out


def rowsum_bound(g: Graph) -> int:
    """4m - 2(n - 1 + Delta) delta, the ceiling every entry of :func:`m_rowsums` obeys."""
    d = g.degrees()
    return 4 * g.m - 2 * (g.n - 1 + max(d)) * min(d)
