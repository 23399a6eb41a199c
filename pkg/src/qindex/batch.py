"""Vectorised counterparts of the graph, spectral and certificate operations.

A batch is every graph of one order ``n`` given by upper-triangle masks (the
bit layout of :meth:`qindex.graph.Graph.upper_mask`).  These kernels drive the
exhaustive sweeps; the test suite checks them against the single-graph API.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .spectral import largest_eigenvalues


@lru_cache(maxsize=None)
def pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    ii = np.array([i for j in range(1, n) for i in range(j)], dtype=np.intp)
    jj = np.array([j for j in range(1, n) for i in range(j)], dtype=np.intp)
    return ii, jj


def adjacency_from_masks(n: int, masks: np.ndarray) -> np.ndarray:
    """``(B, n, n)`` uint8 adjacency matrices."""
    masks = np.asarray(masks, dtype=np.uint64)
    ii, jj = pair_arrays(n)
    a = np.zeros((masks.size, n, n), dtype=np.uint8)
    if ii.size:
        shifts = np.arange(ii.size, dtype=np.uint64)
        bits = ((masks[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)
        a[:, ii, jj] = bits
        a[:, jj, ii] = bits
    return a


def masks_from_adjacency(a: np.ndarray) -> np.ndarray:
    n = a.shape[1]
    ii, jj = pair_arrays(n)
    weights = np.left_shift(np.uint64(1), np.arange(ii.size, dtype=np.uint64))
    return (a[:, ii, jj].astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def degrees(a: np.ndarray) -> np.ndarray:
    return a.sum(axis=2, dtype=np.int64)


def degeneracy(a: np.ndarray) -> np.ndarray:
    """Min-degree peeling with lowest-index tie break, all graphs at once."""
    b, n, _ = a.shape
    deg = degrees(a)
    alive = np.ones((b, n), dtype=bool)
    out = np.zeros(b, dtype=np.int64)
    rows = np.arange(b)
    big = n + 1
    for _ in range(n):
        v = np.argmin(np.where(alive, deg, big), axis=1)
        out = np.maximum(out, deg[rows, v])
        alive[rows, v] = False
        deg -= a[rows, v].astype(np.int64)
    return out


def reachability(a: np.ndarray) -> np.ndarray:
    """``(B, n, n)`` bool, True where two vertices share a component."""
    b, n, _ = a.shape
    r = a.astype(np.float32) + np.eye(n, dtype=np.float32)
    steps = max(1, int(np.ceil(np.log2(max(n, 2)))))
    for _ in range(steps):
        r = np.minimum(r @ r, 1.0)
    return r > 0


# certificate codes for bound_main
CERT_NONE, CERT_REGULAR, CERT_SPECIAL, CERT_REGULAR_COMPONENT = 0, 1, 2, 3
CERT_NAMES = {CERT_NONE: "none", CERT_REGULAR: "regular",
              CERT_SPECIAL: "special-component", CERT_REGULAR_COMPONENT: "regular-component"}


def main_certificates(a: np.ndarray, reach: np.ndarray | None = None) -> np.ndarray:
    """Certificate code per graph, same precedence as ``equality_certificate_main``."""
    if reach is None:
        reach = reachability(a)
    deg = degrees(a)
    delta = deg.min(axis=1)
    Delta = deg.max(axis=1)
    order = reach.sum(axis=2)
    is_lo = deg == delta[:, None]
    is_hi = deg == Delta[:, None]
    # for each vertex v: its component is special
    inside_ok = np.all(~reach | (is_lo | is_hi)[:, None, :], axis=2)
    outside_ok = np.all(reach | is_lo[:, None, :], axis=2)
    special = np.any((order == Delta[:, None] + 1) & inside_ok & outside_ok, axis=1)
    reg_comp = np.any(np.all(~reach | is_hi[:, None, :], axis=2), axis=1)
    code = np.full(a.shape[0], CERT_NONE, dtype=np.int8)
    code[reg_comp] = CERT_REGULAR_COMPONENT
    code[special] = CERT_SPECIAL
    code[delta == Delta] = CERT_REGULAR
    return code


def literal_condition(codes: np.ndarray) -> np.ndarray:
    return (codes == CERT_REGULAR) | (codes == CERT_SPECIAL)


def cor1_certificates(a: np.ndarray) -> np.ndarray:
    n = a.shape[1]
    deg = degrees(a)
    delta = deg.min(axis=1)
    Delta = deg.max(axis=1)
    degree_set = np.all((deg == delta[:, None]) | (deg == n - 1), axis=1)
    return degree_set & ((Delta == n - 1) | (2 * delta >= n - 2))


def signless_laplacians(a: np.ndarray) -> np.ndarray:
    q = a.astype(np.float64)
    n = a.shape[1]
    q[:, np.arange(n), np.arange(n)] = degrees(a)
    return q


def q_values(a: np.ndarray) -> np.ndarray:
    return largest_eigenvalues(signless_laplacians(a))


def mu_values(a: np.ndarray) -> np.ndarray:
    return largest_eigenvalues(a.astype(np.float64))


def m_rowsums(a: np.ndarray) -> np.ndarray:
    """``(B, n)`` row sums of Q^2 - (Delta + 2 delta - 1) Q via the degree identity."""
    deg = degrees(a)
    shift = deg.max(axis=1) + 2 * deg.min(axis=1) - 1
    nbr = np.einsum("bij,bj->bi", a.astype(np.int64), deg)
    return 2 * deg * deg + 2 * nbr - 2 * shift[:, None] * deg


def complete_to_maximal(a: np.ndarray, k: int) -> np.ndarray:
    """Greedy lexicographic completion of every graph, mirroring the scalar version (one pass)."""
    a = a.copy()
    n = a.shape[1]
    for u in range(n):
        for v in range(u + 1, n):
            absent = np.nonzero(a[:, u, v] == 0)[0]
            if not absent.size:
                continue
            trial = a[absent]
            trial[:, u, v] = trial[:, v, u] = 1
            idx = absent[degeneracy(trial) <= k]
            a[idx, u, v] = a[idx, v, u] = 1
    return a
