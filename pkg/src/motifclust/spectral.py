"""Normalized motif Laplacian eigenpairs, spectral ordering, and embedding."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.sparse import csgraph

from .errors import ConvergenceError, DisconnectedError, DomainError

DENSE_CUTOFF = 200
DEFAULT_TOL = 1e-4


@dataclass(frozen=True)
class FiedlerPair:
    """Second-smallest eigenvalue of the normalized Laplacian + eigenvector."""

    lambda2: float
    vector: np.ndarray
    residual: float


@dataclass(frozen=True)
class SpectralOrdering:
    sigma: np.ndarray   # node order, degree-scaled eigenvector ascending
    scores: np.ndarray  # the sorted values


@dataclass(frozen=True)
class SpectralEmbedding:
    coords: np.ndarray     # n x k, rows unit norm (zero rows kept as zero)
    zero_rows: np.ndarray  # indices of nodes with all-zero eigenvector rows


def _check_connected(w):
    deg = w.degree
    if (deg <= 0).any():
        raise DomainError("all degrees must be positive (remove isolated nodes)")
    ncomp, _ = csgraph.connected_components(w.matrix, directed=False)
    if ncomp != 1:
        raise DisconnectedError(
            f"matrix has {ncomp} components; split before the spectral step")


def _normalized_laplacian(w):
    deg = w.degree
    dinv = sp.diags(1.0 / np.sqrt(deg))
    n = w.n
    return sp.identity(n) - dinv @ w.matrix @ dinv


def _fix_sign(z):
    i = int(np.argmax(np.abs(z)))
    return -z if z[i] < 0 else z


def _small_eigs(w, k, tol, seed, method="auto"):
    """k smallest eigenpairs of the normalized Laplacian."""
    lap = _normalized_laplacian(w).tocsr()
    n = w.n
    if method == "dense" or (method == "auto" and n <= DENSE_CUTOFF):
        vals, vecs = np.linalg.eigh(lap.toarray())
        return vals[:k], vecs[:, :k]
    rng = np.random.default_rng(seed)
    v0 = rng.standard_normal(n)
    try:
        # solver tolerance tightened so the residual contract ||L z - lam z||
        # <= tol holds on exit
        vals, vecs = spla.eigsh(lap, k=k, which="SA", tol=tol * 1e-2,
                                v0=v0, maxiter=10 * n)
    except spla.ArpackNoConvergence as exc:
        got = len(exc.eigenvalues)
        raise ConvergenceError(
            f"eigensolver converged only {got}/{k} pairs within 10n iterations",
            residual=None) from exc
    order = np.argsort(vals)
    return vals[order], vecs[:, order]


def fiedler_pair(w, tol=DEFAULT_TOL, seed=0, method="auto"):
    """Eigenpair of the second-smallest normalized-Laplacian eigenvalue.

    Requires a connected motif adjacency with positive degrees.  The
    eigenvector sign is normalized so its largest-magnitude entry is
    positive.  ``method`` forces the dense or iterative path ("auto" uses
    dense below 200 nodes).
    """
    _check_connected(w)
    if w.n < 2:
        raise DomainError("need at least 2 nodes for a Fiedler pair")
    vals, vecs = _small_eigs(w, 2, tol, seed, method)
    lam = float(vals[1])
    z = _fix_sign(vecs[:, 1])
    z = z / np.linalg.norm(z)
    lap = _normalized_laplacian(w)
    residual = float(np.linalg.norm(lap @ z - lam * z))
    if residual > max(tol, 1e-8):
        raise ConvergenceError(
            f"residual {residual:.3e} exceeds tolerance {tol:.3e}",
            residual=residual)
    return FiedlerPair(lam, z, residual)


def spectral_ordering(w, pair):
    """Sort nodes by ascending degree-scaled eigenvector, ties by node id."""
    deg = w.degree
    if len(pair.vector) != w.n:
        raise DomainError("eigenvector dimension mismatch")
    scores = pair.vector / np.sqrt(deg)
    sigma = np.lexsort((np.arange(w.n), scores))
    return SpectralOrdering(sigma, scores[sigma])


def embed_k(w, k, tol=DEFAULT_TOL, seed=0):
    """Row-normalized embedding from the k smallest eigenvectors."""
    _check_connected(w)
    if k > w.n:
        raise DomainError(f"k={k} exceeds matrix dimension {w.n}")
    vals, vecs = _small_eigs(w, k, tol, seed)
    y = np.array(vecs[:, :k])
    for j in range(k):
        y[:, j] = _fix_sign(y[:, j])
    norms = np.linalg.norm(y, axis=1)
    zero_rows = np.flatnonzero(norms < 1e-12)
    safe = np.where(norms < 1e-12, 1.0, norms)
    y = y / safe[:, None]
    y[zero_rows] = 0.0
    return SpectralEmbedding(y, zero_rows)
