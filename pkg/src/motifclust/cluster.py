"""Conductance measures, the spectral sweep cut, and multiway clustering."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csgraph

from .adjacency import build_motif_adjacency
from .enumeration import enumerate_instances
from .errors import DomainError
from .graph import connected_components
from .spectral import (DEFAULT_TOL, embed_k, fiedler_pair, spectral_ordering)


@dataclass(frozen=True)
class SweepResult:
    ordering: object                 # SpectralOrdering
    profile: list                    # of (prefix size r, conductance)
    best_set: frozenset
    best_phi: float


@dataclass(frozen=True)
class Partition:
    """Disjoint cluster assignment over a node subset."""

    assignment: dict        # node -> cluster id
    k: int                  # number of clusters (incl. residual, if any)
    residual: int = None    # cluster id holding motif-isolated nodes

    def __post_init__(self):
        ids = set(self.assignment.values())
        if ids and (min(ids) < 0 or max(ids) >= self.k):
            raise DomainError("cluster ids must lie in [0, k)")

    def clusters(self):
        out = [set() for _ in range(self.k)]
        for v, c in self.assignment.items():
            out[c].add(v)
        return out


def conductance_weighted(w, s):
    """cut(S, S-bar) / min(vol S, vol S-bar) on the weighted graph."""
    s = sorted(set(int(v) for v in s))
    if not s or len(s) == w.n:
        raise DomainError("S must be a nonempty proper subset")
    deg = w.degree
    x = np.zeros(w.n)
    x[s] = 1.0
    vol_s = float(deg[s].sum())
    vol_sbar = float(deg.sum() - vol_s)
    if vol_s <= 0 or vol_sbar <= 0:
        raise DomainError("both sides must have positive volume")
    inside = float(x @ (w.matrix @ x))
    cut = vol_s - inside
    return cut / min(vol_s, vol_sbar)


def motif_cut_and_volumes(instances, s, domain=None):
    """Weighted motif cut and the two side volumes over an instance list.

    ``domain`` restricts the node universe (instances with anchors outside
    it are ignored); the complement of S is taken within the domain.
    """
    s = set(s)
    cut = vol_s = vol_sbar = 0.0
    for inst in instances:
        if domain is not None and not inst.anchors <= domain:
            continue
        inside = len(inst.anchors & s)
        outside = len(inst.anchors) - inside
        vol_s += inst.weight * inside
        vol_sbar += inst.weight * outside
        if inside and outside:
            cut += inst.weight
    return cut, vol_s, vol_sbar


def motif_conductance_exact(g, spec, s, domain=None, instances=None):
    """Exact motif conductance of S from enumerated instances."""
    if instances is None:
        instances = enumerate_instances(g, spec)
    cut, vol_s, vol_sbar = motif_cut_and_volumes(instances, s, domain)
    if vol_s <= 0 or vol_sbar <= 0:
        side = "S" if vol_s <= 0 else "complement of S"
        raise DomainError(f"no motif end points on the {side} side")
    return cut / min(vol_s, vol_sbar)


def sweep_cut(w, ordering):
    """Minimum-conductance prefix of the spectral ordering.

    The conductance profile over all prefixes is computed incrementally in
    O(nnz) total; the returned set is the smaller side of the best cut.
    """
    n = w.n
    if n < 2:
        raise DomainError("need at least 2 nodes to sweep")
    sigma = ordering.sigma
    deg = w.degree
    total_vol = float(deg.sum())
    mat = w.matrix.tocsr()
    indptr, indices, data = mat.indptr, mat.indices, mat.data

    in_s = np.zeros(n, dtype=bool)
    vol = cut = 0.0
    profile = []
    best_r, best_phi = 1, np.inf
    for r, v in enumerate(sigma[:-1], start=1):
        lo, hi = indptr[v], indptr[v + 1]
        w_to_s = float(data[lo:hi][in_s[indices[lo:hi]]].sum())
        cut += float(deg[v]) - 2.0 * w_to_s
        vol += float(deg[v])
        in_s[v] = True
        phi = cut / min(vol, total_vol - vol)
        profile.append((r, phi))
        if phi < best_phi:
            best_phi, best_r = phi, r
    prefix = frozenset(int(v) for v in sigma[:best_r])
    if len(prefix) < n - len(prefix):
        best_set = prefix
    else:
        best_set = frozenset(range(n)) - prefix
    return SweepResult(ordering, profile, best_set, float(best_phi))


def sweep_component(w, tol=DEFAULT_TOL, seed=0):
    """Fiedler pair + ordering + sweep on one connected component."""
    pair = fiedler_pair(w, tol=tol, seed=seed)
    ordering = spectral_ordering(w, pair)
    return sweep_cut(w, ordering), pair


def _active_and_isolated(w):
    deg = w.degree
    return np.flatnonzero(deg > 0), np.flatnonzero(deg <= 0)


def recursive_bipartition(g, spec, k, tol=DEFAULT_TOL, seed=0, w=None):
    """k clusters by repeatedly sweeping the largest remaining cluster.

    Motif-isolated nodes form a residual cluster that does not count toward
    k.  Disconnected clusters are split along their largest component.
    """
    if k < 2:
        raise DomainError("k must be >= 2")
    if w is None:
        w = build_motif_adjacency(g, spec)
    active, isolated = _active_and_isolated(w)
    clusters = [sorted(int(v) for v in active)] if len(active) else []
    while clusters and len(clusters) < k:
        order = sorted(range(len(clusters)),
                       key=lambda i: (-len(clusters[i]), clusters[i][0]))
        i = order[0]
        target = clusters[i]
        if len(target) < 2:
            warnings.warn("largest cluster too small to split; stopping "
                          f"with {len(clusters)} clusters")
            break
        sub, old_ids = w.restrict(target)
        comp = connected_components(sub)
        if comp.num_components > 1:
            largest = {int(old_ids[v]) for v in comp.nodes_of(0)}
            rest = [v for v in target if v not in largest]
            clusters[i] = sorted(largest)
            clusters.append(rest)
            continue
        result, _ = sweep_component(sub, tol=tol, seed=seed)
        side = {int(old_ids[v]) for v in result.best_set}
        clusters[i] = sorted(v for v in target if v not in side)
        clusters.append(sorted(side))
    assignment = {}
    for c, nodes in enumerate(clusters):
        for v in nodes:
            assignment[v] = c
    residual = None
    total = len(clusters)
    if len(isolated):
        residual = total
        total += 1
        for v in isolated:
            assignment[int(v)] = residual
    return Partition(assignment, total, residual)


# -- k-means on the spectral embedding ---------------------------------------

def _kmeans_once(y, k, rng):
    n = len(y)
    # k-means++ seeding
    centers = np.empty((k, y.shape[1]))
    centers[0] = y[rng.integers(n)]
    d2 = ((y - centers[0]) ** 2).sum(axis=1)
    for c in range(1, k):
        total = d2.sum()
        if total <= 0:
            centers[c] = y[rng.integers(n)]
        else:
            centers[c] = y[rng.choice(n, p=d2 / total)]
        d2 = np.minimum(d2, ((y - centers[c]) ** 2).sum(axis=1))
    labels = np.zeros(n, dtype=np.int64)
    for _ in range(300):
        dist = ((y[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        new_labels = dist.argmin(axis=1)
        for c in range(k):
            mask = new_labels == c
            if mask.any():
                centers[c] = y[mask].mean(axis=0)
            else:
                # empty cluster: reseed at the farthest point
                far = dist.min(axis=1).argmax()
                centers[c] = y[far]
                new_labels[far] = c
        if (new_labels == labels).all():
            break
        labels = new_labels
    inertia = float(((y - centers[labels]) ** 2).sum())
    return labels, inertia


def embed_kmeans(w, k, iters=100, seed=0, tol=DEFAULT_TOL):
    """k-means (k-means++ seeding, ``iters`` restarts) on the embedding."""
    if k > w.n:
        raise DomainError(f"k={k} exceeds node count {w.n}")
    if k == 1:
        return Partition({v: 0 for v in range(w.n)}, 1)
    emb = embed_k(w, k, tol=tol, seed=seed)
    rng = np.random.default_rng(seed)
    best_labels, best_inertia = None, np.inf
    for _ in range(iters):
        labels, inertia = _kmeans_once(emb.coords, k, rng)
        if inertia < best_inertia:
            best_labels, best_inertia = labels, inertia
    return Partition({v: int(c) for v, c in enumerate(best_labels)}, k)
