"""Motif adjacency matrices: instance counting, closed-form formulas, sums."""

from __future__ import annotations

import itertools

import numpy as np
import scipy.sparse as sp

from .errors import DomainError
from .enumeration import enumerate_instances
from .motifs import TRIANGULAR_TRIADS


class MotifAdjacency:
    """Symmetric nonnegative co-occurrence matrix with its degree vector."""

    def __init__(self, matrix):
        m = sp.csr_matrix(matrix, dtype=np.float64)
        m.setdiag(0)
        m.eliminate_zeros()
        if (m != m.T).nnz:
            raise DomainError("motif adjacency must be symmetric")
        if m.nnz and m.data.min() < 0:
            raise DomainError("motif adjacency entries must be nonnegative")
        self.matrix = m

    @property
    def n(self):
        return self.matrix.shape[0]

    @property
    def degree(self):
        return np.asarray(self.matrix.sum(axis=1)).ravel()

    @property
    def nnz(self):
        return self.matrix.nnz

    def restrict(self, nodes):
        """Submatrix on ``nodes`` (ascending original id order).

        Returns (MotifAdjacency, old_ids).
        """
        old_ids = np.array(sorted(set(int(v) for v in nodes)), dtype=np.int64)
        sub = self.matrix[old_ids][:, old_ids]
        return MotifAdjacency(sub), old_ids

    def coordinates(self):
        """Sorted (i, j, weight) rows for every stored entry with i < j."""
        coo = sp.triu(self.matrix, k=1).tocoo()
        order = np.lexsort((coo.col, coo.row))
        return list(zip(coo.row[order].tolist(), coo.col[order].tolist(),
                        coo.data[order].tolist()))

    def __eq__(self, other):
        return (isinstance(other, MotifAdjacency)
                and self.matrix.shape == other.matrix.shape
                and (self.matrix != other.matrix).nnz == 0)


def adjacency_from_instances(instances, n):
    """Accumulate anchored-pair weights from a motif instance list."""
    rows, cols, data = [], [], []
    for inst in instances:
        for i, j in itertools.combinations(sorted(inst.anchors), 2):
            rows.append(i)
            cols.append(j)
            data.append(inst.weight)
    m = sp.coo_matrix((data, (rows, cols)), shape=(n, n))
    return MotifAdjacency(m + m.T)


def build_motif_adjacency(g, spec):
    """Motif adjacency by instance enumeration and anchored-pair counting."""
    return adjacency_from_instances(enumerate_instances(g, spec),
                                    g.node_count)


def _uni_bi(g):
    a = g.adjacency_matrix()
    b = a.multiply(a.T)
    u = (a - b).tocsr()
    return u, b.tocsr()


def motif_adjacency_by_formula(g, spec):
    """Closed-form motif adjacency for the triangular triads M1..M7."""
    name = spec.name
    if name not in TRIANGULAR_TRIADS:
        raise DomainError(f"no closed-form formula for {name!r}")
    u, b = _uni_bi(g)
    ut = u.T.tocsr()
    if name == "M1":
        c = (u @ u).multiply(ut)
        w = c + c.T
    elif name == "M2":
        c = ((b @ u).multiply(ut) + (u @ b).multiply(ut)
             + (u @ u).multiply(b))
        w = c + c.T
    elif name == "M3":
        c = ((b @ b).multiply(u) + (b @ u).multiply(b)
             + (u @ b).multiply(b))
        w = c + c.T
    elif name == "M4":
        w = (b @ b).multiply(b)
    elif name == "M5":
        c = ((u @ u).multiply(u) + (u @ ut).multiply(u)
             + (ut @ u).multiply(u))
        w = c + c.T
    elif name == "M6":
        w = ((u @ b).multiply(u) + (b @ ut).multiply(ut)
             + (ut @ u).multiply(b))
    else:  # M7
        w = ((ut @ b).multiply(ut) + (b @ u).multiply(u)
             + (u @ ut).multiply(b))
    return MotifAdjacency(w)


def combine_weighted(parts):
    """Entrywise weighted sum of motif adjacencies with coefficients >= 0."""
    parts = list(parts)
    if not parts:
        raise DomainError("no adjacencies to combine")
    n = parts[0][0].n
    total = sp.csr_matrix((n, n))
    for w, alpha in parts:
        if w.n != n:
            raise DomainError("dimension mismatch in weighted combination")
        if alpha < 0:
            raise DomainError("combination weights must be nonnegative")
        total = total + alpha * w.matrix
    return MotifAdjacency(total)


def motif_node_incidence(instances, n):
    """Instance-by-node 0/1 incidence over anchor nodes."""
    rows, cols = [], []
    for r, inst in enumerate(instances):
        for v in sorted(inst.anchors):
            rows.append(r)
            cols.append(v)
    data = np.ones(len(rows))
    return sp.csr_matrix((data, (rows, cols)), shape=(len(instances), n))
