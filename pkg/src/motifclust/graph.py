"""Directed graph container, edge-list parsing, and basic structure queries.

Graphs are simple (no self-loops, no duplicate edges) with dense node ids.
Edges may optionally carry a sign (+1/-1) or a positive weight, and nodes may
carry a text label (the original token from the input file) and a color id.
Instances are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from .errors import DomainError, ParseError


class DirectedGraph:
    """Simple directed graph over dense node ids ``0..n-1``.

    Edges are stored as an ``(m, 2)`` int array in lexicographic order.
    Self-loops are dropped (counted in ``dropped_self_loops``) and duplicate
    edges are collapsed, keeping the last sign/weight annotation seen.
    """

    def __init__(self, node_count, edges, signs=None, weights=None,
                 labels=None, colors=None):
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        n = int(node_count)
        if edges.size and (edges.min() < 0 or edges.max() >= n):
            raise DomainError("edge endpoint outside [0, node_count)")
        signs = None if signs is None else np.asarray(signs, dtype=np.int8)
        weights = None if weights is None else np.asarray(weights, dtype=np.float64)

        loop = edges[:, 0] == edges[:, 1]
        self.dropped_self_loops = int(loop.sum())
        if self.dropped_self_loops:
            keep = ~loop
            edges = edges[keep]
            signs = signs[keep] if signs is not None else None
            weights = weights[keep] if weights is not None else None

        # Dedupe keeping the LAST annotation: unique on the reversed array
        # keeps the first occurrence there, i.e. the last in original order.
        key = edges[:, 0] * max(n, 1) + edges[:, 1]
        _, idx_rev = np.unique(key[::-1], return_index=True)
        keep = len(key) - 1 - idx_rev
        order = keep[np.argsort(key[keep], kind="stable")]
        self.edges = edges[order]
        self.signs = signs[order] if signs is not None else None
        self.weights = weights[order] if weights is not None else None

        self.node_count = n
        self.labels = list(labels) if labels is not None else None
        self.colors = (np.asarray(colors, dtype=np.int64)
                       if colors is not None else None)
        self._succ = None
        self._pred = None
        self._edge_index = None

    # -- basic accessors ---------------------------------------------------

    @property
    def num_edges(self):
        return self.edges.shape[0]

    @property
    def edge_index(self):
        """Map (src, dst) -> row in the edge array."""
        if self._edge_index is None:
            self._edge_index = {
                (int(u), int(v)): i for i, (u, v) in enumerate(self.edges)
            }
        return self._edge_index

    def has_edge(self, u, v):
        return (u, v) in self.edge_index

    def sign_of(self, u, v):
        """Sign of edge (u, v); unsigned edges are treated as +1."""
        i = self.edge_index[(u, v)]
        return int(self.signs[i]) if self.signs is not None else 1

    @property
    def succ(self):
        """Out-neighbor sets per node."""
        if self._succ is None:
            succ = [set() for _ in range(self.node_count)]
            pred = [set() for _ in range(self.node_count)]
            for u, v in self.edges:
                succ[u].add(int(v))
                pred[v].add(int(u))
            self._succ, self._pred = succ, pred
        return self._succ

    @property
    def pred(self):
        """In-neighbor sets per node."""
        self.succ  # build both caches
        return self._pred

    def label_of(self, v):
        return self.labels[v] if self.labels is not None else str(v)

    def adjacency_matrix(self):
        """Unweighted 0/1 adjacency as CSR."""
        n = self.node_count
        data = np.ones(self.num_edges)
        return sp.csr_matrix(
            (data, (self.edges[:, 0], self.edges[:, 1])), shape=(n, n))

    def subgraph(self, nodes):
        """Induced subgraph on ``nodes`` (relabeled densely by ascending id).

        Returns (graph, old_ids) where old_ids[i] is the original id of new
        node i.
        """
        old_ids = np.array(sorted(set(int(v) for v in nodes)), dtype=np.int64)
        remap = -np.ones(self.node_count, dtype=np.int64)
        remap[old_ids] = np.arange(len(old_ids))
        mask = (remap[self.edges[:, 0]] >= 0) & (remap[self.edges[:, 1]] >= 0)
        edges = remap[self.edges[mask]]
        signs = self.signs[mask] if self.signs is not None else None
        weights = self.weights[mask] if self.weights is not None else None
        labels = ([self.labels[i] for i in old_ids]
                  if self.labels is not None else None)
        colors = self.colors[old_ids] if self.colors is not None else None
        g = DirectedGraph(len(old_ids), edges, signs, weights, labels, colors)
        return g, old_ids


@dataclass(frozen=True)
class EdgeSplit:
    """Edges partitioned into one-way edges and reciprocal pairs."""

    unidirectional: frozenset  # of (u, v) tuples
    bidirectional: frozenset   # of (min, max) tuples


@dataclass(frozen=True)
class ComponentMap:
    """Connected-component structure of a symmetric graph/matrix.

    Components are numbered by decreasing size; ties are broken by the
    smallest original node id contained.  ``renumbering`` maps each original
    id to a dense id within its component (ascending original-id order).
    """

    component_id: np.ndarray
    sizes: list
    renumbering: dict = field(repr=False)

    @property
    def num_components(self):
        return len(self.sizes)

    def nodes_of(self, c):
        return np.flatnonzero(self.component_id == c)


def parse_edge_list(source, directed=True, signed=False, weighted=False,
                    delimiter=None):
    """Parse a whitespace-delimited edge list into a DirectedGraph.

    Lines starting with ``#`` are comments.  Each data line holds two node
    tokens, optionally followed by a sign (+1/-1) or a positive weight.  Node
    tokens are arbitrary strings mapped to dense ids in order of first
    appearance.  With ``directed=False`` both orientations are added.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = source
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    ids = {}
    labels = []
    src, dst, signs, weights = [], [], [], []

    def node_id(tok):
        i = ids.get(tok)
        if i is None:
            i = len(labels)
            ids[tok] = i
            labels.append(tok)
        return i

    want = 2 + (1 if (signed or weighted) else 0)
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split(delimiter)
        if len(toks) != want:
            raise ParseError(
                f"expected {want} tokens, found {len(toks)}", line=lineno)
        u, v = node_id(toks[0]), node_id(toks[1])
        src.append(u)
        dst.append(v)
        if signed:
            if toks[2] not in ("+1", "-1", "+", "-", "1"):
                raise ParseError(f"bad sign token {toks[2]!r}", line=lineno)
            signs.append(-1 if toks[2].startswith("-") else 1)
        elif weighted:
            try:
                w = float(toks[2])
            except ValueError:
                raise ParseError(
                    f"non-numeric weight {toks[2]!r}", line=lineno) from None
            if w <= 0:
                raise ParseError(f"non-positive weight {w}", line=lineno)
            weights.append(w)

    edges = np.array([src, dst], dtype=np.int64).T.reshape(-1, 2)
    sg = np.array(signs, dtype=np.int8) if signed else None
    wt = np.array(weights) if weighted else None
    if not directed:
        edges = np.vstack([edges, edges[:, ::-1]])
        sg = np.concatenate([sg, sg]) if sg is not None else None
        wt = np.concatenate([wt, wt]) if wt is not None else None
    return DirectedGraph(len(labels), edges, sg, wt, labels=labels)


def split_edges(g):
    """Split the edge set into one-way edges U and reciprocal pairs B."""
    present = set(map(tuple, g.edges.tolist()))
    uni, bi = set(), set()
    for u, v in present:
        if (v, u) in present:
            bi.add((min(u, v), max(u, v)))
        else:
            uni.add((u, v))
    return EdgeSplit(frozenset(uni), frozenset(bi))


def undirected_view(g):
    """Symmetric graph connecting {i, j} iff (i, j) or (j, i) is an edge.

    One edge per orientation, unit multiplicity: the sum of the one-way-edge
    and reciprocal-pair motif weightings.
    """
    edges = np.vstack([g.edges, g.edges[:, ::-1]])
    return DirectedGraph(g.node_count, edges, labels=g.labels,
                         colors=g.colors)


def _symmetric_csr(x):
    """Accept a DirectedGraph, MotifAdjacency, or sparse matrix; return CSR."""
    if isinstance(x, DirectedGraph):
        a = x.adjacency_matrix()
        return ((a + a.T) > 0).astype(np.float64).tocsr()
    if sp.issparse(x):
        return x.tocsr()
    return x.matrix.tocsr()  # MotifAdjacency


def connected_components(x):
    """Connected components of a symmetric graph or motif adjacency matrix."""
    m = _symmetric_csr(x)
    ncomp, raw = csgraph.connected_components(m, directed=False)
    n = m.shape[0]
    sizes = np.bincount(raw, minlength=ncomp)
    min_node = np.full(ncomp, n, dtype=np.int64)
    for v in range(n - 1, -1, -1):
        min_node[raw[v]] = v
    order = sorted(range(ncomp), key=lambda c: (-int(sizes[c]), int(min_node[c])))
    relabel = np.empty(ncomp, dtype=np.int64)
    relabel[order] = np.arange(ncomp)
    comp = relabel[raw]
    renumbering = {}
    counters = np.zeros(ncomp, dtype=np.int64)
    for v in range(n):
        c = comp[v]
        renumbering[v] = int(counters[c])
        counters[c] += 1
    return ComponentMap(comp, [int(sizes[c]) for c in order], renumbering)


def degree_ordering(g_undir):
    """Permutation of nodes by nondecreasing degree, ties by ascending id."""
    m = _symmetric_csr(g_undir)
    deg = np.asarray((m > 0).sum(axis=1)).ravel()
    return np.lexsort((np.arange(len(deg)), deg))
