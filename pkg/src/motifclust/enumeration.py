"""Motif instance enumeration.

Three paths: a degree-ordered triangle enumerator for the seven triangular
triads, a Chiba--Nishizeki style k-clique enumerator with (k-1)-core
pruning, and a generic induced-subgraph backtracking enumerator for motifs
on up to five nodes.  All paths emit each distinct (node set, anchor set)
pair exactly once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import CapabilityError
from .graph import degree_ordering, split_edges, undirected_view
from .motifs import TRIANGULAR_TRIADS, MotifSpec, named_motif

GENERIC_SIZE_LIMIT = 5


@dataclass(frozen=True)
class MotifInstance:
    """One occurrence of a motif: node set, anchored subset, weight."""

    nodes: frozenset
    anchors: frozenset
    weight: float = 1.0


# -- pattern matching --------------------------------------------------------

def _entry_code(x):
    # 0 absent, 1 positive edge, 2 negative edge
    return 2 if x < 0 else (1 if x else 0)


def _match_table(spec):
    """Map induced-matrix byte keys to the anchor/color slot sets they match.

    For every permutation of node positions and every pattern variant we
    record the permuted matrix; matching a candidate node tuple is then a
    single dictionary lookup.  Values are sets of (anchor_slots, color_slots)
    pairs so that symmetric patterns yield each distinct anchor set once.
    """
    k = spec.k
    table = {}
    for perm in itertools.permutations(range(k)):
        for pat in spec.variants:
            mat = bytearray(k * k)
            for i in range(k):
                for j in range(k):
                    mat[perm[i] * k + perm[j]] = _entry_code(pat[i][j])
            key = bytes(mat)
            slots = frozenset(perm[a] for a in spec.anchors)
            colors = (tuple(spec.colors[perm.index(s)] for s in range(k))
                      if spec.colors is not None else None)
            table.setdefault(key, set()).add((slots, colors))
    return table


def _induced_key(g, nodes, signed):
    """Byte key of the induced adjacency on a node tuple (fixed order)."""
    k = len(nodes)
    has = g.edge_index
    mat = bytearray(k * k)
    for i in range(k):
        u = nodes[i]
        for j in range(k):
            if i == j:
                continue
            v = nodes[j]
            if (u, v) in has:
                if signed:
                    mat[i * k + j] = 1 if g.sign_of(u, v) > 0 else 2
                else:
                    mat[i * k + j] = 1
    return bytes(mat)


# -- connected subset enumeration (ESU) --------------------------------------

def _undirected_adj(g):
    adj = [set() for _ in range(g.node_count)]
    for u, v in g.edges:
        adj[u].add(int(v))
        adj[v].add(int(u))
    return adj


def _connected_subsets(adj, k):
    """Yield every connected k-subset of an undirected graph exactly once."""
    n = len(adj)

    def extend(sub, ext, nbrs, root):
        if len(sub) == k:
            yield tuple(sub)
            return
        ext = set(ext)
        while ext:
            w = min(ext)
            ext.remove(w)
            new_ext = ext | {u for u in adj[w]
                             if u > root and u not in nbrs and u not in sub}
            yield from extend(sub + [w], new_ext, nbrs | adj[w], root)

    for v in range(n):
        ext = {u for u in adj[v] if u > v}
        yield from extend([v], ext, set(adj[v]) | {v}, v)


def enumerate_generic(g, spec, limit=GENERIC_SIZE_LIMIT):
    """Enumerate motif instances by induced-subgraph matching (k <= limit)."""
    if spec.k > limit:
        raise CapabilityError(
            f"generic enumeration limited to k <= {limit}, got k={spec.k}")
    table = _match_table(spec)
    signed = spec.signed
    check_colors = spec.colors is not None and g.colors is not None
    adj = _undirected_adj(g)
    out = []
    for nodes in _connected_subsets(adj, spec.k):
        hits = table.get(_induced_key(g, nodes, signed))
        if not hits:
            continue
        for slots, colors in hits:
            if check_colors and any(
                    g.colors[nodes[s]] != colors[s] for s in range(spec.k)):
                continue
            out.append(MotifInstance(frozenset(nodes),
                                     frozenset(nodes[s] for s in slots)))
    return _dedup_sorted(out)


def _dedup_sorted(instances):
    seen = {}
    for inst in instances:
        seen[(inst.nodes, inst.anchors)] = inst
    return sorted(seen.values(),
                  key=lambda i: (sorted(i.nodes), sorted(i.anchors)))


# -- triangular triads -------------------------------------------------------

def _triad_code_table():
    """Map the 6-bit directed-edge code of a node triple to its triad name."""
    tables = {name: _match_table(named_motif(name))
              for name in TRIANGULAR_TRIADS + ("M8", "M9", "M10", "M11",
                                               "M12", "M13")}
    pairs = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]
    code_to_name = {}
    for code in range(64):
        mat = bytearray(9)
        for b, (i, j) in enumerate(pairs):
            if code >> b & 1:
                mat[i * 3 + j] = 1
        key = bytes(mat)
        for name, table in tables.items():
            if key in table:
                code_to_name[code] = name
                break
    return code_to_name


_TRIAD_CODES = _triad_code_table()
_TRIAD_PAIRS = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]


def classify_triad(g, u, v, w):
    """Name of the triad induced on three nodes (None if disconnected)."""
    nodes = (u, v, w)
    has = g.edge_index
    code = 0
    for b, (i, j) in enumerate(_TRIAD_PAIRS):
        if (nodes[i], nodes[j]) in has:
            code |= 1 << b
    return _TRIAD_CODES.get(code)


def enumerate_triangles(g, spec):
    """Enumerate instances of a triangular triad (M1..M7).

    Pre-processing removes reciprocal pairs for M1/M5 and one-way edges for
    M4; triangles are then listed on the degree-ordered undirected skeleton
    and classified against the induced subgraph of the original graph.
    """
    name = spec.name
    if name not in TRIANGULAR_TRIADS:
        raise ValueError(f"not a triangular triad spec: {name}")
    split = split_edges(g)
    if name in ("M1", "M5"):
        pairs = {tuple(sorted(e)) for e in split.unidirectional}
    elif name == "M4":
        pairs = set(split.bidirectional)
    else:
        pairs = ({tuple(sorted(e)) for e in split.unidirectional}
                 | set(split.bidirectional))

    n = g.node_count
    adj = [set() for _ in range(n)]
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    deg = np.array([len(a) for a in adj])
    rank = np.empty(n, dtype=np.int64)
    rank[np.lexsort((np.arange(n), deg))] = np.arange(n)

    fwd = [set() for _ in range(n)]  # neighbors of higher rank
    for u, v in pairs:
        if rank[u] < rank[v]:
            fwd[u].add(v)
        else:
            fwd[v].add(u)

    out = []
    for u in range(n):
        nbrs = sorted(fwd[u], key=lambda x: rank[x])
        for a in range(len(nbrs)):
            v = nbrs[a]
            for b in range(a + 1, len(nbrs)):
                w = nbrs[b]
                if w in fwd[v]:
                    if classify_triad(g, u, v, w) == name:
                        nodes = frozenset((u, v, w))
                        out.append(MotifInstance(nodes, nodes))
    return _dedup_sorted(out)


# -- k-cliques ---------------------------------------------------------------

def _k_core(adj, k):
    """Node set of the k-core (maximal subgraph with min degree >= k)."""
    deg = {v: len(a) for v, a in enumerate(adj) if a}
    stack = [v for v, d in deg.items() if d < k]
    removed = set(stack)
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u in removed or u not in deg:
                continue
            deg[u] -= 1
            if deg[u] < k:
                removed.add(u)
                stack.append(u)
    return {v for v in deg if v not in removed}


def enumerate_kcliques(g, k, use_core=True):
    """Enumerate all k-cliques of the undirected skeleton of ``g``.

    The (k-1)-core is computed first; nodes outside it cannot be in any
    k-clique and are never touched by the search.
    """
    if not 3 <= k <= 9:
        raise CapabilityError(f"k-clique enumeration supports 3 <= k <= 9, got {k}")
    adj = _undirected_adj(g)
    if use_core:
        core = _k_core(adj, k - 1)
        adj = [a & core if v in core else set()
               for v, a in enumerate(adj)]

    out = []

    def extend(clique, cand):
        if len(clique) == k:
            nodes = frozenset(clique)
            out.append(MotifInstance(nodes, nodes))
            return
        for v in sorted(cand):
            extend(clique + [v], {u for u in cand & adj[v] if u > v})

    for v in range(len(adj)):
        extend([v], {u for u in adj[v] if u > v})
    return _dedup_sorted(out)


# -- dispatch ----------------------------------------------------------------

def enumerate_instances(g, spec):
    """Enumerate instances of any supported spec, picking the best path."""
    name = spec.name
    if name in TRIANGULAR_TRIADS:
        return enumerate_triangles(g, spec)
    if name and name.startswith("clique"):
        return enumerate_kcliques(g, spec.k)
    return enumerate_generic(g, spec)
