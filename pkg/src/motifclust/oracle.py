"""Independent checks: brute-force conductance, Cheeger bounds, scoring.

The brute-force optimum scans every subset directly from the enumerated
instance list, without touching the motif adjacency matrix, so it can serve
as an oracle for the spectral pipeline.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from sklearn.metrics import adjusted_rand_score, normalized_mutual_info_score

from .adjacency import build_motif_adjacency, motif_node_incidence
from .cluster import motif_conductance_exact, sweep_component
from .enumeration import enumerate_instances
from .errors import CapabilityError, DomainError
from .graph import connected_components
from .spectral import DEFAULT_TOL

BRUTE_FORCE_LIMIT = 20
_CHUNK = 1 << 14


@dataclass(frozen=True)
class BruteForceOptimum:
    phi_star: float
    witness: frozenset   # minimizing set, contains the smallest active node


@dataclass(frozen=True)
class CheegerReport:
    lambda2: float
    phi_alg: float
    phi_star: float      # None when the component is too large to scan
    upper_ok: bool       # phi_alg <= 4 sqrt(phi_star); None without phi_star
    lower_ok: bool       # phi_star >= lambda2 / 2;     None without phi_star
    witness: frozenset


@dataclass(frozen=True)
class QualityScores:
    ari: float
    nmi: float
    purity: float
    pair_f1: float


def brute_force_optimum(g, spec, max_n=BRUTE_FORCE_LIMIT, instances=None):
    """Minimum motif conductance over all subsets, by exhaustive scan.

    Only nodes that appear as an instance anchor matter; every subset of the
    active nodes containing the smallest one is tried (the complement covers
    the rest).  Ties go to the set whose sorted node tuple is smallest.
    """
    if instances is None:
        instances = enumerate_instances(g, spec)
    if not instances:
        raise DomainError("no motif instances; conductance undefined")
    active = sorted({v for inst in instances for v in inst.anchors})
    na = len(active)
    if na > max_n:
        raise CapabilityError(
            f"{na} motif-active nodes exceed the brute-force limit {max_n}")
    if na < 2:
        raise DomainError("need at least 2 motif-active nodes")

    pos = {v: i for i, v in enumerate(active)}
    inc = np.zeros((len(instances), na))
    wts = np.empty(len(instances))
    for r, inst in enumerate(instances):
        wts[r] = inst.weight
        for v in inst.anchors:
            inc[r, pos[v]] = 1.0
    anchor_sizes = inc.sum(axis=1)
    total_vol = float((anchor_sizes * wts).sum())

    best_phi = np.inf
    best_mask = None
    n_masks = 1 << (na - 1)
    for start in range(0, n_masks, _CHUNK):
        block = np.arange(start, min(start + _CHUNK, n_masks), dtype=np.int64)
        masks = (block << 1) | 1   # smallest active node always inside
        member = (masks[:, None] >> np.arange(na)) & 1   # chunk x na
        inside = member @ inc.T                          # chunk x instances
        vol_s = inside @ wts
        cut = (((inside > 0) & (inside < anchor_sizes)) @ wts)
        vol_min = np.minimum(vol_s, total_vol - vol_s)
        valid = (vol_s > 0) & (vol_s < total_vol)
        phi = np.where(valid, cut / np.where(vol_min > 0, vol_min, 1.0), np.inf)
        i = int(phi.argmin())
        if phi[i] < best_phi:
            best_phi = float(phi[i])
            best_mask = int(masks[i])
        if not np.isinf(best_phi):
            # prefer the lexicographically smallest among equal minima
            for t in np.flatnonzero(phi == best_phi):
                cand = int(masks[t])
                if _mask_nodes(cand, active) < _mask_nodes(best_mask, active):
                    best_mask = cand
    if best_mask is None:
        raise DomainError("no valid bipartition of the motif-active nodes")
    return BruteForceOptimum(best_phi, frozenset(_mask_nodes(best_mask, active)))


def _mask_nodes(mask, active):
    return tuple(v for i, v in enumerate(active) if mask >> i & 1)


def cheeger_certify(g, spec, tol=DEFAULT_TOL, seed=0,
                    max_brute=BRUTE_FORCE_LIMIT):
    """Sweep the largest motif-adjacency component and verify both bounds.

    ``phi_alg`` is the exact motif conductance of the swept set, computed
    from enumerated instances (not from the matrix).  When the component has
    at most ``max_brute`` nodes the true optimum ``phi_star`` is found by
    exhaustive scan and both Cheeger inequalities are checked; larger
    components report only the eigenvalue lower bound data (flags None).
    """
    instances = enumerate_instances(g, spec)
    w = build_motif_adjacency(g, spec)
    comp = connected_components(w)
    if not comp.sizes or comp.sizes[0] < 2:
        raise DomainError("largest motif-adjacency component has < 2 nodes")
    nodes = [int(v) for v in comp.nodes_of(0)]
    sub, old_ids = w.restrict(nodes)
    result, pair = sweep_component(sub, tol=tol, seed=seed)
    witness = frozenset(int(old_ids[v]) for v in result.best_set)
    domain = frozenset(nodes)
    local = [inst for inst in instances if inst.anchors <= domain]
    phi_alg = motif_conductance_exact(g, spec, witness, domain=domain,
                                     instances=local)
    if len(nodes) <= max_brute:
        opt = brute_force_optimum(g, spec, max_n=max_brute, instances=local)
        phi_star = opt.phi_star
        eps = 1e-9
        upper_ok = phi_alg <= 4.0 * math.sqrt(phi_star) + eps
        lower_ok = phi_star >= pair.lambda2 / 2.0 - eps
    else:
        phi_star = upper_ok = lower_ok = None
    return CheegerReport(pair.lambda2, phi_alg, phi_star, upper_ok, lower_ok,
                         witness)


# -- partition scoring -------------------------------------------------------

def _aligned_labels(pred, truth):
    if set(pred) != set(truth):
        raise DomainError("predicted and reference assignments must cover "
                          "the same node set")
    nodes = sorted(pred)
    a = [pred[v] for v in nodes]
    b = [truth[v] for v in nodes]
    return a, b


def _contingency(a, b):
    table = {}
    for x, y in zip(a, b):
        table[(x, y)] = table.get((x, y), 0) + 1
    return table


def score_partition(pred, truth):
    """ARI, NMI, purity, and pair-counting F1 of ``pred`` against ``truth``."""
    a, b = _aligned_labels(pred, truth)
    ari = float(adjusted_rand_score(b, a))
    nmi = float(normalized_mutual_info_score(b, a, average_method="arithmetic"))

    table = _contingency(a, b)
    n = len(a)
    best = {}
    for (x, y), c in table.items():
        best[x] = max(best.get(x, 0), c)
    purity = sum(best.values()) / n

    def pairs(counts):
        return sum(c * (c - 1) // 2 for c in counts)

    tp = pairs(table.values())
    pred_pairs = pairs(np.bincount(np.unique(a, return_inverse=True)[1]))
    true_pairs = pairs(np.bincount(np.unique(b, return_inverse=True)[1]))
    precision = tp / pred_pairs if pred_pairs else 0.0
    recall = tp / true_pairs if true_pairs else 0.0
    f1 = (2 * precision * recall / (precision + recall)
          if precision + recall else 0.0)
    return QualityScores(ari, nmi, purity, float(f1))


def _rand_index(a, b):
    n = len(a)
    if n < 2:
        return 1.0
    agree = 0
    for i, j in itertools.combinations(range(n), 2):
        agree += (a[i] == a[j]) == (b[i] == b[j])
    return agree / (n * (n - 1) // 2)


def coherence_accuracy(assignment, labeled_instances):
    """Classification accuracy of a clustering on labeled motif instances.

    An instance (node set, functionality label) is *coherent* when all its
    nodes share one cluster.  The score is the rand index between cluster
    ids and functionality labels over coherent instances, multiplied by the
    coherent fraction.  Returns (accuracy, n_coherent, n_total).
    """
    total = len(labeled_instances)
    if total == 0:
        raise DomainError("no labeled instances")
    clusters, functions = [], []
    for nodes, label in labeled_instances:
        ids = {assignment.get(v) for v in nodes}
        if len(ids) == 1 and None not in ids:
            clusters.append(ids.pop())
            functions.append(label)
    n_coherent = len(clusters)
    if n_coherent == 0:
        return 0.0, 0, total
    accuracy = _rand_index(clusters, functions) * (n_coherent / total)
    return accuracy, n_coherent, total
