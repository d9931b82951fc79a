"""Command-line front end.

Subcommands: ``motifs list``, ``build-wm``, ``cluster``, ``certify``,
``score``.  All outputs are deterministic for a fixed seed: entries are
sorted before writing, JSON uses sorted keys, and numeric work runs under a
fixed BLAS thread budget (default 1, overridable with --threads or
$MOTIFCLUST_THREADS).

Exit codes: 0 success, 1 usage error, 2 data error, 3 non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from threadpoolctl import threadpool_limits

from . import __version__
from .adjacency import build_motif_adjacency
from .cluster import embed_kmeans, recursive_bipartition, sweep_component
from .errors import (ConvergenceError, MotifClustError, ParseError,
                     UnknownMotifError)
from .graph import connected_components, parse_edge_list, split_edges
from .motifs import available_motifs, resolve_motif
from .oracle import cheeger_certify, score_partition
from .spectral import DEFAULT_TOL


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _json_text(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _load_graph(args):
    with open(args.input, encoding="utf-8") as fh:
        return parse_edge_list(fh, directed=not args.undirected,
                               signed=args.signed, weighted=args.weighted)


def _graph_summary(g):
    split = split_edges(g)
    return {
        "nodes": g.node_count,
        "edges": int(g.num_edges),
        "unidirectional_edges": len(split.unidirectional),
        "reciprocal_pairs": len(split.bidirectional),
        "dropped_self_loops": g.dropped_self_loops,
    }


def _component_summary(w):
    comp = connected_components(w)
    return {
        "component_sizes": [s for s in comp.sizes if s > 1],
        "isolated_nodes": sum(1 for s in comp.sizes if s == 1),
    }


def _largest_component(w):
    comp = connected_components(w)
    nodes = [int(v) for v in comp.nodes_of(0)]
    sub, old_ids = w.restrict(nodes)
    return sub, old_ids


def cmd_motifs(args):
    if args.action == "list":
        for name in available_motifs():
            print(name)
    return 0


def cmd_build_wm(args):
    g = _load_graph(args)
    spec = resolve_motif(args.motif)
    w = build_motif_adjacency(g, spec)
    os.makedirs(args.out, exist_ok=True)

    lines = [f"{i}\t{j}\t{wt:.10g}" for i, j, wt in w.coordinates()]
    _write(os.path.join(args.out, "wm-coordinates.tsv"),
           "\n".join(lines) + ("\n" if lines else ""))
    _write(os.path.join(args.out, "node-labels.tsv"),
           "".join(f"{v}\t{g.label_of(v)}\n" for v in range(g.node_count)))

    summary = _graph_summary(g)
    summary["motif"] = spec.name or "custom"
    summary["wm_nonzeros"] = int(w.nnz // 2)
    summary.update(_component_summary(w))
    _write(os.path.join(args.out, "summary.json"), _json_text(summary))
    print(f"wrote motif adjacency for {g.node_count} nodes to {args.out}")
    return 0


def _write_partition(path, g, assignment):
    rows = sorted((g.label_of(v), c) for v, c in assignment.items())
    _write(path, "".join(f"{lab}\t{c}\n" for lab, c in rows))


def cmd_cluster(args):
    g = _load_graph(args)
    spec = resolve_motif(args.motif)
    w = build_motif_adjacency(g, spec)
    os.makedirs(args.out, exist_ok=True)
    report = _graph_summary(g)
    report["motif"] = spec.name or "custom"
    report["method"] = args.method
    report.update(_component_summary(w))

    if args.method == "sweep":
        sub, old_ids = _largest_component(w)
        result, pair = sweep_component(sub, tol=args.tol, seed=args.seed)
        members = sorted(int(old_ids[v]) for v in result.best_set)
        assignment = {v: 1 for v in members}
        for v in old_ids:
            assignment.setdefault(int(v), 0)
        _write_partition(os.path.join(args.out, "partition.tsv"), g, assignment)
        profile = "r,phi\n" + "".join(
            f"{r},{phi:.12g}\n" for r, phi in result.profile)
        _write(os.path.join(args.out, "profile.csv"), profile)
        _write(os.path.join(args.out, "best-set.txt"),
               "".join(g.label_of(v) + "\n" for v in members))
        report["lambda2"] = round(pair.lambda2, 12)
        report["lower_bound"] = round(pair.lambda2 / 2.0, 12)
        report["best_phi"] = round(result.best_phi, 12)
        report["cluster_size"] = len(members)
        report["component_size"] = len(old_ids)
    elif args.method == "recursive":
        part = recursive_bipartition(g, spec, args.k, tol=args.tol,
                                     seed=args.seed, w=w)
        _write_partition(os.path.join(args.out, "partition.tsv"), g,
                         part.assignment)
        report["clusters"] = part.k
        report["residual_cluster"] = part.residual
    else:  # embed-kmeans
        sub, old_ids = _largest_component(w)
        part = embed_kmeans(sub, args.k, iters=args.kmeans_iters,
                            seed=args.seed, tol=args.tol)
        assignment = {int(old_ids[v]): c for v, c in part.assignment.items()}
        _write_partition(os.path.join(args.out, "partition.tsv"), g, assignment)
        report["clusters"] = part.k
        report["component_size"] = len(old_ids)

    _write(os.path.join(args.out, "report.json"), _json_text(report))
    print(f"wrote {args.method} clustering to {args.out}")
    return 0


def cmd_certify(args):
    g = _load_graph(args)
    spec = resolve_motif(args.motif)
    os.makedirs(args.out, exist_ok=True)
    rep = cheeger_certify(g, spec, tol=args.tol, seed=args.seed,
                          max_brute=args.max_brute)
    payload = {
        "motif": spec.name or "custom",
        "lambda2": round(rep.lambda2, 12),
        "lower_bound": round(rep.lambda2 / 2.0, 12),
        "phi_alg": round(rep.phi_alg, 12),
        "phi_star": None if rep.phi_star is None else round(rep.phi_star, 12),
        "upper_ok": rep.upper_ok,
        "lower_ok": rep.lower_ok,
        "witness": sorted(g.label_of(v) for v in rep.witness),
        "mode": "full" if rep.phi_star is not None else "lower-bound-only",
    }
    if rep.phi_star is None:
        payload["note"] = ("component exceeds --max-brute; exact optimum "
                          "skipped, eigenvalue lower bound reported")
    _write(os.path.join(args.out, "cheeger-report.json"), _json_text(payload))
    print(f"phi_alg={payload['phi_alg']} mode={payload['mode']}")
    return 0


def _read_assignment(path):
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            toks = line.split("\t")
            if len(toks) != 2:
                raise ParseError("expected node_label cluster_id",
                                 line=lineno)
            out[toks[0]] = toks[1]
    return out


def cmd_score(args):
    pred = _read_assignment(args.pred)
    truth = _read_assignment(args.truth)
    missing = sorted(set(pred) ^ set(truth))
    if missing:
        raise ParseError("prediction and truth cover different nodes: "
                         + ", ".join(missing[:10]))
    scores = score_partition(pred, truth)
    payload = {"ari": round(scores.ari, 6), "nmi": round(scores.nmi, 6),
               "purity": round(scores.purity, 6),
               "pair_f1": round(scores.pair_f1, 6)}
    text = _json_text(payload)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        _write(os.path.join(args.out, "scores.json"), text)
    print(text, end="")
    return 0


def _add_io_args(p, need_motif=True):
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--out", required=True, help="output directory")
    if need_motif:
        p.add_argument("--motif", required=True,
                       help="motif name or pattern file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--signed", action="store_true")
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--undirected", action="store_true",
                   help="treat each input line as an undirected edge")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="motifclust",
        description="Higher-order spectral graph clustering by network motifs")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--threads", type=int,
                        default=int(os.environ.get("MOTIFCLUST_THREADS", "1")),
                        help="BLAS thread budget (default 1, deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("motifs", help="motif catalog operations")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=cmd_motifs)

    p = sub.add_parser("build-wm", help="build the motif adjacency matrix")
    _add_io_args(p)
    p.set_defaults(func=cmd_build_wm)

    p = sub.add_parser("cluster", help="cluster via the motif adjacency")
    _add_io_args(p)
    p.add_argument("--method", default="sweep",
                   choices=["sweep", "recursive", "embed-kmeans"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--kmeans-iters", type=int, default=100)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("certify", help="check both conductance bounds")
    _add_io_args(p)
    p.add_argument("--max-brute", type=int, default=20,
                   help="largest component size scanned exhaustively")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("score", help="score a partition against ground truth")
    p.add_argument("--pred", required=True, help="predicted partition TSV")
    p.add_argument("--truth", required=True, help="reference partition TSV")
    p.add_argument("--out", help="optional output directory")
    p.set_defaults(func=cmd_score)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; the contract here is 1
        if exc.code in (None, 0):
            return 0
        return 1
    try:
        with threadpool_limits(limits=max(1, args.threads)):
            return args.func(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (MotifClustError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
