"""Higher-order spectral graph clustering by network motifs."""

__version__ = "0.1.0"

from .adjacency import (MotifAdjacency, adjacency_from_instances,
                        build_motif_adjacency, combine_weighted,
                        motif_adjacency_by_formula, motif_node_incidence)
from .cluster import (Partition, SweepResult, conductance_weighted,
                      embed_kmeans, motif_conductance_exact,
                      recursive_bipartition, sweep_component, sweep_cut)
from .enumeration import (MotifInstance, classify_triad, enumerate_generic,
                          enumerate_instances, enumerate_kcliques,
                          enumerate_triangles)
from .errors import (CapabilityError, ConvergenceError, DatasetMissingError,
                     DisconnectedError, DomainError, MotifClustError,
                     ParseError, UnknownMotifError)
from .graph import (ComponentMap, DirectedGraph, EdgeSplit,
                    connected_components, degree_ordering, parse_edge_list,
                    split_edges, undirected_view)
from .motifs import (MotifSpec, available_motifs, named_motif,
                     parse_motif_literal, resolve_motif)
from .oracle import (BruteForceOptimum, CheegerReport, QualityScores,
                     brute_force_optimum, cheeger_certify,
                     coherence_accuracy, score_partition)
from .spectral import (FiedlerPair, SpectralEmbedding, SpectralOrdering,
                       embed_k, fiedler_pair, spectral_ordering)
