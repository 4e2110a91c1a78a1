"""Embedding sets, minimal clusters, difference profiles, and
equivalence-class enumeration for words under generalized factor order."""

from .clusters import (PreCluster, blocked_count, compose_embeddings,
                       extended_minimal_cluster, minimal_cluster, pre_cluster,
                       render_tableau)
from .embedding import (EmbeddingSet, as_embedding_set, embedding_count,
                        embedding_set, embeds_at, format_embedding_set,
                        iter_shift_sets, leq_factor, parse_embedding_set)
from .enumeration import (ClassPartition, class_statistics, cross_fingerprint,
                          enumerate_classes, partition_as_dict, ss_fingerprint)
from .equivalence import (KIND_EQUIVALENT_UP_TO_BOUND, KIND_IDENTITY_CLASS,
                          KIND_NEAR_IDENTITY_CLASS, KIND_NEITHER, KIND_REFUTED,
                          DifferenceProfile, Verdict, adjacent_top_swap,
                          cross_equivalent, difference_profile,
                          distances_to_larger, minimal_clusters_rearranged,
                          rearrangement_witness_search, reversal_class_kind,
                          ss_class, ss_equivalent)
from .genfun import (TruncatedSeries, cluster_series, compositions, count_geq,
                     count_embedding_exactly, count_embedding_superset,
                     em_count_distribution, embedding_series, factor_series,
                     minimal_cluster_terms, strong_truncated_equal,
                     wilf_truncated_equal)
from .tree import (CrossTree, build_tree, configuration, cross_class,
                   export_tree, partition_leaves, render_partial)
from .words import (Permutation, Word, as_permutation, as_word, format_word,
                    inverse, is_permutation, letter_stats, norm, parse_word,
                    reversal, shift_up, weight)

__version__ = "0.1.0"

__all__ = [
    "ClassPartition", "CrossTree", "DifferenceProfile", "EmbeddingSet",
    "KIND_EQUIVALENT_UP_TO_BOUND", "KIND_IDENTITY_CLASS",
    "KIND_NEAR_IDENTITY_CLASS", "KIND_NEITHER", "KIND_REFUTED", "Permutation",
    "PreCluster", "TruncatedSeries", "Verdict", "Word", "adjacent_top_swap",
    "as_embedding_set", "as_permutation", "as_word", "blocked_count",
    "build_tree", "class_statistics", "cluster_series", "compose_embeddings",
    "compositions", "configuration", "count_embedding_exactly",
    "count_embedding_superset", "count_geq", "cross_class",
    "cross_equivalent", "cross_fingerprint", "difference_profile",
    "distances_to_larger", "em_count_distribution", "embedding_count",
    "embedding_series", "embedding_set", "embeds_at", "enumerate_classes",
    "export_tree", "extended_minimal_cluster", "factor_series",
    "format_embedding_set", "format_word", "inverse", "is_permutation",
    "iter_shift_sets", "leq_factor", "letter_stats", "minimal_cluster",
    "minimal_cluster_terms", "minimal_clusters_rearranged", "norm",
    "parse_embedding_set", "parse_word", "partition_as_dict",
    "partition_leaves", "pre_cluster", "rearrangement_witness_search",
    "render_partial", "render_tableau", "reversal", "reversal_class_kind",
    "shift_up", "ss_class", "ss_equivalent", "ss_fingerprint",
    "strong_truncated_equal", "weight", "wilf_truncated_equal",
]
