"""Estimate 4-vertex motif counts of large graphs by 3-path sampling."""

from .basic import BasicSampler, build_basic_weights, estimate_basic, sample_three_path
from .bounds import (
    BinomialObservation,
    ConfidenceInterval,
    interval_for_c1,
    interval_for_motif,
    invert_bounds,
    kl_divergence,
    motif_intervals,
)
from .centered import (
    CenteredSampler,
    build_centered_weights,
    estimate_centered,
    is_centered,
    sample_centered,
)
from .estimate import Estimate
from .exact import ExactCounts, brute_force_counts, fast_exact_counts
from .graph import Graph, load_edge_list, write_edge_list
from .motifs import (
    MOTIF_NAMES,
    Motif,
    MotifCounts,
    classify_four,
    induced_to_vanilla,
    star_count,
    vanilla_to_induced,
)
from .sampling import DiscreteDistribution, RandomSource

__version__ = "0.1.0"

__all__ = [
    "BasicSampler", "build_basic_weights", "estimate_basic", "sample_three_path",
    "BinomialObservation", "ConfidenceInterval", "interval_for_c1", "interval_for_motif",
    "invert_bounds", "kl_divergence", "motif_intervals",
    "CenteredSampler", "build_centered_weights", "estimate_centered", "is_centered",
    "sample_centered",
    "Estimate", "ExactCounts", "brute_force_counts", "fast_exact_counts",
    "Graph", "load_edge_list", "write_edge_list",
    "MOTIF_NAMES", "Motif", "MotifCounts", "classify_four", "induced_to_vanilla",
    "star_count", "vanilla_to_induced",
    "DiscreteDistribution", "RandomSource",
]
