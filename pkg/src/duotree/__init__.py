"""duotree: comparative summarization of two node-weighted trees.

Given one tree shape carrying two weight assignments, pick k
representative nodes — some summarizing where the weights agree, some
where they diverge — maximizing a coverage objective, then render the
result compactly.
"""

from .align import subtree_match_score, zero_fill_align
from .baselines import brute_force_opt, cagg, common_tree, feq
from .distribution import (
    PairedDistribution,
    RepEntry,
    contrast_score,
    contrast_scores,
    hellinger,
    pass_up,
)
from .errors import (
    AlreadySelectedError,
    CycleDetectedError,
    DuotreeError,
    DuplicateLabelError,
    EmptySelectionError,
    EmptyTreeError,
    MultipleRootsError,
    NegativeWeightError,
    NoAnchorError,
    ParseError,
    RootLabelMismatchError,
    TooLargeForOracleError,
    UnknownParentError,
)
from .estimator import TreePairSummarizer
from .generate import synth_generate
from .io import (
    load_labels_file,
    load_tree_pair,
    save_tree_pair,
    selection_from_document,
    summary_to_document,
    tree_from_document,
    tree_to_document,
    write_summary_document,
)
from .metrics import MetricReport, avg_level_difference, diversity, metric_report, query_closeness
from .scoring import (
    DIF,
    SIM,
    CoverageAssignment,
    SummarySelection,
    dif_ratio,
    gain_dif,
    gain_sim,
    marginal_gain,
    self_dif,
    self_sim,
    sim_ratio,
    summary_score,
)
from .selection import (
    GreedyTrace,
    TracePick,
    greedy_summary,
    naive_greedy_summary,
    split_optimized_summary,
)
from .tree import WeightedTreePair, build_tree
from .viz import emit_summary_graph

__version__ = "0.1.0"

__all__ = [
    "AlreadySelectedError",
    "CoverageAssignment",
    "CycleDetectedError",
    "DIF",
    "DuotreeError",
    "DuplicateLabelError",
    "EmptySelectionError",
    "EmptyTreeError",
    "GreedyTrace",
    "MetricReport",
    "MultipleRootsError",
    "NegativeWeightError",
    "NoAnchorError",
    "PairedDistribution",
    "ParseError",
    "RepEntry",
    "RootLabelMismatchError",
    "SIM",
    "SummarySelection",
    "TooLargeForOracleError",
    "TracePick",
    "TreePairSummarizer",
    "UnknownParentError",
    "WeightedTreePair",
    "avg_level_difference",
    "brute_force_opt",
    "build_tree",
    "cagg",
    "common_tree",
    "contrast_score",
    "contrast_scores",
    "dif_ratio",
    "diversity",
    "emit_summary_graph",
    "feq",
    "gain_dif",
    "gain_sim",
    "greedy_summary",
    "hellinger",
    "load_labels_file",
    "load_tree_pair",
    "marginal_gain",
    "metric_report",
    "naive_greedy_summary",
    "pass_up",
    "query_closeness",
    "save_tree_pair",
    "selection_from_document",
    "self_dif",
    "self_sim",
    "sim_ratio",
    "split_optimized_summary",
    "subtree_match_score",
    "summary_score",
    "summary_to_document",
    "synth_generate",
    "tree_from_document",
    "tree_to_document",
    "write_summary_document",
    "zero_fill_align",
]
