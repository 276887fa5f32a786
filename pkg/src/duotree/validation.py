"""Input validation helpers shared by the estimator and the CLI."""

from __future__ import annotations

from .scoring import SummarySelection
from .tree import WeightedTreePair


def check_tree_pair(X) -> WeightedTreePair:
    if not isinstance(X, WeightedTreePair):
        raise TypeError(
            f"expected a WeightedTreePair, got {type(X).__name__};"
            " build one with build_tree(), load_tree_pair() or synth_generate()"
        )
    return X


def check_budget(k, n_nodes: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"k must be an integer, got {k!r}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return min(k, n_nodes)


def check_beta(beta) -> int:
    if isinstance(beta, bool) or not isinstance(beta, int):
        raise TypeError(f"beta must be an integer, got {beta!r}")
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    return beta


def check_selection(selection, pair: WeightedTreePair) -> SummarySelection:
    if not isinstance(selection, SummarySelection):
        raise TypeError(f"expected a SummarySelection, got {type(selection).__name__}")
    for x in selection.nodes:
        if not 0 <= x < len(pair):
            raise ValueError(f"selected node id {x} is outside the tree (n={len(pair)})")
    return selection
