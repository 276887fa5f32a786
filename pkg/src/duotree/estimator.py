"""Scikit-learn style front door for the whole pipeline.

``TreePairSummarizer`` behaves like a clusterer: ``fit`` runs the
selection on a :class:`~duotree.tree.WeightedTreePair` and exposes the
result through fitted attributes, ``fit_predict`` returns a per-node
side label array.  ``get_params``/``set_params``/``clone`` work as usual,
so the summarizer slots into pipelines and parameter sweeps.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .distribution import contrast_scores
from .scoring import summary_score
from .selection import greedy_summary, split_optimized_summary
from .validation import check_beta, check_budget, check_tree_pair

UNSELECTED, SIM_LABEL, DIF_LABEL = -1, 0, 1


class TreePairSummarizer(BaseEstimator):
    """Select k representative nodes from a two-weight tree.

    Parameters
    ----------
    k : int, default 10
        Representative budget.
    beta : int, default 50
        How many top weight pairs each node's distribution keeps.
    strategy : {"greedy", "split"}, default "greedy"
        "greedy" interleaves both sides lazily; "split" additionally
        searches every (k1, k2) budget split (slower, sometimes better).

    Attributes (after fit)
    ----------------------
    selection_ : SummarySelection        the chosen representatives
    s1_, s2_ : tuple[int, ...]           similarity / difference reps
    k1_, k2_ : int                       per-side counts
    labels_ : ndarray of shape (n,)      -1 unselected, 0 similarity, 1 difference
    gamma_ : float                       difference balance factor
    contrast_ : ndarray of shape (n,)    per-node contrast scores
    summary_score_ : float               objective value of the selection
    trace_ : GreedyTrace                 pick order with gains
    split_ : tuple[int, int] | None      chosen (k1, k2) when strategy="split"
    """

    def __init__(self, k: int = 10, beta: int = 50, strategy: str = "greedy"):
        self.k = k
        self.beta = beta
        self.strategy = strategy

    def fit(self, X, y=None):
        pair = check_tree_pair(X)
        check_budget(self.k, len(pair))
        check_beta(self.beta)
        if self.strategy not in ("greedy", "split"):
            raise ValueError(f"unknown strategy {self.strategy!r}")

        if self.strategy == "split":
            selection, split, trace = split_optimized_summary(pair, self.k, self.beta)
            self.split_ = split
        else:
            selection, trace = greedy_summary(pair, self.k, self.beta)
            self.split_ = None

        self.tree_ = pair
        self.selection_ = selection
        self.s1_, self.s2_ = selection.s1, selection.s2
        self.k1_, self.k2_ = selection.k1, selection.k2
        self.trace_ = trace
        self.gamma_ = pair.scaling_coefficient()
        self.contrast_ = contrast_scores(pair, self.beta)
        score, coverage = summary_score(pair, selection, self.contrast_, self.gamma_)
        self.summary_score_ = score
        self.coverage_ = coverage

        labels = np.full(len(pair), UNSELECTED, dtype=np.int64)
        labels[list(selection.s1)] = SIM_LABEL
        labels[list(selection.s2)] = DIF_LABEL
        self.labels_ = labels
        return self

    def fit_predict(self, X, y=None) -> np.ndarray:
        return self.fit(X).labels_

    def score(self, X=None, y=None) -> float:
        """Objective value of the fitted selection.

        With ``X`` given, the fitted selection is re-evaluated against
        that tree (same topology, possibly different weights).
        """
        self._check_fitted()
        if X is None:
            return self.summary_score_
        pair = check_tree_pair(X)
        if len(pair) != len(self.tree_):
            raise ValueError("score(X) needs a tree with the same node count as fitted")
        scores = contrast_scores(pair, self.beta)
        value, _ = summary_score(pair, self.selection_, scores, pair.scaling_coefficient())
        return value

    def _check_fitted(self):
        if not hasattr(self, "selection_"):
            raise NotFittedError("this TreePairSummarizer is not fitted yet; call fit first")
