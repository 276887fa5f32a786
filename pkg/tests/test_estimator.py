from __future__ import annotations

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from duotree import TreePairSummarizer, build_tree, greedy_summary, split_optimized_summary
from duotree.estimator import DIF_LABEL, SIM_LABEL, UNSELECTED


class TestEstimatorApi:
    def test_get_set_params_and_clone(self):
        est = TreePairSummarizer(k=3, beta=2, strategy="split")
        assert est.get_params() == {"k": 3, "beta": 2, "strategy": "split"}
        twin = clone(est)
        assert twin.get_params() == est.get_params()
        est.set_params(k=5)
        assert est.k == 5

    def test_requires_tree_pair(self):
        with pytest.raises(TypeError, match="WeightedTreePair"):
            TreePairSummarizer().fit([[1, 2], [3, 4]])

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            TreePairSummarizer().score()

    def test_bad_strategy(self, f1):
        with pytest.raises(ValueError, match="strategy"):
            TreePairSummarizer(strategy="magic").fit(f1)

    def test_bad_budget(self, f1):
        with pytest.raises(ValueError):
            TreePairSummarizer(k=0).fit(f1)


class TestFit:
    def test_matches_library_call(self, f1):
        est = TreePairSummarizer(k=2, beta=1).fit(f1)
        selection, _ = greedy_summary(f1, 2, 1)
        assert est.s1_ == selection.s1
        assert est.s2_ == selection.s2
        assert est.k1_ == selection.k1 and est.k2_ == selection.k2
        assert est.gamma_ == pytest.approx(4.5)
        assert est.summary_score_ == pytest.approx(est.score(), abs=1e-12)

    def test_split_strategy(self, f1):
        est = TreePairSummarizer(k=1, beta=1, strategy="split").fit(f1)
        selection, split, _ = split_optimized_summary(f1, 1, 1)
        assert est.split_ == split == (0, 1)
        assert est.s2_ == selection.s2

    def test_labels_and_fit_predict(self, f1):
        labels = TreePairSummarizer(k=2, beta=1).fit_predict(f1)
        assert labels.shape == (3,)
        assert set(np.unique(labels)) <= {UNSELECTED, SIM_LABEL, DIF_LABEL}
        est = TreePairSummarizer(k=2, beta=1).fit(f1)
        for x in est.s1_:
            assert labels[x] == SIM_LABEL
        for x in est.s2_:
            assert labels[x] == DIF_LABEL

    def test_score_against_other_weights(self, f1):
        est = TreePairSummarizer(k=1, beta=1).fit(f1)
        other = build_tree([("r", None, 10, 10), ("a", "r", 100, 0), ("b", "r", 50, 45)])
        assert est.score(other) == pytest.approx(est.summary_score_)
        tiny = build_tree([("r", None, 1, 1)])
        with pytest.raises(ValueError, match="same node count"):
            est.score(tiny)
