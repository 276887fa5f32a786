from __future__ import annotations

import random
from fractions import Fraction

import pytest

from duotree import (
    CycleDetectedError,
    DuplicateLabelError,
    MultipleRootsError,
    NegativeWeightError,
    UnknownParentError,
    build_tree,
)
from conftest import random_pair


class TestBuild:
    def test_single_node(self):
        pair = build_tree([("r", None, 10, 10)])
        assert len(pair) == 1
        assert pair.level[pair.root] == 0

    def test_f1_levels_and_order(self, f1):
        assert f1.labels == ["r", "a", "b"]
        assert list(f1.level) == [0, 1, 1]
        assert f1.children[0] == [1, 2]  # input order preserved

    def test_unknown_parent(self):
        with pytest.raises(UnknownParentError, match="'x'"):
            build_tree([("r", None, 1, 1), ("a", "x", 2, 2)])

    def test_multiple_roots(self):
        with pytest.raises(MultipleRootsError):
            build_tree([("r", None, 1, 1), ("s", None, 2, 2)])

    def test_no_root(self):
        with pytest.raises(MultipleRootsError):
            build_tree([("a", "b", 1, 1), ("b", "a", 2, 2)])

    def test_cycle_off_the_root(self):
        with pytest.raises(CycleDetectedError):
            build_tree([("r", None, 1, 1), ("a", "b", 1, 1), ("b", "a", 1, 1)])

    def test_negative_weight(self):
        with pytest.raises(NegativeWeightError, match="'a'"):
            build_tree([("r", None, 1, 1), ("a", "r", -3, 2)])

    def test_duplicate_label(self):
        with pytest.raises(DuplicateLabelError, match="'a'"):
            build_tree([("r", None, 1, 1), ("a", "r", 1, 1), ("a", "r", 2, 2)])

    def test_non_integer_weight(self):
        with pytest.raises(TypeError):
            build_tree([("r", None, 1.5, 1)])


class TestTopologyQueries:
    def test_descendants_ancestors_f1(self, f1):
        assert f1.descendants(0) == [0, 1, 2]
        assert f1.descendants(1) == [1]
        assert f1.ancestors(1) == [0, 1]
        assert f1.ancestors(0) == [0]

    def test_duality_on_random_trees(self):
        rng = random.Random(7)
        for _ in range(20):
            pair = random_pair(rng, rng.randint(2, 40))
            for x in range(len(pair)):
                for y in pair.descendants(x):
                    assert x in pair.ancestors(y)
            for y in range(len(pair)):
                for x in pair.ancestors(y):
                    assert y in pair.descendants(x)

    def test_dis_basics(self, f1):
        assert f1.dis(0, 0) == 1.0
        assert f1.dis(0, 1) == 0.5
        assert f1.dis(1, 0) == 0.0  # not a descendant

    def test_dis_grandchild_is_one_third(self):
        pair = build_tree([("r", None, 1, 1), ("a", "r", 1, 1), ("g", "a", 1, 1)])
        assert pair.dis(0, 2) == pytest.approx(1 / 3)

    def test_dis_matches_level_formula_exhaustively(self):
        rng = random.Random(13)
        pair = random_pair(rng, 200)
        for x in range(len(pair)):
            desc = set(pair.descendants(x))
            for y in range(len(pair)):
                if y in desc:
                    expected = 1.0 / (int(pair.level[y]) - int(pair.level[x]) + 1)
                    assert pair.dis(x, y) == pytest.approx(expected)
                    assert 0.0 < pair.dis(x, y) <= 1.0
                else:
                    assert pair.dis(x, y) == 0.0

    def test_tree_distance_via_lca(self, f1):
        assert f1.tree_distance(1, 2) == 2
        assert f1.tree_distance(0, 1) == 1
        assert f1.tree_distance(2, 2) == 0


class TestWeights:
    def test_differential_weight(self, f1):
        assert f1.differential_weight(1) == 100
        assert build_tree([("r", None, 5, 5)]).differential_weight(0) == 5
        assert build_tree([("r", None, 0, 0)]).differential_weight(0) == 0

    def test_gamma_two_node_example(self):
        pair = build_tree([("r", None, 1, 4), ("a", "r", 6, 2)])
        expected = float(Fraction(1, 3) + Fraction(1, 2)) / 2
        assert pair.scaling_coefficient() == pytest.approx(expected)
        assert expected == pytest.approx(5 / 12)

    def test_gamma_f1(self, f1):
        # a: 0/100, b: 45/5 = 9; r excluded -> mean(0, 9) = 4.5
        assert f1.scaling_coefficient() == pytest.approx(4.5)

    def test_gamma_all_equal_defaults_to_one(self):
        pair = build_tree([("r", None, 3, 3), ("a", "r", 7, 7)])
        assert pair.scaling_coefficient() == 1.0

    def test_gamma_ignores_equal_weight_nodes(self):
        rng = random.Random(3)
        for _ in range(20):
            pair = random_pair(rng, rng.randint(2, 25))
            base = pair.scaling_coefficient()
            rows = [(pair.labels[i],
                     None if i == pair.root else pair.labels[int(pair.parent[i])],
                     int(pair.freq1[i]), int(pair.freq2[i]))
                    for i in range(len(pair))]
            rows += [(f"extra{j}", "n0", 11, 11) for j in range(3)]
            grown = build_tree(rows)
            assert grown.scaling_coefficient() == pytest.approx(base)
