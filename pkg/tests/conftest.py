from __future__ import annotations

import random

import pytest

from duotree import WeightedTreePair, build_tree

# Three-node fixture used throughout: root (10, 10) with children
# a (100, 0) and b (50, 45).  Ids: r=0, a=1, b=2.
F1_ROWS = [("r", None, 10, 10), ("a", "r", 100, 0), ("b", "r", 50, 45)]


@pytest.fixture
def f1() -> WeightedTreePair:
    return build_tree(F1_ROWS)


def random_pair(rng: random.Random, n: int, wmax: int = 20) -> WeightedTreePair:
    """Small random tree with small integer weights (ties and zeros likely)."""
    rows = [("n0", None, rng.randint(0, wmax), rng.randint(0, wmax))]
    for i in range(1, n):
        parent = f"n{rng.randrange(i)}"
        rows.append((f"n{i}", parent, rng.randint(0, wmax), rng.randint(0, wmax)))
    return build_tree(rows)
