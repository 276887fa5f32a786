"""Selection scoring: per-node ratios, self features, gains, summary score.

A summary is two disjoint node sets: ``s1`` holds similarity
representatives, ``s2`` difference representatives.  Each tree node is
*covered*, per side, by whichever selected ancestor offers it the largest
value, and the summary score adds up those per-node maxima (a classic
facility-location objective, hence monotone and submodular per side).

The value a representative ``x`` offers a subtree node ``y`` factors as

    side weight of x  *  side ratio of y  *  dis(x, y)

where the side weight of x is ``omega(x) * (1 - contrast(x))`` on the
similarity side and ``omega(x) * contrast(x) * gamma`` on the difference
side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import AlreadySelectedError
from .tree import NodeId, WeightedTreePair

SIM = "SIM"
DIF = "DIF"


@dataclass(frozen=True)
class SummarySelection:
    """Disjoint similarity and difference representative sets under budget k."""

    s1: tuple[NodeId, ...]
    s2: tuple[NodeId, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "s1", tuple(sorted(self.s1)))
        object.__setattr__(self, "s2", tuple(sorted(self.s2)))
        overlap = set(self.s1) & set(self.s2)
        if overlap:
            raise ValueError(f"representatives on both sides: {sorted(overlap)}")
        if len(self.s1) + len(self.s2) > self.k:
            raise ValueError(
                f"selection holds {len(self.s1) + len(self.s2)} nodes, budget is {self.k}"
            )

    @property
    def k1(self) -> int:
        return len(self.s1)

    @property
    def k2(self) -> int:
        return len(self.s2)

    @property
    def nodes(self) -> frozenset[NodeId]:
        return frozenset(self.s1) | frozenset(self.s2)

    def side_of(self, x: NodeId) -> str | None:
        if x in self.s1:
            return SIM
        if x in self.s2:
            return DIF
        return None

    def with_node(self, x: NodeId, side: str) -> "SummarySelection":
        if x in self.nodes:
            raise AlreadySelectedError(f"node {x} is already selected")
        if side == SIM:
            return SummarySelection(self.s1 + (x,), self.s2, self.k)
        return SummarySelection(self.s1, self.s2 + (x,), self.k)


@dataclass
class CoverageAssignment:
    """Best covering representative per node and side.

    ``sim_rep[y]`` is the similarity representative covering ``y`` (-1 when
    none) and ``sim_value[y]`` its contribution; likewise for the
    difference side.  Ties go to the deepest ancestor.
    """

    sim_rep: np.ndarray
    sim_value: np.ndarray
    dif_rep: np.ndarray
    dif_value: np.ndarray

    def best_sim(self, y: NodeId) -> tuple[NodeId, float] | None:
        r = int(self.sim_rep[y])
        return None if r < 0 else (r, float(self.sim_value[y]))

    def best_dif(self, y: NodeId) -> tuple[NodeId, float] | None:
        r = int(self.dif_rep[y])
        return None if r < 0 else (r, float(self.dif_value[y]))


def sim_ratio(pair: WeightedTreePair, y: NodeId) -> float:
    """Agreement share of a node's two weights: min/max, 1 for (0, 0)."""
    f1, f2 = int(pair.freq1[y]), int(pair.freq2[y])
    m = max(f1, f2)
    if m == 0:
        return 1.0
    return min(f1, f2) / m


def dif_ratio(pair: WeightedTreePair, y: NodeId) -> float:
    """Divergence share: |w1 - w2|/max, 0 for (0, 0); complements sim_ratio."""
    f1, f2 = int(pair.freq1[y]), int(pair.freq2[y])
    m = max(f1, f2)
    if m == 0:
        return 0.0
    return abs(f1 - f2) / m


def sim_ratios(pair: WeightedTreePair) -> np.ndarray:
    m = np.maximum(pair.freq1, pair.freq2).astype(np.float64)
    out = np.ones(len(pair), dtype=np.float64)
    nz = m > 0
    out[nz] = np.minimum(pair.freq1, pair.freq2)[nz] / m[nz]
    return out


def dif_ratios(pair: WeightedTreePair) -> np.ndarray:
    return 1.0 - sim_ratios(pair)


def self_sim(pair: WeightedTreePair, x: NodeId, s1: Iterable[NodeId]) -> float:
    """Similarity self feature of x: agreement of its subtree nodes weighted
    by reach, skipping nodes already under a selected similarity rep."""
    covered = _covered_mask(pair, s1)
    total = 0.0
    lo, hi = pair.subtree_span(x)
    for y in pair.post_order[lo:hi]:
        y = int(y)
        if covered[y]:
            continue
        total += sim_ratio(pair, y) * pair.dis(x, y)
    return total


def self_dif(pair: WeightedTreePair, x: NodeId, s2: Iterable[NodeId], gamma: float) -> float:
    """Difference self feature of x, scaled by the balance factor gamma."""
    covered = _covered_mask(pair, s2)
    total = 0.0
    lo, hi = pair.subtree_span(x)
    for y in pair.post_order[lo:hi]:
        y = int(y)
        if covered[y]:
            continue
        total += dif_ratio(pair, y) * pair.dis(x, y)
    return gamma * total


def _covered_mask(pair: WeightedTreePair, reps: Iterable[NodeId]) -> np.ndarray:
    """covered[y] == True when some rep is an ancestor of y (or y itself)."""
    covered = np.zeros(len(pair), dtype=bool)
    for r in reps:
        lo, hi = pair.subtree_span(r)
        covered[pair.post_order[lo:hi]] = True
    return covered


def gain_sim(
    pair: WeightedTreePair, x: NodeId, s1: Iterable[NodeId], scores: Sequence[float]
) -> float:
    """Similarity gain of x against the already-selected set s1."""
    return pair.differential_weight(x) * (1.0 - scores[x]) * self_sim(pair, x, s1)


def gain_dif(
    pair: WeightedTreePair,
    x: NodeId,
    s2: Iterable[NodeId],
    scores: Sequence[float],
    gamma: float,
) -> float:
    """Difference gain of x against the already-selected set s2."""
    return pair.differential_weight(x) * scores[x] * self_dif(pair, x, s2, gamma)


def side_weights(
    pair: WeightedTreePair, scores: Sequence[float], gamma: float
) -> tuple[np.ndarray, np.ndarray]:
    """Per-node representative strength on each side."""
    omega = pair.differential_weights.astype(np.float64)
    scores = np.asarray(scores, dtype=np.float64)
    return omega * (1.0 - scores), omega * scores * gamma


def summary_score(
    pair: WeightedTreePair,
    selection: SummarySelection,
    scores: Sequence[float],
    gamma: float,
) -> tuple[float, CoverageAssignment]:
    """Summary score of a selection plus the coverage realizing it.

    Straightforward reference evaluation: every node looks up through its
    ancestor chain for the best representative on each side.  The faster
    sweep used during selection is checked against this one in the tests.
    """
    n = len(pair)
    c_sim, c_dif = side_weights(pair, scores, gamma)
    r_sim = sim_ratios(pair)
    r_dif = dif_ratios(pair)
    in_s1 = set(selection.s1)
    in_s2 = set(selection.s2)

    cov = CoverageAssignment(
        sim_rep=np.full(n, -1, dtype=np.int64),
        sim_value=np.zeros(n, dtype=np.float64),
        dif_rep=np.full(n, -1, dtype=np.int64),
        dif_value=np.zeros(n, dtype=np.float64),
    )
    total = 0.0
    for y in range(n):
        best_s = best_d = 0.0
        rep_s = rep_d = -1
        # Walk y -> root: the first (deepest) ancestor reached wins ties,
        # and a selected ancestor counts as covering even at value 0.
        for x in pair.ancestor_chain(y):
            reach = 1.0 / (int(pair.level[y]) - int(pair.level[x]) + 1)
            if x in in_s1:
                v = c_sim[x] * r_sim[y] * reach
                if rep_s < 0 or v > best_s:
                    best_s, rep_s = v, x
            if x in in_s2:
                v = c_dif[x] * r_dif[y] * reach
                if rep_d < 0 or v > best_d:
                    best_d, rep_d = v, x
        if rep_s >= 0:
            cov.sim_rep[y] = rep_s
            cov.sim_value[y] = best_s
            total += best_s
        if rep_d >= 0:
            cov.dif_rep[y] = rep_d
            cov.dif_value[y] = best_d
            total += best_d
    return total, cov


def marginal_gain(
    pair: WeightedTreePair,
    x: NodeId,
    side: str,
    selection: SummarySelection,
    scores: Sequence[float],
    gamma: float,
) -> float:
    """Score increase from adding x to the given side; never negative."""
    if x in selection.nodes:
        raise AlreadySelectedError(f"node {x} is already selected")
    before, _ = summary_score(pair, selection, scores, gamma)
    after, _ = summary_score(pair, selection.with_node(x, side), scores, gamma)
    return after - before
