"""Representative selection: lazy greedy and the side-split search.

The greedy keeps one priority-queue entry per candidate node, keyed by the
larger of its two cached side gains.  Cached gains only ever shrink as the
selection grows (the coverage objective is submodular), so a popped entry
whose winning side was computed against the current selection is the true
argmax and can be committed; otherwise just that side is refreshed and the
entry goes back in the queue.  A naive variant that recomputes every
candidate each round exists for cross-checking; both share the same
incremental evaluator so agreement is exact.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .distribution import contrast_scores
from .scoring import DIF, SIM, SummarySelection, dif_ratios, side_weights, sim_ratios
from .tree import WeightedTreePair


class TracePick(NamedTuple):
    node: int
    side: str
    gain: float
    pops: int


@dataclass
class GreedyTrace:
    """Selection order with the gain realized at each pick.

    ``pops`` counts priority-queue pops spent locating that pick.
    ``truncated`` is set when the run stopped before spending the whole
    budget because no remaining candidate could improve the score.
    """

    picks: list[TracePick]
    truncated: bool = False


class CoverageEvaluator:
    """Incremental summary-score evaluator over post-order subtree spans.

    Keeps, for each node and side, the best value any committed
    representative offers it.  Marginal gains and commits then reduce to
    vector operations on the candidate's contiguous subtree slice.
    """

    def __init__(self, pair: WeightedTreePair, scores, gamma: float):
        self.pair = pair
        order = pair.post_order
        self.c_sim, self.c_dif = side_weights(pair, scores, gamma)
        self.level_po = pair.level[order].astype(np.float64)
        self.ratio_sim_po = sim_ratios(pair)[order]
        self.ratio_dif_po = dif_ratios(pair)[order]
        n = len(pair)
        self.cur_sim = np.zeros(n, dtype=np.float64)
        self.cur_dif = np.zeros(n, dtype=np.float64)

    def _candidate_values(self, x: int, side: str) -> tuple[slice, np.ndarray, np.ndarray]:
        lo, hi = self.pair.subtree_span(x)
        span = slice(lo, hi)
        reach = 1.0 / (self.level_po[span] - float(self.pair.level[x]) + 1.0)
        if side == SIM:
            values = self.c_sim[x] * self.ratio_sim_po[span] * reach
            return span, values, self.cur_sim
        values = self.c_dif[x] * self.ratio_dif_po[span] * reach
        return span, values, self.cur_dif

    def marginal(self, x: int, side: str) -> float:
        """Score increase if x were committed to the given side right now."""
        span, values, current = self._candidate_values(x, side)
        return float(np.maximum(values - current[span], 0.0).sum())

    def commit(self, x: int, side: str) -> None:
        span, values, current = self._candidate_values(x, side)
        np.maximum(current[span], values, out=current[span])

    def total(self) -> float:
        return float(self.cur_sim.sum() + self.cur_dif.sum())


def _prepared(pair: WeightedTreePair, k: int, beta: int):
    if k < 1:
        raise ValueError(f"budget k must be >= 1, got {k}")
    k = min(k, len(pair))  # oversized budgets settle for every node
    scores = contrast_scores(pair, beta)
    gamma = pair.scaling_coefficient()
    return k, scores, gamma


def greedy_summary(
    pair: WeightedTreePair, k: int, beta: int
) -> tuple[SummarySelection, GreedyTrace]:
    """Pick up to k representatives by lazy greedy over both sides at once.

    Ties between equal gains go to the smaller node id, and a node whose
    two side gains tie joins the similarity side.  Returns the selection
    and the pick-by-pick trace.
    """
    k, scores, gamma = _prepared(pair, k, beta)
    evaluator = CoverageEvaluator(pair, scores, gamma)
    n = len(pair)

    v_sim = np.array([evaluator.marginal(x, SIM) for x in range(n)])
    v_dif = np.array([evaluator.marginal(x, DIF) for x in range(n)])
    round_sim = np.zeros(n, dtype=np.int64)
    round_dif = np.zeros(n, dtype=np.int64)

    heap = [(-max(float(v_sim[x]), float(v_dif[x])), x) for x in range(n)]
    heapq.heapify(heap)

    s1: list[int] = []
    s2: list[int] = []
    picks: list[TracePick] = []
    truncated = False
    pops = 0
    while len(s1) + len(s2) < k and heap:
        _, x = heapq.heappop(heap)
        pops += 1
        sim_wins = v_sim[x] >= v_dif[x]
        if sim_wins and round_sim[x] < len(s1):
            v_sim[x] = evaluator.marginal(x, SIM)
            round_sim[x] = len(s1)
            heapq.heappush(heap, (-max(float(v_sim[x]), float(v_dif[x])), x))
            continue
        if not sim_wins and round_dif[x] < len(s2):
            v_dif[x] = evaluator.marginal(x, DIF)
            round_dif[x] = len(s2)
            heapq.heappush(heap, (-max(float(v_sim[x]), float(v_dif[x])), x))
            continue
        gain = float(v_sim[x]) if sim_wins else float(v_dif[x])
        if gain == 0.0:
            truncated = True  # nothing left can move the score
            break
        side = SIM if sim_wins else DIF
        (s1 if sim_wins else s2).append(x)
        evaluator.commit(x, side)
        picks.append(TracePick(x, side, gain, pops))
        pops = 0
    if len(s1) + len(s2) < k and not truncated:
        truncated = True

    selection = SummarySelection(tuple(s1), tuple(s2), k)
    return selection, GreedyTrace(picks=picks, truncated=truncated)


def naive_greedy_summary(
    pair: WeightedTreePair, k: int, beta: int
) -> tuple[SummarySelection, GreedyTrace]:
    """Full-recompute greedy; the cross-check for :func:`greedy_summary`."""
    k, scores, gamma = _prepared(pair, k, beta)
    evaluator = CoverageEvaluator(pair, scores, gamma)
    n = len(pair)

    s1: list[int] = []
    s2: list[int] = []
    picks: list[TracePick] = []
    truncated = False
    remaining = set(range(n))
    while len(s1) + len(s2) < k:
        best_gain = 0.0
        best_node = -1
        best_side = SIM
        for x in sorted(remaining):
            g_sim = evaluator.marginal(x, SIM)
            g_dif = evaluator.marginal(x, DIF)
            gain, side = (g_sim, SIM) if g_sim >= g_dif else (g_dif, DIF)
            if gain > best_gain:
                best_gain, best_node, best_side = gain, x, side
        if best_node < 0:
            truncated = True
            break
        (s1 if best_side == SIM else s2).append(best_node)
        remaining.discard(best_node)
        evaluator.commit(best_node, best_side)
        picks.append(TracePick(best_node, best_side, best_gain, len(remaining) + 1))

    selection = SummarySelection(tuple(s1), tuple(s2), k)
    return selection, GreedyTrace(picks=picks, truncated=truncated)


def _one_side_greedy(
    pair: WeightedTreePair,
    scores,
    gamma: float,
    side: str,
    budget: int,
    forbidden: frozenset[int],
) -> tuple[list[int], list[float], float]:
    """Lazy greedy restricted to a single side; used by the split search."""
    evaluator = CoverageEvaluator(pair, scores, gamma)
    n = len(pair)
    heap = []
    value = {}
    round_no = {}
    for x in range(n):
        if x in forbidden:
            continue
        value[x] = evaluator.marginal(x, side)
        round_no[x] = 0
        heap.append((-value[x], x))
    heapq.heapify(heap)

    chosen: list[int] = []
    gains: list[float] = []
    while len(chosen) < budget and heap:
        _, x = heapq.heappop(heap)
        if round_no[x] < len(chosen):
            value[x] = evaluator.marginal(x, side)
            round_no[x] = len(chosen)
            heapq.heappush(heap, (-value[x], x))
            continue
        if value[x] == 0.0:
            break
        chosen.append(x)
        gains.append(value[x])
        evaluator.commit(x, side)
    return chosen, gains, evaluator.total()


def split_optimized_summary(
    pair: WeightedTreePair, k: int, beta: int
) -> tuple[SummarySelection, tuple[int, int], GreedyTrace]:
    """Search the per-side budget splits (k, 0), (k-1, 1), ..., (0, k).

    For each split the larger side is filled first (it gets first claim on
    contested nodes), each side by its own single-side greedy.  A split
    replaces the incumbent only when the score change it brings — loss on
    the shrinking side plus gain on the growing side — is positive, i.e.
    when its total score strictly improves.  Zero-gain picks are never
    padded in, so a side may end below its nominal budget.
    """
    if k < 1:
        raise ValueError(f"budget k must be >= 1, got {k}")
    k = min(k, len(pair))
    scores = contrast_scores(pair, beta)
    gamma = pair.scaling_coefficient()

    best = None
    for k1 in range(k, -1, -1):
        k2 = k - k1
        if k1 > k2:
            sim_nodes, sim_gains, sim_score = _one_side_greedy(
                pair, scores, gamma, SIM, k1, frozenset()
            )
            dif_nodes, dif_gains, dif_score = _one_side_greedy(
                pair, scores, gamma, DIF, k2, frozenset(sim_nodes)
            )
        else:
            dif_nodes, dif_gains, dif_score = _one_side_greedy(
                pair, scores, gamma, DIF, k2, frozenset()
            )
            sim_nodes, sim_gains, sim_score = _one_side_greedy(
                pair, scores, gamma, SIM, k1, frozenset(dif_nodes)
            )
        total = sim_score + dif_score
        if best is None or total > best[0]:
            picks = [
                TracePick(x, SIM, g, 1) for x, g in zip(sim_nodes, sim_gains)
            ] + [TracePick(x, DIF, g, 1) for x, g in zip(dif_nodes, dif_gains)]
            best = (total, sim_nodes, dif_nodes, picks)

    total, sim_nodes, dif_nodes, picks = best
    selection = SummarySelection(tuple(sim_nodes), tuple(dif_nodes), k)
    trace = GreedyTrace(picks=picks, truncated=len(selection.nodes) < k)
    return selection, (len(sim_nodes), len(dif_nodes)), trace
