"""Summary quality metrics: diversity, query closeness, level distance.

All three take the representative set as a whole (similarity and
difference sides pooled).  They accept either a :class:`SummarySelection`
or any iterable of node ids so externally produced answers can be scored
too.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import EmptySelectionError
from .scoring import SummarySelection
from .tree import WeightedTreePair


@dataclass(frozen=True)
class MetricReport:
    div: float
    cq: float
    ald: float
    query_seed: int
    query_count: int

    def to_tsv(self) -> str:
        return (
            f"div\t{self.div!r}\n"
            f"cq\t{self.cq!r}\n"
            f"ald\t{self.ald!r}\n"
            f"query_seed\t{self.query_seed}\n"
            f"query_count\t{self.query_count}\n"
        )

    def to_dict(self) -> dict:
        return {
            "div": self.div,
            "cq": self.cq,
            "ald": self.ald,
            "query_seed": self.query_seed,
            "query_count": self.query_count,
        }


def _node_set(selection) -> set[int]:
    if isinstance(selection, SummarySelection):
        return set(selection.nodes)
    return set(int(x) for x in selection)


def _nearest_selected_ancestor(pair: WeightedTreePair, y: int, chosen: set[int]) -> int:
    for x in pair.ancestor_chain(y):
        if x in chosen:
            return x
    return -1


def diversity(pair: WeightedTreePair, selection) -> float:
    """Weight-gap mass the summary reaches, discounted by distance.

    Every node with at least one selected ancestor contributes its
    absolute weight gap times the reach of its nearest selected ancestor.
    Higher is better; monotone in the selection.
    """
    chosen = _node_set(selection)
    if not chosen:
        return 0.0
    total = 0.0
    gaps = np.abs(pair.freq1 - pair.freq2)
    for y in range(len(pair)):
        x = _nearest_selected_ancestor(pair, y, chosen)
        if x >= 0:
            total += float(gaps[y]) / (int(pair.level[y]) - int(pair.level[x]) + 1)
    return total


def query_closeness(
    pair: WeightedTreePair,
    selection,
    seed: int = 0,
    query_count: int = 500,
    queries: Iterable[int] | None = None,
) -> float:
    """Total hop distance from sampled query nodes to the summary.

    Queries are drawn uniformly with the seeded generator — without
    replacement when the tree has at least ``query_count`` nodes, with
    replacement otherwise — unless an explicit ``queries`` iterable is
    given.  Lower is better.
    """
    chosen = sorted(_node_set(selection))
    if not chosen:
        raise EmptySelectionError("query closeness needs a non-empty summary")
    if queries is None:
        rng = random.Random(seed)
        ids = range(len(pair))
        if len(pair) >= query_count:
            queries = rng.sample(ids, query_count)
        else:
            queries = [rng.randrange(len(pair)) for _ in range(query_count)]
    total = 0
    for q in queries:
        total += min(pair.tree_distance(int(q), x) for x in chosen)
    return float(total)


def avg_level_difference(pair: WeightedTreePair, selection) -> float:
    """Gap-weighted mean level distance from nodes to their summary cover.

    Only nodes with a selected ancestor and a nonzero weight gap count; 0
    when no node qualifies.  Lower means the summary sits closer to where
    the weight changes live.
    """
    chosen = _node_set(selection)
    num = 0.0
    den = 0.0
    gaps = np.abs(pair.freq1 - pair.freq2)
    for y in range(len(pair)):
        alpha = float(gaps[y])
        if alpha == 0.0:
            continue
        x = _nearest_selected_ancestor(pair, y, chosen)
        if x < 0:
            continue
        num += (int(pair.level[y]) - int(pair.level[x])) * alpha
        den += alpha
    return num / den if den > 0 else 0.0


def metric_report(
    pair: WeightedTreePair,
    selection,
    seed: int = 0,
    query_count: int = 500,
) -> MetricReport:
    """All three metrics in one deterministic bundle."""
    return MetricReport(
        div=diversity(pair, selection),
        cq=query_closeness(pair, selection, seed=seed, query_count=query_count),
        ald=avg_level_difference(pair, selection),
        query_seed=seed,
        query_count=query_count,
    )
