"""Single-tree baselines and the exhaustive optimum for small instances.

The baselines come from the single-tree summarization world, so a weight
pair is first flattened to a *common tree* carrying the coordinate-wise
minimum weight.  The exhaustive search exists purely as a verification
oracle for the greedy's approximation quality and is guarded to tiny
inputs.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .distribution import contrast_scores
from .errors import TooLargeForOracleError
from .scoring import SummarySelection, summary_score
from .tree import WeightedTreePair

ORACLE_MAX_NODES = 16
ORACLE_MAX_K = 4


def common_tree(pair: WeightedTreePair) -> WeightedTreePair:
    """Same topology with both weight functions set to min(freq1, freq2)."""
    w = np.minimum(pair.freq1, pair.freq2)
    return WeightedTreePair(pair.labels, pair.parent, w, w)


def feq(tree: WeightedTreePair, k: int) -> list[int]:
    """The k heaviest nodes, ties to the smaller id, ascending ids out.

    ``tree`` is typically a common tree (both weight functions equal);
    the first weight function is read either way.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    order = sorted(range(len(tree)), key=lambda x: (-int(tree.freq1[x]), x))
    return sorted(order[: min(k, len(tree))])


def cagg(tree: WeightedTreePair, k: int) -> list[int]:
    """Weight-greedy selection that avoids nested picks.

    First pass walks positive-weight nodes by descending weight and skips
    any candidate comparable (ancestor or descendant) to an earlier pick,
    so the pass yields an antichain.  If that leaves fewer than k nodes, a
    fallback admits the heaviest remaining nodes regardless of relations.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    k = min(k, len(tree))
    order = sorted(range(len(tree)), key=lambda x: (-int(tree.freq1[x]), x))
    chosen: list[int] = []
    for x in order:
        if len(chosen) == k:
            break
        if tree.freq1[x] <= 0:
            continue
        if any(tree.is_descendant(x, s) or tree.is_descendant(s, x) for s in chosen):
            continue
        chosen.append(x)
    if len(chosen) < k:
        taken = set(chosen)
        for x in order:
            if len(chosen) == k:
                break
            if x not in taken:
                chosen.append(x)
                taken.add(x)
    return sorted(chosen)


def brute_force_opt(
    pair: WeightedTreePair, k: int, beta: int
) -> tuple[SummarySelection, float]:
    """Exhaustive optimum over every <=k subset and every side assignment.

    Guarded to at most 16 nodes and k <= 4; raises TooLargeForOracleError
    beyond that.  Deterministic: the first maximizer in enumeration order
    (subsets by size then lexicographic ids, sides by bitmask) wins.
    """
    n = len(pair)
    if n > ORACLE_MAX_NODES or k > ORACLE_MAX_K:
        raise TooLargeForOracleError(
            f"exhaustive search is limited to {ORACLE_MAX_NODES} nodes and k <= {ORACLE_MAX_K}"
            f" (got n={n}, k={k})"
        )
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")

    scores = contrast_scores(pair, beta)
    gamma = pair.scaling_coefficient()

    best_score = 0.0
    best = SummarySelection((), (), k)
    for size in range(1, min(k, n) + 1):
        for subset in combinations(range(n), size):
            for mask in range(1 << size):
                s1 = tuple(subset[i] for i in range(size) if not (mask >> i) & 1)
                s2 = tuple(subset[i] for i in range(size) if (mask >> i) & 1)
                selection = SummarySelection(s1, s2, k)
                score, _ = summary_score(pair, selection, scores, gamma)
                if score > best_score:
                    best_score = score
                    best = selection
    return best, best_score
