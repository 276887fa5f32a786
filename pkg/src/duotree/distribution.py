"""Per-node weight-pair distributions and the contrast score.

Every node is summarized by the top-``beta`` weight pairs found in its
subtree, once ranked by how *similar* the pair is (its common part,
``min(w1, w2)``) and once by how *different* it is (the gap ``|w1 - w2|``).
Both rankings travel bottom-up: a node's candidate pool is its own weight
pair plus whatever its children already kept, so one post-order sweep
covers the whole tree.

The contrast score of a node is the Hellinger distance between the two
rankings viewed as discrete distributions: 0 means the subtree's mass sits
in pairs that agree, 1 means it sits in pairs that diverge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .tree import WeightedTreePair

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


class RepEntry(NamedTuple):
    """One weight pair kept in a ranking, remembering which node it came from."""

    w1: int
    w2: int
    source: int

    @property
    def similarity(self) -> int:
        return min(self.w1, self.w2)

    @property
    def difference(self) -> int:
        return abs(self.w1 - self.w2)


def _sim_key(e: RepEntry):
    # Value first, then heavier pairs; keeps results independent of the
    # order node ids were assigned in, ranks (0, 0) strictly last, and
    # leaves source to split exact duplicates only.
    return (-e.similarity, -(e.w1 + e.w2), e.w1, e.source)


def _dif_key(e: RepEntry):
    return (-e.difference, -(e.w1 + e.w2), e.w1, e.source)


@dataclass(frozen=True)
class PairedDistribution:
    """Exactly ``beta`` similarity entries and ``beta`` difference entries.

    Entries are sorted by their ranking value, largest first, and padded
    with (0, 0) pairs when the subtree holds fewer candidates than beta.
    """

    sim_entries: tuple[RepEntry, ...]
    dif_entries: tuple[RepEntry, ...]

    @property
    def beta(self) -> int:
        return len(self.sim_entries)

    def sim_vector(self) -> list[int]:
        """Interleaved [w1, w2, w1, w2, ...] of length 2*beta."""
        out = []
        for e in self.sim_entries:
            out.append(e.w1)
            out.append(e.w2)
        return out

    def dif_vector(self) -> list[int]:
        out = []
        for e in self.dif_entries:
            out.append(e.w1)
            out.append(e.w2)
        return out

    def similarity_mass(self) -> int:
        """Total common weight captured by the similarity ranking."""
        return sum(e.similarity for e in self.sim_entries)

    def difference_mass(self) -> int:
        """Total weight gap captured by the difference ranking."""
        return sum(e.difference for e in self.dif_entries)


def pass_up(pair: WeightedTreePair, beta: int) -> list[PairedDistribution]:
    """Compute every node's paired distribution in one post-order sweep.

    Returns a list indexed by node id.  Because ranking values ride along
    unchanged, keeping the top beta at every step is exact: a node's
    entries equal the top beta over all weight pairs in its subtree.
    """
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")

    n = len(pair)
    # Real (unpadded) entries per node, reused as the parents' pools.
    sim_real: list[list[RepEntry]] = [[] for _ in range(n)]
    dif_real: list[list[RepEntry]] = [[] for _ in range(n)]
    f1, f2 = pair.freq1, pair.freq2

    for node in pair.post_order:
        node = int(node)
        own = RepEntry(int(f1[node]), int(f2[node]), node)
        sim_pool = [own]
        dif_pool = [own]
        for child in pair.children[node]:
            sim_pool.extend(sim_real[child])
            dif_pool.extend(dif_real[child])
        # (0, 0) pairs carry no value on either ranking; dropping them here
        # keeps pools small and never changes vectors or masses.
        sim_pool = [e for e in sim_pool if e.w1 or e.w2] or [own]
        dif_pool = [e for e in dif_pool if e.w1 or e.w2] or [own]
        sim_pool.sort(key=_sim_key)
        dif_pool.sort(key=_dif_key)
        sim_real[node] = sim_pool[:beta]
        dif_real[node] = dif_pool[:beta]

    result = []
    for node in range(n):
        pad_s = [RepEntry(0, 0, node)] * (beta - len(sim_real[node]))
        pad_d = [RepEntry(0, 0, node)] * (beta - len(dif_real[node]))
        result.append(
            PairedDistribution(
                sim_entries=tuple(sim_real[node]) + tuple(pad_s),
                dif_entries=tuple(dif_real[node]) + tuple(pad_d),
            )
        )
    return result


def hellinger(p, q) -> float:
    """Hellinger distance between two discrete probability vectors."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    d = _INV_SQRT2 * math.sqrt(float(np.sum((np.sqrt(p) - np.sqrt(q)) ** 2)))
    # Guard float dust; the true value lives in [0, 1].
    return min(1.0, max(0.0, d))


def contrast_score(dist: PairedDistribution) -> float:
    """Contrast of one node's subtree, in [0, 1].

    Both rankings are normalized by their own vector totals and compared
    coordinate-wise with the Hellinger distance.  Degenerate subtrees skip
    the distance: no captured gap means a purely similar subtree (0), gap
    but no captured common weight means a purely different one (1).
    """
    dif_mass = dist.difference_mass()
    if dif_mass == 0:
        return 0.0
    if dist.similarity_mass() == 0:
        return 1.0
    sim_vec = np.asarray(dist.sim_vector(), dtype=np.float64)
    dif_vec = np.asarray(dist.dif_vector(), dtype=np.float64)
    return hellinger(sim_vec / sim_vec.sum(), dif_vec / dif_vec.sum())


def contrast_scores(pair: WeightedTreePair, beta: int) -> np.ndarray:
    """Contrast score per node id, leaves included."""
    dists = pass_up(pair, beta)
    return np.array([contrast_score(d) for d in dists], dtype=np.float64)
