"""Seeded random tree-pair generator for benchmarks and tests."""

from __future__ import annotations

import random

from .tree import WeightedTreePair


def synth_generate(
    node_count: int,
    max_branching: int = 8,
    weight_model: str = "uniform",
    seed: int = 0,
    low: int = 0,
    high: int = 1000,
    rho: float = 0.5,
    hotspots: int = 3,
    hotspot_low: int = 200,
    hotspot_high: int = 400,
) -> WeightedTreePair:
    """Build a reproducible random tree pair.

    Topology: nodes attach one by one to a uniformly chosen existing node
    that still has branching capacity.  Weight models:

    - ``uniform``: both weights drawn independently in [low, high].
    - ``correlated``: first weight uniform; with probability ``rho`` the
      second copies it, otherwise it is drawn fresh.
    - ``hotspot``: second weight equals the first everywhere except inside
      ``hotspots`` randomly chosen subtrees, whose nodes gain an extra
      [hotspot_low, hotspot_high] on the second side — difference mass
      concentrated in a few places.

    Same arguments, same tree: the generator is fully driven by ``seed``.
    """
    if node_count < 1:
        raise ValueError(f"node_count must be >= 1, got {node_count}")
    if max_branching < 1:
        raise ValueError(f"max_branching must be >= 1, got {max_branching}")
    if weight_model not in ("uniform", "correlated", "hotspot"):
        raise ValueError(f"unknown weight model {weight_model!r}")

    rng = random.Random(seed)
    parent = [-1] * node_count
    child_count = [0] * node_count
    open_nodes = [0]  # nodes with spare branching capacity
    for node in range(1, node_count):
        idx = rng.randrange(len(open_nodes))
        p = open_nodes[idx]
        parent[node] = p
        child_count[p] += 1
        if child_count[p] >= max_branching:
            # swap-remove keeps the choice O(1)
            open_nodes[idx] = open_nodes[-1]
            open_nodes.pop()
        open_nodes.append(node)

    freq1 = [rng.randint(low, high) for _ in range(node_count)]
    if weight_model == "uniform":
        freq2 = [rng.randint(low, high) for _ in range(node_count)]
    elif weight_model == "correlated":
        freq2 = [
            f if rng.random() < rho else rng.randint(low, high) for f in freq1
        ]
    else:
        freq2 = list(freq1)
        # mark whole subtrees: descendants resolve through parent pointers
        chosen_roots = [rng.randrange(node_count) for _ in range(min(hotspots, node_count))]
        chosen = set(chosen_roots)
        in_hotspot = [False] * node_count
        for node in range(node_count):
            walker = node
            while walker >= 0:
                if walker in chosen:
                    in_hotspot[node] = True
                    break
                walker = parent[walker]
        for node in range(node_count):
            if in_hotspot[node]:
                freq2[node] = freq1[node] + rng.randint(hotspot_low, hotspot_high)

    labels = [f"n{i}" for i in range(node_count)]
    return WeightedTreePair(labels, parent, freq1, freq2)
