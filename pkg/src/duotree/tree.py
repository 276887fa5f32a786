"""Rooted tree topology carrying two per-node weight functions.

A :class:`WeightedTreePair` is one tree shape evaluated under two weight
assignments (think: the same hierarchy observed at two points in time).
It is immutable after construction and safe to share between threads.

Node identity is a dense integer id assigned in input order.  All
set-valued queries come back in ascending id order so downstream code is
deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CycleDetectedError,
    DuplicateLabelError,
    EmptyTreeError,
    MultipleRootsError,
    NegativeWeightError,
    UnknownParentError,
)

NodeId = int

NodeSpec = tuple[str, str | None, int, int]


def _as_weight(value, label: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"weight of node {label!r} must be an integer, got {value!r}")
    value = int(value)
    if value < 0:
        raise NegativeWeightError(f"node {label!r} has negative weight {value}")
    return value


class WeightedTreePair:
    """Shared rooted topology plus two non-negative integer weight vectors.

    Instances are built through :func:`build_tree` (flat label/parent-label
    rows), the document loaders, or the alignment routines; the raw
    constructor expects already-consistent arrays.

    Attributes
    ----------
    labels   : list[str], node label per id
    parent   : int array, parent id per node, -1 for the root
    children : list[list[int]], children per node in input order
    freq1    : int array, weight of each node under the first assignment
    freq2    : int array, weight under the second assignment
    level    : int array, edge distance from the root
    root     : id of the root node
    """

    __slots__ = (
        "labels",
        "parent",
        "children",
        "freq1",
        "freq2",
        "level",
        "root",
        "_post_order",
        "_post_index",
        "_first_index",
        "_label_index",
    )

    def __init__(
        self,
        labels: Sequence[str],
        parent: Sequence[int],
        freq1: Sequence[int],
        freq2: Sequence[int],
    ):
        n = len(labels)
        if n == 0:
            raise EmptyTreeError("a tree needs at least one node")
        self.labels = list(labels)
        self.parent = np.asarray(parent, dtype=np.int64)
        self.freq1 = np.asarray(freq1, dtype=np.int64)
        self.freq2 = np.asarray(freq2, dtype=np.int64)
        if np.any(self.freq1 < 0) or np.any(self.freq2 < 0):
            bad = int(np.argmax((self.freq1 < 0) | (self.freq2 < 0)))
            raise NegativeWeightError(f"node {self.labels[bad]!r} has a negative weight")

        roots = np.flatnonzero(self.parent < 0)
        if len(roots) != 1:
            names = [self.labels[i] for i in roots]
            raise MultipleRootsError(f"expected exactly one root, found {len(roots)}: {names}")
        self.root = int(roots[0])

        self.children = [[] for _ in range(n)]
        for node in range(n):
            p = int(self.parent[node])
            if p >= 0:
                self.children[p].append(node)

        # Iterative BFS: computes levels and doubles as cycle detection
        # (nodes never reached cannot chain up to the root).
        self.level = np.full(n, -1, dtype=np.int64)
        self.level[self.root] = 0
        queue = [self.root]
        seen = 1
        while queue:
            nxt = []
            for node in queue:
                for c in self.children[node]:
                    self.level[c] = self.level[node] + 1
                    nxt.append(c)
            seen += len(nxt)
            queue = nxt
        if seen != n:
            bad = int(np.argmax(self.level < 0))
            raise CycleDetectedError(
                f"node {self.labels[bad]!r} does not reach the root (cycle or orphan)"
            )

        self._build_post_order()
        self._label_index = None

    # -- construction helpers -------------------------------------------------

    def _build_post_order(self) -> None:
        """Post-order arrangement: every subtree is a contiguous span."""
        n = len(self.labels)
        post = np.empty(n, dtype=np.int64)
        post_index = np.empty(n, dtype=np.int64)
        first_index = np.empty(n, dtype=np.int64)
        pos = 0
        # (node, child cursor) stack; iterative to survive deep chains
        stack = [(self.root, 0)]
        start = {self.root: 0}
        while stack:
            node, cursor = stack[-1]
            kids = self.children[node]
            if cursor < len(kids):
                stack[-1] = (node, cursor + 1)
                child = kids[cursor]
                start[child] = pos
                stack.append((child, 0))
            else:
                stack.pop()
                post[pos] = node
                post_index[node] = pos
                first_index[node] = start[node]
                pos += 1
        self._post_order = post
        self._post_index = post_index
        self._first_index = first_index

    # -- basic queries ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    def subtree_span(self, x: NodeId) -> tuple[int, int]:
        """Half-open slice of ``post_order`` holding des(x), x included."""
        return int(self._first_index[x]), int(self._post_index[x]) + 1

    @property
    def post_order(self) -> np.ndarray:
        return self._post_order

    def is_descendant(self, y: NodeId, x: NodeId) -> bool:
        """True when y lies in the subtree rooted at x (y == x counts)."""
        return self._first_index[x] <= self._post_index[y] <= self._post_index[x]

    def descendants(self, x: NodeId) -> list[NodeId]:
        """Subtree of x including x itself, ascending node ids."""
        lo, hi = self.subtree_span(x)
        return sorted(int(v) for v in self._post_order[lo:hi])

    def ancestors(self, x: NodeId) -> list[NodeId]:
        """Path from x up to the root including x itself, ascending ids."""
        out = []
        node = x
        while node >= 0:
            out.append(int(node))
            node = int(self.parent[node])
        return sorted(out)

    def ancestor_chain(self, x: NodeId) -> Iterable[NodeId]:
        """x, parent(x), ..., root — in walking order."""
        node = x
        while node >= 0:
            yield int(node)
            node = int(self.parent[node])

    def dis(self, x: NodeId, y: NodeId) -> float:
        """Representative reach of x over y: 1/(level gap + 1) inside x's
        subtree, 0 elsewhere.  dis(x, x) == 1."""
        if not self.is_descendant(y, x):
            return 0.0
        return 1.0 / (int(self.level[y]) - int(self.level[x]) + 1)

    def differential_weight(self, x: NodeId) -> int:
        """The larger of the node's two weights."""
        return int(max(self.freq1[x], self.freq2[x]))

    @property
    def differential_weights(self) -> np.ndarray:
        return np.maximum(self.freq1, self.freq2)

    def scaling_coefficient(self) -> float:
        """Balance factor applied to difference scores.

        Mean of min/|gap| over the nodes whose two weights differ; nodes
        with equal weights are left out of both the sum and the count.
        When no node differs the factor is inert and defaults to 1.
        """
        gap = self.freq1 - self.freq2
        mask = gap != 0
        if not np.any(mask):
            return 1.0
        ratios = np.minimum(self.freq1, self.freq2)[mask] / np.abs(gap[mask])
        return float(ratios.mean())

    # -- label helpers ----------------------------------------------------------

    def id_of(self, label: str) -> NodeId:
        """Resolve a label to its node id; labels must be unique for this."""
        if self._label_index is None:
            index: dict[str, int] = {}
            dupes = set()
            for i, lab in enumerate(self.labels):
                if lab in index:
                    dupes.add(lab)
                else:
                    index[lab] = i
            self._label_index = (index, dupes)
        index, dupes = self._label_index
        if label in dupes:
            raise KeyError(f"label {label!r} is ambiguous in this tree")
        if label not in index:
            raise KeyError(f"label {label!r} not found")
        return index[label]

    def path_of(self, x: NodeId) -> list[str]:
        """Labels from the root down to x."""
        chain = list(self.ancestor_chain(x))
        return [self.labels[i] for i in reversed(chain)]

    def id_of_path(self, path: Sequence[str]) -> NodeId:
        """Resolve a root-to-node label path to an id."""
        if not path or path[0] != self.labels[self.root]:
            raise KeyError(f"path {list(path)!r} does not start at the root")
        node = self.root
        for lab in path[1:]:
            for c in self.children[node]:
                if self.labels[c] == lab:
                    node = c
                    break
            else:
                raise KeyError(f"path {list(path)!r}: no child {lab!r} under {self.labels[node]!r}")
        return node

    # -- distances ---------------------------------------------------------------

    def lca(self, u: NodeId, v: NodeId) -> NodeId:
        while self.level[u] > self.level[v]:
            u = int(self.parent[u])
        while self.level[v] > self.level[u]:
            v = int(self.parent[v])
        while u != v:
            u = int(self.parent[u])
            v = int(self.parent[v])
        return u

    def tree_distance(self, u: NodeId, v: NodeId) -> int:
        """Undirected hop count between u and v (through their LCA)."""
        a = self.lca(u, v)
        return int(self.level[u] + self.level[v] - 2 * self.level[a])

    def __repr__(self) -> str:  # pragma: no cover - debugging nicety
        return f"WeightedTreePair(n={len(self)}, root={self.labels[self.root]!r})"


def build_tree(nodes: Sequence[NodeSpec]) -> WeightedTreePair:
    """Assemble a tree pair from flat ``(label, parent_label_or_None, w1, w2)`` rows.

    Node ids follow row order and children keep row order.  Labels must be
    unique because parents are referenced by label.

    Raises
    ------
    DuplicateLabelError, MultipleRootsError, UnknownParentError,
    CycleDetectedError, NegativeWeightError
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    for label, _, _, _ in nodes:
        if label in index:
            raise DuplicateLabelError(f"label {label!r} appears more than once")
        index[label] = len(labels)
        labels.append(label)

    n = len(labels)
    parent = [-1] * n
    freq1 = [0] * n
    freq2 = [0] * n
    roots = []
    for i, (label, parent_label, w1, w2) in enumerate(nodes):
        freq1[i] = _as_weight(w1, label)
        freq2[i] = _as_weight(w2, label)
        if parent_label is None:
            roots.append(label)
        else:
            if parent_label not in index:
                raise UnknownParentError(f"node {label!r} names unknown parent {parent_label!r}")
            parent[i] = index[parent_label]

    if len(roots) != 1:
        raise MultipleRootsError(f"expected exactly one root, found {len(roots)}: {roots}")
    return WeightedTreePair(labels, parent, freq1, freq2)
