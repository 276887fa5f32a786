"""Reconciling two trees that do not share a topology.

Two differently-shaped trees are unified by matching nodes on their
root-to-node label paths: the union topology gets a node for every path
seen in either tree, and a node missing from one tree simply carries
weight 0 there.  The merged pair then feeds the ordinary pipeline, where
the zero-filled nodes surface as pure difference.

When one tree is essentially a fragment of the other, a full merge is
unnecessary; :func:`subtree_match_score` instead reports how well the
small tree matches inside the big one.
"""

from __future__ import annotations

from .errors import NoAnchorError, ParseError, RootLabelMismatchError
from .tree import WeightedTreePair


def _check_sibling_labels(tree: WeightedTreePair, what: str) -> None:
    for node in range(len(tree)):
        seen = set()
        for c in tree.children[node]:
            lab = tree.labels[c]
            if lab in seen:
                raise ParseError(
                    f"{what}: duplicate sibling label {lab!r} under {tree.labels[node]!r};"
                    " path matching would be ambiguous"
                )
            seen.add(lab)


def zero_fill_align(tree_a: WeightedTreePair, tree_b: WeightedTreePair) -> WeightedTreePair:
    """Merge two single-weight trees into one two-weight pair.

    ``tree_a`` supplies the first weight function and ``tree_b`` the
    second (each input's own two weight functions must agree, as produced
    by the single-weight loaders).  Children keep ``tree_a``'s order with
    ``tree_b``-only nodes appended in its order.  Swapping the arguments
    yields the same node set with the weight functions exchanged.
    """
    if tree_a.labels[tree_a.root] != tree_b.labels[tree_b.root]:
        raise RootLabelMismatchError(
            f"root labels differ: {tree_a.labels[tree_a.root]!r}"
            f" vs {tree_b.labels[tree_b.root]!r}"
        )
    _check_sibling_labels(tree_a, "first tree")
    _check_sibling_labels(tree_b, "second tree")

    labels: list[str] = []
    parents: list[int] = []
    w1: list[int] = []
    w2: list[int] = []

    def add(label: str, parent: int, wa: int, wb: int) -> int:
        labels.append(label)
        parents.append(parent)
        w1.append(wa)
        w2.append(wb)
        return len(labels) - 1

    # Walk matched positions in lockstep; -1 marks "absent from this tree".
    root = add(tree_a.labels[tree_a.root], -1,
               int(tree_a.freq1[tree_a.root]), int(tree_b.freq1[tree_b.root]))
    stack = [(root, tree_a.root, tree_b.root)]
    while stack:
        out_id, a_node, b_node = stack.pop()
        a_kids = tree_a.children[a_node] if a_node >= 0 else []
        b_kids = tree_b.children[b_node] if b_node >= 0 else []
        b_by_label = {tree_b.labels[c]: c for c in b_kids}
        matched_b = set()
        ordered: list[tuple[int, int]] = []
        for ca in a_kids:
            cb = b_by_label.get(tree_a.labels[ca], -1)
            if cb >= 0:
                matched_b.add(cb)
            ordered.append((ca, cb))
        for cb in b_kids:
            if cb not in matched_b:
                ordered.append((-1, cb))
        # sibling ids must ascend in merged order (children lists sort by id)
        for ca, cb in ordered:
            label = tree_a.labels[ca] if ca >= 0 else tree_b.labels[cb]
            wa = int(tree_a.freq1[ca]) if ca >= 0 else 0
            wb = int(tree_b.freq1[cb]) if cb >= 0 else 0
            child = add(label, out_id, wa, wb)
            stack.append((child, ca, cb))

    return WeightedTreePair(labels, parents, w1, w2)


def subtree_match_score(
    big: WeightedTreePair, small: WeightedTreePair
) -> tuple[float, float, float]:
    """How well ``small`` fits inside ``big``: (coverage, weight agreement, level offset).

    The small tree's root is anchored at the shallowest node of ``big``
    with the same label (ties to the smaller id).  Coverage is the matched
    fraction of the small tree's nodes, weight agreement compares matched
    nodes' weights as sum(min)/sum(max) (1 when both sums are zero), and
    the level offset is the anchor's depth in ``big``.
    """
    _check_sibling_labels(big, "big tree")
    _check_sibling_labels(small, "small tree")
    target = small.labels[small.root]
    anchors = [x for x in range(len(big)) if big.labels[x] == target]
    if not anchors:
        raise NoAnchorError(f"label {target!r} does not occur in the big tree")
    anchor = min(anchors, key=lambda x: (int(big.level[x]), x))

    matched = 0
    min_sum = 0
    max_sum = 0
    stack = [(small.root, anchor)]
    while stack:
        s_node, b_node = stack.pop()
        matched += 1
        ws = int(small.freq1[s_node])
        wb = int(big.freq1[b_node])
        min_sum += min(ws, wb)
        max_sum += max(ws, wb)
        b_by_label = {big.labels[c]: c for c in big.children[b_node]}
        for sc in small.children[s_node]:
            bc = b_by_label.get(small.labels[sc])
            if bc is not None:
                stack.append((sc, bc))

    coverage = matched / len(small)
    agreement = 1.0 if max_sum == 0 else min_sum / max_sum
    return coverage, agreement, float(big.level[anchor])
