"""File formats: tree documents, CSV pairs, and summary documents.

Tree documents are nested JSON records ``{label, weight1, weight2,
children}`` (single-weight variant: ``{label, weight, children}``) with
one root record.  A CSV pair is an edges file of ``child,parent`` rows
plus a weights file of ``label,w1,w2`` rows.  All files are UTF-8 and all
writers emit byte-deterministic output.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Sequence

from .align import zero_fill_align
from .errors import ParseError
from .metrics import MetricReport
from .scoring import DIF, SIM, SummarySelection
from .selection import GreedyTrace
from .tree import WeightedTreePair, build_tree


# -- tree documents -------------------------------------------------------------


def tree_to_document(pair: WeightedTreePair) -> dict:
    """Nested two-weight record for the whole tree."""
    # Built in post-order so no recursion limits apply to deep chains.
    out: dict[int, dict] = {}
    for node in pair.post_order:
        node = int(node)
        out[node] = {
            "label": pair.labels[node],
            "weight1": int(pair.freq1[node]),
            "weight2": int(pair.freq2[node]),
            "children": [out[c] for c in pair.children[node]],
        }
    return out[pair.root]


def tree_from_document(doc: dict) -> WeightedTreePair:
    """Parse a nested record; accepts both the two- and one-weight shapes."""
    labels: list[str] = []
    parents: list[int] = []
    w1: list[int] = []
    w2: list[int] = []

    def weight_of(rec: dict, key: str, where: str) -> int:
        value = rec[key]
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError(f"record {where}: {key} must be an integer, got {value!r}")
        if value < 0:
            raise ParseError(f"record {where}: {key} is negative ({value})")
        return value

    stack = [(doc, -1)]
    while stack:
        rec, parent = stack.pop()
        if not isinstance(rec, dict) or "label" not in rec:
            raise ParseError(f"record under parent index {parent}: missing 'label'")
        label = str(rec["label"])
        if "weight" in rec:
            a = b = weight_of(rec, "weight", label)
        else:
            if "weight1" not in rec or "weight2" not in rec:
                raise ParseError(f"record {label!r}: expected weight or weight1/weight2")
            a = weight_of(rec, "weight1", label)
            b = weight_of(rec, "weight2", label)
        labels.append(label)
        parents.append(parent)
        w1.append(a)
        w2.append(b)
        me = len(labels) - 1
        kids = rec.get("children", [])
        if not isinstance(kids, list):
            raise ParseError(f"record {label!r}: children must be a list")
        seen = set()
        for kid in kids:
            kid_label = kid.get("label") if isinstance(kid, dict) else None
            if kid_label in seen:
                raise ParseError(f"record {label!r}: duplicate child label {kid_label!r}")
            seen.add(kid_label)
        for kid in reversed(kids):
            stack.append((kid, me))
    return WeightedTreePair(labels, parents, w1, w2)


def save_tree_pair(pair: WeightedTreePair, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(tree_to_document(pair), indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def _load_json(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from e


def _load_csv_pair(edges_path: str | Path, weights_path: str | Path) -> WeightedTreePair:
    weights: dict[str, tuple[int, int]] = {}
    order: list[str] = []
    with open(weights_path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 3:
                raise ParseError(f"{weights_path}:{lineno}: expected label,w1,w2")
            label = row[0].strip()
            try:
                a, b = int(row[1]), int(row[2])
            except ValueError:
                raise ParseError(f"{weights_path}:{lineno}: weights must be integers") from None
            if a < 0 or b < 0:
                raise ParseError(f"{weights_path}:{lineno}: negative weight for {label!r}")
            if label in weights:
                raise ParseError(f"{weights_path}:{lineno}: duplicate label {label!r}")
            weights[label] = (a, b)
            order.append(label)

    parent_of: dict[str, str] = {}
    mentioned: list[str] = []
    with open(edges_path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise ParseError(f"{edges_path}:{lineno}: expected child,parent")
            child, parent = row[0].strip(), row[1].strip()
            if child in parent_of:
                raise ParseError(f"{edges_path}:{lineno}: node {child!r} has two parents")
            parent_of[child] = parent
            mentioned.extend((child, parent))

    known = set(mentioned)
    for label in order:
        if label not in known:
            raise ParseError(f"{weights_path}: label {label!r} does not appear in the edges file")
    for label in known:
        if label not in weights:
            raise ParseError(f"{edges_path}: node {label!r} has no weights row")

    return build_tree([(lab,) + (parent_of.get(lab),) + weights[lab] for lab in order])


def load_tree_pair(
    paths: str | Path | Sequence[str | Path], fmt: str = "auto"
) -> WeightedTreePair:
    """Load a weighted tree pair from one or two files.

    One JSON path: a two-weight document.  Two JSON paths: two
    single-weight documents merged by zero-fill alignment.  Two CSV paths:
    edges file then weights file.
    """
    if isinstance(paths, (str, Path)):
        paths = [paths]
    paths = list(paths)
    if fmt == "auto":
        fmt = "csv" if str(paths[0]).lower().endswith(".csv") else "json"
    if fmt == "csv":
        if len(paths) != 2:
            raise ParseError("csv input needs exactly two paths: edges file, weights file")
        return _load_csv_pair(paths[0], paths[1])
    if len(paths) == 1:
        return tree_from_document(_load_json(paths[0]))
    if len(paths) == 2:
        return zero_fill_align(
            tree_from_document(_load_json(paths[0])),
            tree_from_document(_load_json(paths[1])),
        )
    raise ParseError(f"expected one or two input paths, got {len(paths)}")


# -- summary documents -----------------------------------------------------------


def summary_to_document(
    pair: WeightedTreePair,
    selection: SummarySelection,
    trace: GreedyTrace,
    scores,
    beta: int,
    gamma: float,
    summary_score: float,
    report: MetricReport | None = None,
) -> dict:
    """Self-contained record of one summarization run."""
    gain_of = {p.node: p.gain for p in trace.picks}
    nodes = []
    for x in sorted(selection.nodes):
        nodes.append(
            {
                "label": pair.labels[x],
                "path": pair.path_of(x),
                "side": SIM if x in selection.s1 else DIF,
                "gain": float(gain_of.get(x, 0.0)),
                "contrast": float(scores[x]),
            }
        )
    doc = {
        "k": selection.k,
        "k1": selection.k1,
        "k2": selection.k2,
        "beta": beta,
        "gamma": float(gamma),
        "summary_score": float(summary_score),
        "nodes": nodes,
    }
    if report is not None:
        doc["metrics"] = report.to_dict()
    return doc


def write_summary_document(doc: dict, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )


def selection_from_document(doc: dict, pair: WeightedTreePair) -> SummarySelection:
    """Rebuild the selection recorded in a summary document against a tree."""
    s1 = []
    s2 = []
    for rec in doc.get("nodes", []):
        try:
            node = pair.id_of_path(rec["path"])
        except KeyError as e:
            raise ParseError(f"summary references a node missing from the tree: {e}") from e
        (s1 if rec.get("side") == SIM else s2).append(node)
    return SummarySelection(tuple(s1), tuple(s2), int(doc.get("k", len(s1) + len(s2))))


def load_labels_file(path: str | Path, pair: WeightedTreePair) -> list[int]:
    """Read an externally produced answer: a JSON list of node labels."""
    data = _load_json(path)
    if not isinstance(data, list):
        raise ParseError(f"{path}: expected a JSON list of labels")
    out = []
    for label in data:
        try:
            out.append(pair.id_of(str(label)))
        except KeyError as e:
            raise ParseError(f"{path}: {e.args[0]}") from e
    return sorted(out)
