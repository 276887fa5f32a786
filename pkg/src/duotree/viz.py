"""Compact DOT rendering of a summary.

Only representatives are drawn.  Each one connects to its nearest
selected ancestor: a solid edge when they are parent and child in the
original tree, a dashed edge when unselected nodes in between were
skipped (their labels ride along in the edge tooltip).  Similarity
representatives fill red, difference representatives blue, darker shades
marking larger gains within each side.  Output bytes are deterministic.
"""

from __future__ import annotations

from .errors import EmptySelectionError
from .scoring import SummarySelection
from .tree import WeightedTreePair

# Light-to-dark fills per side; index = gain quartile.
_RED_SHADES = ("#fee5d9", "#fcae91", "#fb6a4a", "#cb181d")
_BLUE_SHADES = ("#eff3ff", "#bdd7e7", "#6baed6", "#2171b5")


def _quartile_buckets(gains: dict[int, float]) -> dict[int, int]:
    """Bucket 0..3 per node by gain quartile within this side."""
    if not gains:
        return {}
    values = sorted(gains.values())
    n = len(values)
    q1 = values[(n - 1) // 4]
    q2 = values[(n - 1) // 2]
    q3 = values[(3 * (n - 1)) // 4]
    out = {}
    for node, g in gains.items():
        if g >= q3:
            out[node] = 3
        elif g >= q2:
            out[node] = 2
        elif g >= q1:
            out[node] = 1
        else:
            out[node] = 0
    return out


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_summary_graph(
    pair: WeightedTreePair,
    selection: SummarySelection,
    scores,
    gains: dict[int, float],
) -> str:
    """Render the selection as DOT text.

    ``gains`` maps selected node ids to the gain to color by (typically
    the at-selection gain from the greedy trace).
    """
    chosen = selection.nodes
    if not chosen:
        raise EmptySelectionError("cannot render an empty summary")

    sim_buckets = _quartile_buckets({x: gains.get(x, 0.0) for x in selection.s1})
    dif_buckets = _quartile_buckets({x: gains.get(x, 0.0) for x in selection.s2})

    lines = ["digraph summary {", "  rankdir=TB;", '  node [shape=box, style=filled];']
    for x in sorted(chosen):
        if x in sim_buckets:
            bucket = sim_buckets[x]
            fill = _RED_SHADES[bucket]
            side = "SIM"
        else:
            bucket = dif_buckets[x]
            fill = _BLUE_SHADES[bucket]
            side = "DIF"
        font = "white" if bucket >= 2 else "black"
        lines.append(
            f"  n{x} [label={_quote(pair.labels[x])}, fillcolor={_quote(fill)},"
            f" fontcolor={_quote(font)},"
            f" tooltip={_quote(f'side={side} gain={gains.get(x, 0.0):.6g} contrast={scores[x]:.6g}')}];"
        )

    for y in sorted(chosen):
        skipped: list[str] = []
        anchor = -1
        for x in pair.ancestor_chain(y):
            if x == y:
                continue
            if x in chosen:
                anchor = x
                break
            skipped.append(pair.labels[x])
        if anchor < 0:
            continue
        if skipped:
            via = ", ".join(reversed(skipped))
            lines.append(
                f"  n{anchor} -> n{y} [style=dashed, tooltip={_quote('via ' + via)}];"
            )
        else:
            lines.append(f"  n{anchor} -> n{y};")

    lines.append("}")
    return "\n".join(lines) + "\n"
