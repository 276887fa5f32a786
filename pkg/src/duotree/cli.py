"""Command-line interface.

Every subcommand is a thin adapter over the library: load inputs, call
one function, write its result.  Exit codes: 0 success, 1 usage error,
2 data error.  ``--output -`` writes to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .baselines import brute_force_opt, cagg, common_tree, feq
from .distribution import contrast_scores
from .errors import DuotreeError
from .generate import synth_generate
from .io import (
    load_labels_file,
    load_tree_pair,
    save_tree_pair,
    selection_from_document,
    summary_to_document,
    tree_to_document,
    write_summary_document,
    _load_json,
)
from .metrics import metric_report
from .scoring import summary_score
from .selection import greedy_summary, split_optimized_summary
from .align import subtree_match_score, zero_fill_align
from .viz import emit_summary_graph


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1 (argparse's default would be 2, which we
    # reserve for data errors)
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _write(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _write_json(doc, output: str | None) -> None:
    _write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", output)


def _add_common(sub: argparse.ArgumentParser, *, needs_input: bool = True) -> None:
    if needs_input:
        sub.add_argument(
            "--input",
            action="append",
            required=True,
            help="input file; repeat it for two single-weight documents or a csv pair",
        )
        sub.add_argument(
            "--format",
            choices=("auto", "json", "csv"),
            default="auto",
            help="input format (default: by file extension)",
        )
    sub.add_argument("--output", default="-", help="output path, '-' for stdout")


def _add_algo_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--k", type=int, default=None, help="representative budget (default 10)")
    sub.add_argument("--beta", type=int, default=None, help="distribution size (default 50)")
    sub.add_argument("--seed", type=int, default=0, help="seed for the metric query sample")
    sub.add_argument("--queries", type=int, default=500, help="metric query count")
    sub.add_argument(
        "--preset",
        choices=("scale",),
        default=None,
        help="'scale': the large-input benchmark settings (k=10, beta=3)",
    )


def _resolve_defaults(args) -> tuple[int, int]:
    k = args.k
    beta = args.beta
    if args.preset == "scale":
        k = 10 if k is None else k
        beta = 3 if beta is None else beta
    return (10 if k is None else k), (50 if beta is None else beta)


def build_parser() -> _Parser:
    parser = _Parser(prog="duotree", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("summarize", help="greedy representative selection")
    _add_common(p)
    _add_algo_flags(p)

    p = subs.add_parser("split-opt", help="selection with per-side budget split search")
    _add_common(p)
    _add_algo_flags(p)

    p = subs.add_parser("baseline", help="single-tree baselines on the common tree")
    _add_common(p)
    p.add_argument("--algo", choices=("feq", "cagg"), required=True)
    p.add_argument("--k", type=int, default=10)

    p = subs.add_parser("oracle", help="exhaustive optimum (small inputs only)")
    _add_common(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--beta", type=int, default=2)

    p = subs.add_parser("metrics", help="score a summary (ours or an external answer)")
    _add_common(p)
    p.add_argument("--summary", help="summary document produced by summarize/split-opt")
    p.add_argument("--labels-file", help="JSON list of selected labels (external answers)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--queries", type=int, default=500)

    p = subs.add_parser("align", help="merge two single-weight trees by zero filling")
    _add_common(p)
    p.add_argument(
        "--diagnose",
        action="store_true",
        help="report subtree match quality (second input inside the first) instead of merging",
    )

    p = subs.add_parser("gen", help="generate a seeded synthetic tree pair")
    _add_common(p, needs_input=False)
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--branching", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight-model", choices=("uniform", "correlated", "hotspot"), default="uniform")
    p.add_argument("--low", type=int, default=0)
    p.add_argument("--high", type=int, default=1000)
    p.add_argument("--rho", type=float, default=0.5)
    p.add_argument("--hotspots", type=int, default=3)

    p = subs.add_parser("viz", help="render a summary as DOT")
    _add_common(p)
    p.add_argument("--summary", required=True, help="summary document to render")

    return parser


def _summarize(args, optimize_split: bool) -> None:
    k, beta = _resolve_defaults(args)
    pair = load_tree_pair(args.input, args.format)
    if optimize_split:
        selection, _, trace = split_optimized_summary(pair, k, beta)
    else:
        selection, trace = greedy_summary(pair, k, beta)
    scores = contrast_scores(pair, beta)
    gamma = pair.scaling_coefficient()
    score, _ = summary_score(pair, selection, scores, gamma)
    report = None
    if selection.nodes:
        report = metric_report(pair, selection, seed=args.seed, query_count=args.queries)
    doc = summary_to_document(pair, selection, trace, scores, beta, gamma, score, report)
    _write_json(doc, args.output)


def _baseline(args) -> None:
    pair = load_tree_pair(args.input, args.format)
    flat = common_tree(pair)
    nodes = feq(flat, args.k) if args.algo == "feq" else cagg(flat, args.k)
    doc = {
        "algo": args.algo,
        "k": args.k,
        "nodes": [
            {"label": pair.labels[x], "path": pair.path_of(x), "weight": int(flat.freq1[x])}
            for x in nodes
        ],
    }
    _write_json(doc, args.output)


def _oracle(args) -> None:
    pair = load_tree_pair(args.input, args.format)
    selection, score = brute_force_opt(pair, args.k, args.beta)
    doc = {
        "k": args.k,
        "beta": args.beta,
        "optimum": score,
        "s1": [pair.labels[x] for x in selection.s1],
        "s2": [pair.labels[x] for x in selection.s2],
    }
    _write_json(doc, args.output)


def _metrics(args) -> None:
    pair = load_tree_pair(args.input, args.format)
    if (args.summary is None) == (args.labels_file is None):
        raise SystemExit(  # straight usage problem
            "metrics: give exactly one of --summary or --labels-file"
        )
    if args.summary:
        selection = selection_from_document(_load_json(args.summary), pair)
        nodes = selection
    else:
        nodes = load_labels_file(args.labels_file, pair)
    report = metric_report(pair, nodes, seed=args.seed, query_count=args.queries)
    _write(report.to_tsv(), args.output)


def _align(args) -> None:
    if len(args.input) != 2:
        raise SystemExit("align: needs exactly two --input files")
    a = load_tree_pair(args.input[0], args.format)
    b = load_tree_pair(args.input[1], args.format)
    if args.diagnose:
        coverage, agreement, offset = subtree_match_score(a, b)
        _write(
            f"coverage\t{coverage!r}\nweight_agreement\t{agreement!r}\nlevel_offset\t{offset!r}\n",
            args.output,
        )
    else:
        merged = zero_fill_align(a, b)
        _write_json(tree_to_document(merged), args.output)


def _gen(args) -> None:
    pair = synth_generate(
        args.nodes,
        max_branching=args.branching,
        weight_model=args.weight_model,
        seed=args.seed,
        low=args.low,
        high=args.high,
        rho=args.rho,
        hotspots=args.hotspots,
    )
    _write_json(tree_to_document(pair), args.output)


def _viz(args) -> None:
    pair = load_tree_pair(args.input, args.format)
    doc = _load_json(args.summary)
    selection = selection_from_document(doc, pair)
    beta = int(doc.get("beta", 50))
    scores = contrast_scores(pair, beta)
    gains = {}
    for rec in doc.get("nodes", []):
        gains[pair.id_of_path(rec["path"])] = float(rec.get("gain", 0.0))
    _write(emit_summary_graph(pair, selection, scores, gains), args.output)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        if args.command == "summarize":
            _summarize(args, optimize_split=False)
        elif args.command == "split-opt":
            _summarize(args, optimize_split=True)
        elif args.command == "baseline":
            _baseline(args)
        elif args.command == "oracle":
            _oracle(args)
        elif args.command == "metrics":
            _metrics(args)
        elif args.command == "align":
            _align(args)
        elif args.command == "gen":
            _gen(args)
        elif args.command == "viz":
            _viz(args)
    except SystemExit as e:
        # subcommand-level usage complaints
        print(f"duotree {args.command}: {e}", file=sys.stderr)
        return 1
    except DuotreeError as e:
        print(f"duotree {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"duotree {args.command}: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
