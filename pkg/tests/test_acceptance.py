"""Acceptance suite: one test per release criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

from __future__ import annotations

import math
import random
import time

from duotree import (
    DIF,
    SIM,
    PairedDistribution,
    RepEntry,
    SummarySelection,
    brute_force_opt,
    build_tree,
    common_tree,
    contrast_score,
    contrast_scores,
    diversity,
    emit_summary_graph,
    feq,
    greedy_summary,
    load_tree_pair,
    marginal_gain,
    metric_report,
    naive_greedy_summary,
    pass_up,
    save_tree_pair,
    summary_score,
    synth_generate,
    tree_to_document,
)
from conftest import F1_ROWS, random_pair


def report(name: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def test_c1_fixture_pipeline_reproduction():
    t0 = time.perf_counter()
    pair = build_tree(F1_ROWS)
    dists = pass_up(pair, 1)
    root = dists[pair.root]
    vectors_ok = root.sim_vector() == [50, 45] and root.dif_vector() == [100, 0]

    got = contrast_score(root)
    # independent hand evaluation: normalize, take square-root coordinates,
    # Euclidean distance over the 2-coordinate vectors, scale by 1/sqrt(2)
    sim_n = [50 / 95, 45 / 95]
    dif_n = [100 / 100, 0 / 100]
    expected = math.sqrt(
        sum((math.sqrt(d) - math.sqrt(s)) ** 2 for s, d in zip(sim_n, dif_n))
    ) / math.sqrt(2)
    score_ok = abs(got - expected) <= 1e-12 and abs(got - 0.52395) <= 1e-4

    elapsed = time.perf_counter() - t0
    report(
        "C1 fixture pipeline",
        vectors_ok and score_ok and elapsed < 1.0,
        f"sim={root.sim_vector()} dif={root.dif_vector()} score={got:.6f} in {elapsed:.3f}s",
    )


def test_c2_contrast_bounds():
    t0 = time.perf_counter()
    rng = random.Random(202)

    def random_entries(beta, key):
        entries = [
            RepEntry(rng.randint(0, 12), rng.randint(0, 12), i) for i in range(beta)
        ]
        return tuple(sorted(entries, key=key))

    sim_key = lambda e: (-min(e.w1, e.w2), -(e.w1 + e.w2), e.w1)
    dif_key = lambda e: (-abs(e.w1 - e.w2), -(e.w1 + e.w2), e.w1)

    checked = 0
    bounds_ok = True
    for _ in range(4000):  # arbitrary pairs: bounds only
        beta = rng.randint(1, 4)
        d = PairedDistribution(random_entries(beta, sim_key), random_entries(beta, dif_key))
        s = contrast_score(d)
        bounds_ok = bounds_ok and 0.0 <= s <= 1.0
        checked += 1

    identical_ok = True
    for _ in range(3000):  # identical distributions carrying similarity mass
        beta = rng.randint(1, 4)
        entries = list(random_entries(beta, sim_key))
        entries[0] = RepEntry(rng.randint(1, 12), rng.randint(1, 12), 0)
        entries = tuple(sorted(entries, key=sim_key))
        s = contrast_score(PairedDistribution(entries, entries))
        identical_ok = identical_ok and abs(s) <= 1e-12
        checked += 1

    disjoint_ok = True
    for _ in range(3000):  # disjoint supports: one-sided pairs on opposite coordinates
        beta = rng.randint(1, 4)
        sim_entries = tuple(RepEntry(rng.randint(1, 12), 0, i) for i in range(beta))
        dif_entries = tuple(RepEntry(0, rng.randint(1, 12), i) for i in range(beta))
        s = contrast_score(PairedDistribution(sim_entries, dif_entries))
        disjoint_ok = disjoint_ok and abs(s - 1.0) <= 1e-12
        checked += 1

    elapsed = time.perf_counter() - t0
    report(
        "C2 contrast bounds",
        bounds_ok and identical_ok and disjoint_ok and elapsed < 5.0,
        f"{checked} distribution pairs in {elapsed:.2f}s",
    )


def test_c3_approximation_guarantee():
    t0 = time.perf_counter()
    factor = 1.0 - 1.0 / math.e
    violations = 0
    worst = 1.0
    instances = 120
    for i in range(instances):
        rng = random.Random(3000 + i)
        pair = random_pair(rng, rng.randint(2, 12), wmax=rng.choice((3, 8, 20, 100)))
        k = rng.randint(1, 3)
        beta = rng.randint(1, 2)
        _, opt = brute_force_opt(pair, k, beta)
        selection, _ = greedy_summary(pair, k, beta)
        scores = contrast_scores(pair, beta)
        got, _ = summary_score(pair, selection, scores, pair.scaling_coefficient())
        if opt > 0:
            worst = min(worst, got / opt)
            if got < factor * opt - 1e-9:
                violations += 1
    elapsed = time.perf_counter() - t0
    report(
        "C3 approximation guarantee",
        violations == 0 and elapsed < 60.0,
        f"{instances} instances, worst greedy/OPT {worst:.4f}, "
        f"{violations} below {factor:.3f}, in {elapsed:.1f}s",
    )


def test_c4_submodularity_and_monotonicity():
    t0 = time.perf_counter()
    rng = random.Random(404)
    samples = 0
    submodular_ok = True
    monotone_ok = True
    while samples < 1000:
        pair = random_pair(rng, rng.randint(2, 15))
        n = len(pair)
        scores = contrast_scores(pair, 2)
        gamma = pair.scaling_coefficient()
        ids = rng.sample(range(n), min(n, rng.randint(2, 6)))
        sides = [rng.choice((SIM, DIF)) for _ in ids]
        x, x_side = ids[-1], sides[-1]
        chain_ids, chain_sides = ids[:-1], sides[:-1]

        def prefix(upto):
            s1 = tuple(i for i, s in zip(chain_ids[:upto], chain_sides) if s == SIM)
            s2 = tuple(i for i, s in zip(chain_ids[:upto], chain_sides) if s == DIF)
            return SummarySelection(s1, s2, n)

        last = 0.0
        for upto in range(len(chain_ids) + 1):
            value, _ = summary_score(pair, prefix(upto), scores, gamma)
            monotone_ok = monotone_ok and value >= last - 1e-9
            last = value

        cut = rng.randint(0, len(chain_ids) - 1)
        d_small = marginal_gain(pair, x, x_side, prefix(cut), scores, gamma)
        d_big = marginal_gain(pair, x, x_side, prefix(len(chain_ids)), scores, gamma)
        submodular_ok = submodular_ok and d_small >= d_big - 1e-9
        samples += 1
    elapsed = time.perf_counter() - t0
    report(
        "C4 submodularity and monotonicity",
        submodular_ok and monotone_ok and elapsed < 60.0,
        f"{samples} chain samples in {elapsed:.1f}s",
    )


def test_c5_lazy_equals_naive():
    t0 = time.perf_counter()
    rng = random.Random(505)
    agree = True
    for _ in range(50):
        pair = random_pair(rng, rng.randint(2, 200))
        k = rng.randint(1, 10)
        beta = rng.randint(1, 3)
        lazy_sel, lazy_trace = greedy_summary(pair, k, beta)
        naive_sel, _ = naive_greedy_summary(pair, k, beta)
        same_sets = lazy_sel.s1 == naive_sel.s1 and lazy_sel.s2 == naive_sel.s2
        scores = contrast_scores(pair, beta)
        gamma = pair.scaling_coefficient()
        lazy_score, _ = summary_score(pair, lazy_sel, scores, gamma)
        naive_score, _ = summary_score(pair, naive_sel, scores, gamma)
        agree = agree and same_sets and abs(lazy_score - naive_score) <= 1e-9
    elapsed = time.perf_counter() - t0
    report(
        "C5 lazy greedy equivalence",
        agree and elapsed < 60.0,
        f"50 trees up to 200 nodes in {elapsed:.1f}s",
    )


def test_c6_scalability_shape():
    times = {}
    for n in (10_000, 100_000):
        pair = synth_generate(n, 8, "uniform", seed=7)
        t0 = time.perf_counter()
        greedy_summary(pair, 10, 3)
        times[n] = time.perf_counter() - t0
    ratio = times[100_000] / times[10_000]
    total = sum(times.values())
    report(
        "C6 scalability shape",
        ratio <= 20.0 and total < 120.0,
        f"t(1e4)={times[10_000]:.2f}s t(1e5)={times[100_000]:.2f}s ratio={ratio:.1f}",
    )


def test_c7_diversity_trend_vs_feq():
    t0 = time.perf_counter()
    results = {}
    for k in (5, 10):
        wins = 0
        for seed in range(50):
            pair = synth_generate(400, 5, "hotspot", seed=seed, hotspots=3)
            selection, _ = greedy_summary(pair, k, 3)
            ours = diversity(pair, selection)
            base = diversity(pair, feq(common_tree(pair), k))
            if ours >= base:
                wins += 1
        results[k] = wins
    elapsed = time.perf_counter() - t0
    report(
        "C7 diversity trend vs FEQ",
        all(w >= 45 for w in results.values()),
        f"wins k=5: {results[5]}/50, k=10: {results[10]}/50, in {elapsed:.1f}s",
    )


def test_c8_determinism_and_round_trip(tmp_path):
    pair = synth_generate(300, 4, "correlated", seed=9)
    path = tmp_path / "tree.json"
    save_tree_pair(pair, path)
    loaded = load_tree_pair(path)
    round_trip_ok = tree_to_document(loaded) == tree_to_document(pair)
    save_tree_pair(loaded, tmp_path / "tree2.json")
    bytes_ok = (tmp_path / "tree.json").read_bytes() == (tmp_path / "tree2.json").read_bytes()

    selection, trace = greedy_summary(pair, 6, 3)
    scores = contrast_scores(pair, 3)
    gains = {p.node: p.gain for p in trace.picks}
    dot_a = emit_summary_graph(pair, selection, scores, gains)
    dot_b = emit_summary_graph(pair, selection, scores, gains)

    rep_a = metric_report(pair, selection, seed=21, query_count=200)
    rep_b = metric_report(pair, selection, seed=21, query_count=200)

    report(
        "C8 determinism and round trip",
        round_trip_ok and bytes_ok and dot_a == dot_b and rep_a == rep_b,
        "document round trip, DOT bytes, metric report all stable",
    )
