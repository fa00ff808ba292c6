"""Acceptance gate: every release criterion, one printed line each.

Run with `pytest tests/test_acceptance.py -s` to see the pass/fail lines.
Each criterion is self-contained and cross-checks against independent
oracles computed inline where the criterion calls for one.
"""

import json
import math
import random
import time
from fractions import Fraction

from strongorient.bounds import (
    failure_bound,
    entropy_binomial_bound,
    f_bound_check,
    regime1_ratio,
    regime2_threshold,
)
from strongorient.cli import main as cli_main
from strongorient.exposure import (
    ExposureSequence,
    catalan,
    count_exposure_sequences,
    enumerate_exposure_sequences,
    lemma_checks,
    sequence_to_shape,
    tree_to_sequence,
)
from strongorient.generators import (
    barbell,
    complete,
    cycle,
    erdos_renyi,
    lollipop,
    path,
    random_regular,
)
from strongorient.graph import (
    VertexSubset,
    cheeger_constant_exact,
    format_graph,
    is_connected,
)
from strongorient.orientation import (
    cut_event_probability_exact,
    mc_sink_statistics,
    mc_strong_probability,
    orientation_census,
    strong_probability_exact,
)
from strongorient.rng import derive_seed
from strongorient.sieve import example1_experiment, sieve_sandwich
from strongorient.spectral import (
    check_cheeger_inequality,
    edge_expansion_bound_check,
    spectrum,
)

from conftest import SUITE


def _report(num, desc, body):
    t0 = time.perf_counter()
    try:
        body()
    except BaseException:
        print(f"ACCEPTANCE {num:2d} FAIL  {desc}")
        raise
    dt = time.perf_counter() - t0
    print(f"ACCEPTANCE {num:2d} PASS  {desc} ({dt:.1f}s)")


def _strong_brute(g):
    """Independent exhaustive strong-orientation count (DFS, no kernels)."""
    count = 0
    for bits in range(1 << g.m):
        adj = [[] for _ in range(g.n)]
        for j, (u, v) in enumerate(g.edges):
            if bits >> j & 1:
                adj[v].append(u)
            else:
                adj[u].append(v)

        def reach(start):
            seen = {start}
            stack = [start]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            return len(seen)

        if reach(0) == g.n:
            radj = [[] for _ in range(g.n)]
            for u in range(g.n):
                for v in adj[u]:
                    radj[v].append(u)
            adj, radj = radj, adj
            if reach(0) == g.n:
                count += 1
    return count


def test_criterion_01_census_oracles():
    def body():
        t0 = time.perf_counter()
        c3 = orientation_census(SUITE["k3"])
        assert (c3.total, c3.strong, c3.eulerian) == (8, 2, 2)
        assert orientation_census(SUITE["c4"]).strong == 2
        c4 = orientation_census(SUITE["k4"])
        assert c4.strong == 24
        assert c4.strong == _strong_brute(SUITE["k4"])
        assert c4.eulerian == 0
        assert time.perf_counter() - t0 < 5.0

    _report(1, "orientation census matches exhaustive oracles", body)


def test_criterion_02_wilson_coverage():
    def body():
        t0 = time.perf_counter()
        for name in ("k3", "k4", "c4"):
            g = SUITE[name]
            p_exact = float(strong_probability_exact(g))
            hits = 0
            for seed in range(100):
                est = mc_strong_probability(g, 10**5, seed)
                if est.ci_low <= p_exact <= est.ci_high:
                    hits += 1
            assert hits >= 93, f"{name}: coverage {hits}/100"
        assert time.perf_counter() - t0 < 60.0

    _report(2, "Wilson interval covers exact rate on >= 93/100 seeds", body)


def test_criterion_03_cut_event_law():
    def body():
        for g in SUITE.values():
            if g.m > 14:
                continue
            for mask in range(1, (1 << g.n) - 1):
                e = sum(
                    1
                    for (u, v) in g.edges
                    if (mask >> u & 1) != (mask >> v & 1)
                )
                x = VertexSubset(g.n, mask)
                assert cut_event_probability_exact(g, x) == Fraction(
                    1, 1 << (e - 1)
                )

    _report(3, "cut-event probability is 2^(1-e) on every subset", body)


def test_criterion_04_cheeger_goldens():
    def body():
        assert cheeger_constant_exact(SUITE["k4"]).phi == Fraction(2, 3)
        assert cheeger_constant_exact(SUITE["c4"]).phi == Fraction(1, 2)
        assert cheeger_constant_exact(SUITE["barbell6"]).phi == Fraction(1, 7)

    _report(4, "exact Cheeger constants match known rationals", body)


def _mixed_connected_graphs(count, max_n=16):
    rng = random.Random(20260819)
    out = []
    while len(out) < count:
        kind = rng.randrange(6)
        if kind == 0:
            g = complete(rng.randrange(3, 9))
        elif kind == 1:
            g = cycle(rng.randrange(3, max_n + 1))
        elif kind == 2:
            g = path(rng.randrange(2, max_n + 1))
        elif kind == 3:
            n = rng.randrange(6, max_n + 1, 2)
            g = barbell(n) if rng.random() < 0.5 else lollipop(n)
        elif kind == 4:
            n = rng.randrange(4, max_n + 1)
            d = rng.randrange(2, min(6, n))
            if n * d % 2:
                continue
            g = random_regular(n, d, rng.getrandbits(32))
        else:
            g = erdos_renyi(
                rng.randrange(4, max_n + 1),
                0.3 + 0.5 * rng.random(),
                rng.getrandbits(32),
            )
        if g.n <= max_n and is_connected(g) and g.m > 0:
            out.append(g)
    return out


def test_criterion_05_cheeger_inequality_and_expansion():
    def body():
        for g in _mixed_connected_graphs(200):
            rep = check_cheeger_inequality(g, tol=1e-9)
            assert rep.holds, (g, rep)
        for g in SUITE.values():
            if g.n > 12:
                continue
            lam1 = spectrum(g).lambda1
            vol_total = 2 * g.m
            for mask in range(1, (1 << g.n) - 1):
                vol = sum(g.deg[v] for v in range(g.n) if mask >> v & 1)
                if 2 * vol > vol_total:
                    continue
                rep = edge_expansion_bound_check(
                    g, VertexSubset(g.n, mask), lambda1=lam1
                )
                assert rep.slack >= -1e-9

    _report(5, "two-sided Cheeger inequality and expansion bound hold", body)


def test_criterion_06_spectrum_goldens():
    def body():
        eig_k4 = spectrum(SUITE["k4"]).eigenvalues
        want = [0.0, 4 / 3, 4 / 3, 4 / 3]
        assert all(abs(a - b) < 1e-8 for a, b in zip(eig_k4, want))
        eig_c4 = spectrum(SUITE["c4"]).eigenvalues
        assert all(
            abs(a - b) < 1e-8 for a, b in zip(eig_c4, [0.0, 1.0, 1.0, 2.0])
        )

    _report(6, "normalized Laplacian spectra match goldens to 1e-8", body)


def test_criterion_07_exposure_suite():
    def body():
        t0 = time.perf_counter()
        for k in range(2, 13):
            seqs = enumerate_exposure_sequences(k)
            assert len(seqs) == catalan(k - 1)
            assert count_exposure_sequences(k) == len(seqs)
        assert count_exposure_sequences(12) == 58786
        fig = ExposureSequence(8, (1, 2, 0, 3, 0, 0, 1))
        shape = sequence_to_shape(fig)
        back = tree_to_sequence(shape)
        assert back.pi == fig.pi
        assert fig.leaves == 4 and fig.ones == 2
        for k in range(2, 11):
            for s in enumerate_exposure_sequences(k):
                c = lemma_checks(s)
                assert c["ok1"] and c["ok2"]
        assert time.perf_counter() - t0 < 30.0

    _report(7, "exposure counts, worked roundtrip, and leaf lemma hold", body)


def test_criterion_08_bounds_suite():
    def body():
        assert failure_bound(1024, 1.0) == 41 / 10240
        for n in (32, 64, 256, 1024, 4096):
            for alpha in (0.5, 1.0, 2.0):
                delta = math.ceil((1 + alpha) * math.log2(n))
                if delta >= n:
                    continue
                k_top = max(1, math.floor(regime2_threshold(n, alpha)))
                for k in range(1, k_top + 1):
                    if k + 1 > n:
                        break
                    assert regime1_ratio(n, delta, k) <= Fraction(1, 2)
        for n in range(2, 61):
            for k in range(1, n):
                assert entropy_binomial_bound(n, k) >= math.comb(n, k) * (
                    1 - 1e-12
                )
        for x in [i / 100 for i in range(1, 101)]:
            assert f_bound_check(x).slack >= 0
        for n, alpha in ((64, 0.5), (1024, 1.0), (4096, 2.0)):
            lhs = 4 * n**-alpha + 1 / (alpha * n**alpha * math.log2(n))
            rhs = (1 + 4 * alpha * math.log2(n)) / (
                alpha * n**alpha * math.log2(n)
            )
            assert abs(lhs - rhs) < 1e-12

    _report(8, "closed-form probability bounds verify on the grid", body)


def test_criterion_09_sink_statistics_and_sandwich():
    def body():
        for i in range(3):
            g = random_regular(16, 4, seed=derive_seed(77, i))
            stats = mc_sink_statistics(g, 10**5, seed=i)
            assert stats.exact_expectation == 1
            assert abs(stats.z_score) <= 3.0, stats
        for t in (3, 4):
            for k in (1, 2, 3):
                for seed in range(5):
                    g = random_regular(1 << t, t, seed=seed)
                    rep = sieve_sandwich(g, k)
                    assert rep.lower <= rep.s_k <= rep.upper

    _report(9, "sampled sink counts and sieve sandwich agree", body)


def test_criterion_10_disconnection_experiment():
    def body():
        t0 = time.perf_counter()
        rep = example1_experiment(6, 10_000, seed=0)
        assert 0.55 <= rep.p_has_sink.p_hat <= 0.72, rep.p_has_sink
        sink_trials = sum(b.with_sink for b in rep.blocks)
        disconnected_trials = sum(b.trials - b.strong for b in rep.blocks)
        assert sink_trials <= disconnected_trials
        for b in rep.blocks:
            assert b.with_sink <= b.trials - b.strong
        assert time.perf_counter() - t0 < 120.0

    _report(10, "sink rate near 1-1/e and below disconnection rate", body)


def test_criterion_11_large_regular_all_strong():
    def body():
        t0 = time.perf_counter()
        g = random_regular(1024, 24, seed=0)
        est = mc_strong_probability(g, 1000, seed=1)
        assert est.successes >= 999, est
        assert time.perf_counter() - t0 < 120.0

    _report(11, "dense random regular graph orients strongly every trial", body)


def test_criterion_12_thread_count_determinism(tmp_path, capsys):
    def body():
        for name, g in SUITE.items():
            gpath = tmp_path / f"{name}.graph"
            gpath.write_text(format_graph(g))
            for argv in (
                ["orient-mc", "--graph", str(gpath), "--trials", "2000"],
                ["census", "--graph", str(gpath)],
            ):
                assert cli_main(argv + ["--threads", "1"]) == 0
                out1 = capsys.readouterr().out
                assert cli_main(argv + ["--threads", "8"]) == 0
                out8 = capsys.readouterr().out
                assert out1 == out8 and out1
                json.loads(out1)

    _report(12, "thread count never changes output bytes", body)
