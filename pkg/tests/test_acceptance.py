"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line
with its wall time.  Run with ``pytest tests/test_acceptance.py -v -s``.

All expected values are pinned exactly (tolerance 0 after the stated
rounding); sampled criteria demand zero failures at full sample counts.
"""

import random
import time
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import pytest

from rainbowfree.bipartite import (
    classify_k13_free,
    gen_type_b,
    verify_background_spanning_kconn,
)
from rainbowfree.connectivity import (
    best_monochromatic,
    gyarfas_floor,
    is_k_connected,
    mader_extract,
    verify_order_cap,
)
from rainbowfree.constructions import (
    corollary_sequence,
    eg_realizable,
    gen_F1,
    gen_F2,
    gen_F3,
    gen_R1,
    gen_R2,
    gen_counterexample_4t,
    gen_intro_example,
    realize_degree_sequence,
)
from rainbowfree.core import ColoredBipartite, ColoredComplete, SimpleGraph, ceil_div
from rainbowfree.crosscheck import micro_crosscheck
from rainbowfree.gallai import (
    is_gallai,
    sample_gallai,
    verify_two_color_2connected,
    verify_two_color_3connected,
)
from rainbowfree.oracles import realizable_degree_sequences
from rainbowfree.paths import check_mono_path_quota, color_degree_averages
from rainbowfree.patterns import parse_pattern
from rainbowfree.rainbow import is_rainbow_free


class budget:
    """Context manager: times a criterion, prints its PASS/FAIL line, and
    enforces the stated wall-time budget."""

    def __init__(self, name, seconds=None):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        limit = f" (budget {self.seconds:.0f}s)" if self.seconds else ""
        print(f"[{status}] {self.name}: {elapsed:.2f}s{limit}")
        if exc_type is None and self.seconds is not None:
            assert elapsed < self.seconds, f"{self.name} exceeded {self.seconds}s"
        return False


def test_criterion_01_construction_sizes():
    with budget("1 construction sizes", 5):
        assert best_monochromatic(gen_R1(9, 4).host, 1, "exact")[1].lower == 6
        assert best_monochromatic(gen_R2(12, 6).host, 1, "exact")[1].lower == 8
        assert len(gyarfas_floor(gen_F1(12, 6, 4).host)[1]) == 9
        assert best_monochromatic(gen_F2(13, 6, 5).host, 1, "exact")[1].lower == 12
        assert best_monochromatic(gen_F3(12, 12, 6).host, 1, "exact")[1].lower == 12


def test_criterion_02_rainbow_freeness_suite():
    with budget("2 rainbow-freeness suite", 10):
        r1 = gen_R1(9, 4).host
        r1_wide = gen_R1(12, 5).host  # five colors, so 5-edge patterns can appear
        r2 = gen_R2(12, 6).host
        assert is_rainbow_free(r2, parse_pattern("K2uP6"))
        for name in ("K3uP3", "K1_3uP3", "P4plusuP3", "P5uP3"):
            assert is_rainbow_free(r1, parse_pattern(name)), name
        assert not is_rainbow_free(r1, parse_pattern("K2uK3"))
        for name in ("K2uK3", "K2uP5", "K2uP4plus"):
            assert not is_rainbow_free(r1_wide, parse_pattern(name)), name
            assert not is_rainbow_free(r2, parse_pattern(name)), name
        assert is_rainbow_free(gen_F1(12, 6, 4).host, parse_pattern("P4"))
        assert is_rainbow_free(
            gen_F3(12, 12, 6).host, parse_pattern("V:5;E:0-1,0-2,0-3,0-4")
        )
        f2 = gen_F2(13, 6, 5).host
        assert is_rainbow_free(f2, parse_pattern("4K2"))
        assert is_rainbow_free(f2, parse_pattern("K2u2P3"))


def test_criterion_03_counterexample_caps():
    with budget("3 counterexample two-color caps", 30):
        for t, n in ((1, 20), (2, 40)):
            host = gen_counterexample_4t(t, n).host
            assert is_gallai(host)
            k, cap = 4 * t, n - 2 * t
            for mask in combinations(sorted(host.used_colors()), 2):
                res = verify_order_cap(host, mask, k, cap)
                assert res.ok, (t, mask, res.counterexample)


def test_criterion_04_two_color_witnesses_sampled():
    with budget("4 two-color witness sampling", 120):
        failures = []
        for seed in range(1000):
            host = sample_gallai(9, 3, seed)
            w2 = verify_two_color_2connected(host)
            if not (w2.ok and w2.order == 9):
                failures.append(("sample", seed, 2))
            w3 = verify_two_color_3connected(host)
            if not (w3.ok and w3.order >= 8):
                failures.append(("sample", seed, 3))
        constructions = [
            gen_intro_example(10, 3).host,
            gen_intro_example(12, 5).host,
            gen_counterexample_4t(1, 20).host,
            gen_counterexample_4t(2, 40).host,
        ]
        for i, host in enumerate(constructions):
            w2 = verify_two_color_2connected(host)
            if not (w2.ok and w2.order == host.n):
                failures.append(("construction", i, 2))
            w3 = verify_two_color_3connected(host)
            if not (w3.ok and w3.order >= host.n - 1):
                failures.append(("construction", i, 3))
        assert not failures, failures[:5]


def test_criterion_05_degree_sequences():
    with budget("5 degree-sequence module", 60):
        for n in range(1, 8):
            truth = realizable_degree_sequences(n)
            for raw in combinations_with_replacement(range(n - 1, -1, -1), n):
                seq = tuple(sorted(raw, reverse=True))
                assert eg_realizable(seq) == (seq in truth), (n, seq)
                if seq in truth:
                    assert realize_degree_sequence(seq).degree_sequence() == seq
        for t in range(1, 6):
            seq = corollary_sequence(t)
            assert eg_realizable(seq)
            assert realize_degree_sequence(seq).degree_sequence() == seq


def test_criterion_06_structure_roundtrip():
    with budget("6 block-structure round-trip", 60):
        rng = random.Random(606)
        for trial in range(200):
            m = rng.choice([5, 6, 7, 8])
            s = rng.randint(max(8, m - 1), 12)
            t = rng.randint(max(8, m - 1), 12)
            gen = gen_type_b(s, t, m, seed=trial)
            structure = classify_k13_free(gen.host)
            assert structure.case == "B", trial
            for c in range(2, m + 1):
                assert structure.u_parts[c] == gen.parts[f"U{c}"], (trial, c)
                assert structure.v_parts[c] == gen.parts[f"V{c}"], (trial, c)
        for trial in range(200):
            s, t = rng.randint(4, 10), rng.randint(4, 10)
            if trial % 2 == 0:
                host = ColoredBipartite(
                    s, t, 2, [rng.randint(1, 2) for _ in range(s * t)]
                )
            else:
                m = rng.choice([3, 4])
                blocks = m - 1
                ub = [min(u * blocks // s, blocks - 1) for u in range(s)]
                vb = [min(v * blocks // t, blocks - 1) for v in range(t)]
                host = ColoredBipartite(
                    s,
                    t,
                    m,
                    [
                        ub[u] + 2 if ub[u] == vb[v] else 1
                        for u in range(s)
                        for v in range(t)
                    ],
                )
            assert classify_k13_free(host).case == "A", trial


def test_criterion_07_background_spanning():
    with budget("7 background spanning k-connected", 60):
        rng = random.Random(707)
        for trial in range(100):
            k = (trial % 3) + 1
            m = rng.randint(k + 4, k + 6)
            s = rng.randint(m - 1, m + 4)
            t = rng.randint(m - 1, m + 4)
            gen = gen_type_b(s, t, m, seed=trial * 31 + 1)
            w = verify_background_spanning_kconn(gen.host, k)
            assert w.ok, (trial, k, m, s, t)


def test_criterion_08_path_quotas():
    with budget("8 path quotas and degree identity", 300):
        rng = random.Random(808)
        for trial in range(1000):
            n = rng.randint(4, 12)
            m = rng.randint(1, 4)
            host = ColoredComplete(
                n, m, [rng.randint(1, m) for _ in range(n * (n - 1) // 2)]
            )
            assert sum(color_degree_averages(host)) == Fraction(n - 1)
            total = n + 2 * m - 2
            cuts = sorted(rng.randint(0, total) for _ in range(m - 1))
            quotas = [b - a for a, b in zip([0] + cuts, cuts + [total])]
            res = check_mono_path_quota(host, quotas)
            assert res.ok, (trial, n, m, quotas)
            if res.witness.order >= 2:
                assert res.witness.order >= quotas[res.color - 1]


def test_criterion_09_dense_subgraph_extraction():
    with budget("9 dense-subgraph extraction", 300):
        rng = random.Random(909)
        done = 0
        while done < 500:
            n = rng.randint(5, 30)
            p = rng.choice([0.3, 0.5, 0.8])
            edges = [e for e in combinations(range(n), 2) if rng.random() < p]
            g = SimpleGraph(n, edges)
            if g.edge_count == 0:
                continue
            k = ceil_div(g.edge_count, 2 * g.n)
            sub = mader_extract(g)  # raises CertificationError on failure
            assert is_k_connected(sub, k), (n, p)
            done += 1


def test_criterion_10_oracle_crosschecks():
    with budget("10 oracle cross-checks", 600):
        r = micro_crosscheck(5, 2)
        assert r.ok and r.mode == "full" and r.colorings == 2**10, r.mismatches[:3]
        r = micro_crosscheck(4, 3)
        assert r.ok and r.mode == "full" and r.colorings == 3**6, r.mismatches[:3]
        r = micro_crosscheck(6, 3, seed=10)
        assert r.ok and r.mode == "sampled" and r.colorings == 100_000, r.mismatches[:3]


def test_criterion_11_component_floors():
    with budget("11 monochromatic component floors", 60):
        hosts = [
            gen_R1(9, 4).host,
            gen_R2(12, 6).host,
            gen_R1(12, 5).host,
            gen_F1(12, 6, 4).host,
            gen_F2(13, 6, 5).host,
            gen_F3(12, 12, 6).host,
            gen_intro_example(10, 3).host,
            gen_intro_example(12, 5).host,
            gen_counterexample_4t(1, 20).host,
            gen_counterexample_4t(2, 40).host,
        ]
        rng = random.Random(111)
        for _ in range(300):
            n, m = rng.randint(4, 12), rng.randint(2, 4)
            hosts.append(
                ColoredComplete(
                    n, m, [rng.randint(1, m) for _ in range(n * (n - 1) // 2)]
                )
            )
        for seed in range(100):
            hosts.append(sample_gallai(rng.randint(5, 10), 3, seed))
        checked = 0
        for host in hosts:
            if len(host.used_colors()) < 2:
                continue
            gyarfas_floor(host)  # raises CertificationError on a violation
            checked += 1
        assert checked >= 300
