import random

import pytest

from rainbowfree.bipartite import (
    RainbowStarPresent,
    classify_k13_free,
    gen_type_b,
    validate_type_b,
    verify_background_spanning_kconn,
)
from rainbowfree.connectivity import is_k_connected
from rainbowfree.constructions import gen_F1
from rainbowfree.core import ColoredBipartite, flood, restrict
from rainbowfree.patterns import parse_pattern
from rainbowfree.rainbow import is_rainbow_free


def test_three_color_host_is_case_a():
    # blocks on colors 2,3 with background 1: no vertex sees three colors
    host = ColoredBipartite.from_function(
        4, 4, 3, lambda u, v: (u // 2 + 2) if u // 2 == v // 2 else 1
    )
    structure = classify_k13_free(host)
    assert structure.case == "A"
    assert structure.colors_used == {1, 2, 3}


def test_f1_is_case_a():
    assert classify_k13_free(gen_F1(12, 6, 4).host).case == "A"


def test_classify_rejects_rainbow_star():
    # 5 colors and every U vertex sees all of them: plenty of rainbow stars
    host = ColoredBipartite.from_function(5, 5, 5, lambda u, v: (u + v) % 5 + 1)
    with pytest.raises(RainbowStarPresent):
        classify_k13_free(host)


def test_three_color_star_is_still_case_a():
    # with at most four colors the classification is settled by color count
    host = ColoredBipartite.from_function(3, 3, 3, lambda u, v: v + 1)
    assert classify_k13_free(host).case == "A"


def test_classify_rejects_tiny_sides():
    host = ColoredBipartite(2, 3, 1, [1] * 6)
    with pytest.raises(ValueError):
        classify_k13_free(host)


def test_gen_type_b_is_rainbow_star_free():
    for seed in range(20):
        gen = gen_type_b(10, 9, 6, seed=seed)
        assert is_rainbow_free(gen.host, parse_pattern("K1_3"))


def test_gen_type_b_pure_blocks_still_star_free():
    gen = gen_type_b(10, 10, 5, seed=0, background_prob=0.0)
    host = gen.host
    assert is_rainbow_free(host, parse_pattern("K1_3"))
    assert classify_k13_free(host).case == "B"


def test_gen_type_b_uses_all_colors():
    for seed in range(10):
        host = gen_type_b(8, 8, 5, seed=seed, background_prob=0.9).host
        assert len(host.used_colors()) == 5


def test_gen_type_b_rejects_bad_sizes():
    with pytest.raises(ValueError):
        gen_type_b(10, 10, 6, u_sizes=[2, 2, 2, 2])  # wrong count
    with pytest.raises(ValueError):
        gen_type_b(10, 10, 6, u_sizes=[6, 1, 1, 1, 1], v_sizes=[2, 2, 2, 2, 1])  # sums ok but then...
    with pytest.raises(ValueError):
        gen_type_b(10, 10, 4)  # m < 5


def test_classify_roundtrip_recovers_planted():
    rng = random.Random(21)
    for trial in range(40):
        m = rng.choice([5, 6, 7, 8])
        s = rng.randint(m - 1, 12)
        t = rng.randint(m - 1, 12)
        gen = gen_type_b(s, t, m, seed=trial)
        structure = classify_k13_free(gen.host)
        assert structure.case == "B"
        assert structure.renumbering[structure.background] == 1
        for c in range(2, m + 1):
            assert structure.u_parts[c] == gen.parts[f"U{c}"]
            assert structure.v_parts[c] == gen.parts[f"V{c}"]


def test_validator_accepts_recovered_structure():
    gen = gen_type_b(9, 9, 5, seed=7)
    host = gen.host
    u_parts = {c: gen.parts[f"U{c}"] for c in range(2, 6)}
    v_parts = {c: gen.parts[f"V{c}"] for c in range(2, 6)}
    assert validate_type_b(host, 1, u_parts, v_parts) is None


def test_validator_rejects_wrong_structures():
    gen = gen_type_b(9, 9, 5, seed=7)
    host = gen.host
    u_parts = {c: gen.parts[f"U{c}"] for c in range(2, 6)}
    v_parts = {c: gen.parts[f"V{c}"] for c in range(2, 6)}
    # swap two V blocks: block law breaks
    swapped = dict(v_parts)
    swapped[2], swapped[3] = swapped[3], swapped[2]
    assert validate_type_b(host, 1, u_parts, swapped) is not None
    # drop a vertex: cover breaks
    broken = dict(u_parts)
    broken[2] = broken[2][1:] if len(broken[2]) > 1 else ()
    assert validate_type_b(host, 1, broken, v_parts) is not None


def test_background_spanning_witness():
    for seed, k in ((0, 1), (1, 2), (2, 3)):
        m = k + 4
        gen = gen_type_b(m + 2, m + 1, m, seed=seed)
        w = verify_background_spanning_kconn(gen.host, k)
        assert w.ok
        g = restrict(gen.host, {w.color})
        assert is_k_connected(g, k)
        assert all(g.degree(v) >= 1 for v in range(g.n))  # spanning


def test_background_spanning_preconditions():
    gen = gen_type_b(8, 8, 5, seed=0)
    with pytest.raises(ValueError):
        verify_background_spanning_kconn(gen.host, 2)  # m = k + 3 < k + 4
    # a 6-colored host with a short side trips the min-side precondition
    # before any structure is attempted
    short = ColoredBipartite.from_function(4, 8, 6, lambda u, v: (u + v) % 6 + 1)
    with pytest.raises(ValueError):
        verify_background_spanning_kconn(short, 1)


def test_background_removal_leaves_connected():
    # direct check of the k-connectivity certificate on small hosts
    from itertools import combinations

    k = 2
    gen = gen_type_b(7, 7, 6, seed=3)
    g = restrict(gen.host, {1})
    full = (1 << g.n) - 1
    for cut in combinations(range(g.n), k - 1):
        rest = full
        for v in cut:
            rest &= ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        assert flood(g.adj_bits, rest, start) == rest
