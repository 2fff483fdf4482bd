import random
from itertools import combinations

import pytest

from rainbowfree.core import SimpleGraph
from rainbowfree.oracles import oracle_is_subgraph
from rainbowfree.patterns import (
    A_SET,
    B_SET,
    G_SET,
    H2_SET,
    H_SET,
    catalog_members,
    in_set,
    is_isomorphic,
    is_subgraph,
    parse_pattern,
)


def names(set_id):
    return sorted(p.canonical_name for p in catalog_members(set_id))


def test_parse_basic_paths():
    p3 = parse_pattern("P3")
    assert p3.order == 3 and p3.size == 2


def test_parse_disjoint_union_with_triangle():
    p = parse_pattern("2K2uK3")
    assert p.order == 7 and p.size == 5
    assert p.component_count() == 3


def test_parse_star_union():
    p = parse_pattern("3K2uK1_3")
    assert p.order == 10
    assert p.size == 6
    assert p.max_degree() == 3
    assert p.component_count() == 4


def test_parse_p4plus_degree_sequence():
    p = parse_pattern("P4plus")
    assert p.graph.degree_sequence() == (3, 2, 1, 1, 1)


def test_parse_count_inside_plus_name():
    # 'u' inside "P4plus" must not be taken as a separator
    p = parse_pattern("K2uP4plus")
    assert p.order == 7 and p.component_count() == 2


def test_parse_explicit():
    p = parse_pattern("V:5;E:0-1,0-2,0-3,0-4")
    assert p.graph.degree_sequence() == (4, 1, 1, 1, 1)


def test_parse_rejects_garbage():
    for bad in ("", "Q7", "K2u", "0K2", "uK2", "V:3;E:0-3"):
        with pytest.raises(ValueError):
            parse_pattern(bad)


def test_pattern_rejects_isolated_vertices():
    with pytest.raises(ValueError):
        parse_pattern("V:3;E:0-1")


def test_canonical_name_sorts_terms():
    assert parse_pattern("K3u2K2").canonical_name == "2K2uK3"
    assert parse_pattern("P4uK2uP4").canonical_name == "K2u2P4"


def test_is_subgraph_examples():
    assert is_subgraph(parse_pattern("P3"), parse_pattern("P4plus"))
    assert not is_subgraph(parse_pattern("K3"), parse_pattern("P6"))
    assert is_subgraph(parse_pattern("K2uP3"), parse_pattern("K2u2P3"))


def test_is_subgraph_vs_injection_oracle():
    rng = random.Random(4)
    pool = ["K2", "P3", "K3", "P4", "K1_3", "2K2", "K2uP3", "P5", "P4plus", "2P3"]
    for _ in range(120):
        a = parse_pattern(rng.choice(pool)).graph
        b = parse_pattern(rng.choice(pool)).graph
        if b.n > 7:
            continue
        assert is_subgraph(a, b) == oracle_is_subgraph(a, b)
    for _ in range(60):
        n = rng.randint(2, 6)
        h = SimpleGraph(
            n, [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        )
        g = parse_pattern(rng.choice(["K2", "P3", "K3", "P4", "2K2"])).graph
        assert is_subgraph(g, h) == oracle_is_subgraph(g, h)


def test_is_subgraph_reflexive_and_monotone():
    for name in ("K3", "P4plus", "K2u2P3"):
        p = parse_pattern(name)
        assert is_subgraph(p, p)
    g, h = parse_pattern("P3"), parse_pattern("P5")
    assert is_subgraph(g, h)
    assert g.order <= h.order and g.size <= h.size


def test_is_subgraph_transitive():
    rng = random.Random(44)
    pool = ["K2", "P3", "K3", "P4", "K1_3", "2K2", "K2uP3", "P5", "P4plus", "P6", "2P3"]
    hits = 0
    for _ in range(300):
        a, b, c = (parse_pattern(rng.choice(pool)) for _ in range(3))
        if is_subgraph(a, b) and is_subgraph(b, c):
            assert is_subgraph(a, c), (a.canonical_name, b.canonical_name, c.canonical_name)
            hits += 1
    assert hits > 20


def test_g_set_exact():
    assert names(G_SET) == sorted(
        ["K3", "P3", "P4", "P5", "P6", "K1_3", "P4plus"]
    )


def test_h2_set_exact():
    expected = [
        "P3uP4",
        "2P3",
        "K2uP4",
        "K2uP3",
        "2K2",
        "K2uP5",
        "K2uK3",
        "K2uP4plus",
        "K2uK1_3",
    ]
    assert names(H2_SET) == sorted(expected)


def test_b_set_exact():
    expected = [
        "P3",
        "K1_3",
        "2K2",
        "K2uP3",
        "K2uK1_3",
        "2P3",
        "3K2",
        "2K2uP3",
        "2K2uK1_3",
    ]
    assert names(B_SET) == sorted(expected)


def test_h_set_membership_examples():
    assert in_set(parse_pattern("P3uP4"), H_SET)
    assert in_set(parse_pattern("K2u2P3"), H_SET)
    assert not in_set(parse_pattern("K3uP3"), H2_SET)
    assert not in_set(parse_pattern("2P4"), H2_SET)
    assert not in_set(parse_pattern("2P4"), H_SET)
    assert not in_set(parse_pattern("K3uP3"), H_SET)


def test_h2_subset_of_h():
    h = {p.canonical_name for p in catalog_members(H_SET)}
    h2 = {p.canonical_name for p in catalog_members(H2_SET)}
    assert h2 < h
    assert all(p.component_count() == 2 for p in catalog_members(H2_SET))


def test_a_set_is_union():
    a = {p.canonical_name for p in catalog_members(A_SET)}
    g = {p.canonical_name for p in catalog_members(G_SET)}
    h = {p.canonical_name for p in catalog_members(H_SET)}
    assert a == g | h


def test_h_members_small_degree_and_few_components():
    for p in catalog_members(H_SET):
        assert p.max_degree() <= 3
        assert 2 <= p.component_count() <= 4


def test_downward_closure_into_a():
    # every order>=3 subpattern of an H member lands in A
    from rainbowfree.patterns import _all_subpatterns, Pattern

    for p in catalog_members(H_SET):
        for sub in _all_subpatterns(p.graph):
            if sub.n >= 3:
                assert in_set(Pattern(sub), A_SET), (p.canonical_name, sub)


def test_no_isomorphic_duplicates():
    for set_id in (G_SET, H_SET, H2_SET, A_SET, B_SET):
        members = catalog_members(set_id)
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                assert not is_isomorphic(members[i].graph, members[j].graph)


def test_is_isomorphic_basic():
    a = SimpleGraph(3, [(0, 1), (1, 2)])
    b = SimpleGraph(3, [(0, 2), (2, 1)])
    assert is_isomorphic(a, b)
    c = SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert not is_isomorphic(a, c)
