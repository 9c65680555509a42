from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minecc.hypergraph import (
    BadPair,
    BadPairExplosion,
    ColoredHypergraph,
    FormatError,
    coloring_from_deletions,
    compute_stats,
    enumerate_bad_pairs,
    generate_random,
    is_conflict_free,
    parse_hypergraph,
    serialize_hypergraph,
    unsatisfied_weight,
)

from oracles import T1_TEXT, all_pairs_bad, per_edge_objective, small_instance
from strategies import hypergraphs


def test_parse_t1(T1):
    H = parse_hypergraph(T1_TEXT)
    assert H.node_count == 3 and H.color_count == 2
    assert [(e.id, e.color, e.weight, e.nodes) for e in H.edges] == [
        (1, 1, 1, (1, 2)),
        (3, 1, 1, (1, 3)),
        (2, 2, 1, (2, 3)),
    ]
    # incidence lists hold canonical positions
    assert H.incidence == ((0, 1), (0, 2), (1, 2))
    assert H.node_colors == ((1,), (1, 2), (1, 2))
    assert H.mu == 6 and H.r == 2


def test_parse_comments_and_unweighted():
    H = parse_hypergraph("# toy\nminecc 4 2 3 unweighted\n\n3 4 1\n# mid\n1 2 3\n")
    assert [(e.color, e.weight, e.nodes) for e in H.edges] == [(1, 1, (2, 3)), (3, 1, (1, 4))]
    assert H.unweighted


@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("minecc 3 1 2\n1 1 0 2\n", "node out of range", 2),
        ("minecc 3 1 2\n1 1 1 4\n", "node out of range", 2),
        ("minecc 3 1 2\n3 1 1 2\n", "color 3 out of range", 2),
        ("minecc 3 1 2\n1 -2 1 2\n", "negative weight", 2),
        ("minecc 3 1 2\n1 1 2 2\n", "repeated node", 2),
        ("minecc 3 1 2\n1 1\n", "no nodes", 2),
        ("mincc 3 1 2\n", "header", 1),
        ("minecc 3 x 2\n", "integers", 1),
        ("# c\nminecc 3 1 2 weighted\n", "flag", 2),
        ("minecc 3 1 2\n1 1 a\n", "integers", 2),
    ],
)
def test_parse_errors_carry_line(text, fragment, line):
    with pytest.raises(FormatError, match=fragment) as info:
        parse_hypergraph(text)
    assert info.value.line == line


def test_parse_edge_count_mismatch():
    with pytest.raises(FormatError, match="declared 2 edges"):
        parse_hypergraph("minecc 3 2 2\n1 1 1 2\n")
    with pytest.raises(FormatError, match="more than"):
        parse_hypergraph("minecc 3 1 2\n1 1 1 2\n1 1 2 3\n")
    with pytest.raises(FormatError, match="missing header"):
        parse_hypergraph("# nothing\n")


def test_weight_overflow_guard():
    with pytest.raises(FormatError, match="overflow"):
        parse_hypergraph(f"minecc 2 2 1\n1 {2**62} 1\n1 {2**62} 2\n")


def test_empty_edge_list():
    H = parse_hypergraph("minecc 4 0 2\n")
    assert H.m == 0 and H.mu == 0 and H.r == 0
    s = compute_stats(H, count_pairs=True)
    assert (s.m, s.mu, s.sum_colors, s.bad_pairs, s.lp_cp_constraints) == (0, 0, 0, 0, 0)


def test_serialize_canonical_identity():
    text = "minecc 3 3 2\n1 1 1 2\n1 1 1 3\n2 1 2 3\n"
    assert serialize_hypergraph(parse_hypergraph(text)) == text
    text = "minecc 4 2 3 unweighted\n1 2 3\n3 1 4\n"
    assert serialize_hypergraph(parse_hypergraph(text)) == text


def test_serialize_reorders_noncanonical(T1):
    assert serialize_hypergraph(T1) == "minecc 3 3 2\n1 1 1 2\n1 1 1 3\n2 1 2 3\n"


@given(hypergraphs())
def test_round_trip(H):
    text = serialize_hypergraph(H)
    assert serialize_hypergraph(parse_hypergraph(text)) == text


def test_generate_deterministic_and_round_trips():
    a = serialize_hypergraph(generate_random(6, 8, 3, 3, 4, seed=7))
    b = serialize_hypergraph(generate_random(6, 8, 3, 3, 4, seed=7))
    assert a == b
    H = parse_hypergraph(a)
    assert H.m == 8 and serialize_hypergraph(H) == a
    assert all(1 <= len(e.nodes) <= 3 and 1 <= e.weight <= 4 for e in H.edges)


def test_generate_edge_cases():
    assert generate_random(5, 0, 2, 2, seed=1).m == 0
    with pytest.raises(ValueError, match="exceeds node count"):
        generate_random(3, 4, 2, 4)


def test_stats_t1(T1):
    s = compute_stats(T1, count_pairs=True)
    assert (s.n, s.m, s.k, s.r, s.mu, s.sum_colors) == (3, 3, 2, 2, 6, 5)
    assert s.bad_pairs == 2 == s.lp_vc_constraints
    assert s.lp_ecc_constraints == 9
    assert s.lp_cp_constraints == 8
    assert compute_stats(T1).bad_pairs is None


def test_stats_single_edge():
    H = ColoredHypergraph.from_edges(3, 1, [(1, 2, [1, 2, 3])])
    s = compute_stats(H, count_pairs=True)
    assert s.bad_pairs == 0 and s.lp_cp_constraints == s.mu == 3


def test_table1_constraint_columns_are_consistent():
    # (|V|, mu, LP_ECC) rows: the LP_ECC column is mu + |V| for every dataset
    rows = [
        (638, 42_360, 42_998), (80_198, 180_726, 260_924), (6_714, 428_275, 434_989),
        (2_109, 343_211, 345_320), (88_837, 452_208, 541_045), (207_974, 757_946, 965_920),
    ]
    for n, mu, lp_ecc in rows:
        assert mu + n == lp_ecc


def test_brain_shaped_lp_cp():
    # every node seeing both colors adds exactly one color pair, so LP_CP = mu + |V|
    H = ColoredHypergraph.from_edges(3, 2, [(1, 1, [1, 2]), (2, 1, [2, 3]), (1, 1, [1, 3]), (2, 1, [1, 3])])
    s = compute_stats(H)
    assert all(len(c) == 2 for c in H.node_colors)
    assert s.lp_cp_constraints == s.mu + s.n == s.lp_ecc_constraints


def test_bad_pairs_t1(T1):
    assert enumerate_bad_pairs(T1) == [BadPair(1, 2), BadPair(2, 3)]


def test_bad_pairs_same_color_and_dedup():
    H = ColoredHypergraph.from_edges(4, 2, [(1, 1, [1, 2, 3]), (1, 1, [2, 3, 4])])
    assert enumerate_bad_pairs(H) == []
    H = ColoredHypergraph.from_edges(4, 2, [(1, 1, [1, 2, 3]), (2, 1, [2, 3, 4])])
    assert enumerate_bad_pairs(H) == [BadPair(1, 2)]


def test_bad_pair_cap():
    H = ColoredHypergraph.from_edges(1, 3, [(c, 1, [1]) for c in (1, 2, 3, 1, 2, 3)])
    assert len(enumerate_bad_pairs(H)) == 12
    with pytest.raises(BadPairExplosion):
        enumerate_bad_pairs(H, cap=5)


@pytest.mark.parametrize("seed", range(100))
def test_bad_pairs_match_all_pairs_scan(seed):
    H = small_instance(seed)
    got = [(p.e, p.f) for p in enumerate_bad_pairs(H)]
    assert got == all_pairs_bad(H)


@given(hypergraphs(max_edges=30, max_nodes=10))
def test_bad_pairs_match_all_pairs_scan_hypothesis(H):
    assert [(p.e, p.f) for p in enumerate_bad_pairs(H)] == all_pairs_bad(H)


def test_conflict_free(T1):
    assert is_conflict_free(T1, {2})
    assert not is_conflict_free(T1, set())
    assert is_conflict_free(T1, {1, 2, 3})


def test_coloring_from_deletions(T1):
    assert coloring_from_deletions(T1, {2}) == (1, 1, 1)
    assert coloring_from_deletions(T1, {1, 2, 3}) == (1, 1, 1)
    H = ColoredHypergraph.from_edges(3, 3, [(3, 1, [1, 2])])
    assert coloring_from_deletions(H, set()) == (3, 3, 1)
    with pytest.raises(ValueError, match="not conflict-free"):
        coloring_from_deletions(T1, set())


def test_unsatisfied_weight(T1):
    assert unsatisfied_weight(T1, (1, 1, 1)) == 1
    assert unsatisfied_weight(T1, (2, 2, 2)) == 2
    H = ColoredHypergraph.from_edges(3, 1, [(1, 3, [1, 2]), (1, 4, [2, 3])])
    assert unsatisfied_weight(H, (1, 1, 1)) == 0
    with pytest.raises(ValueError):
        unsatisfied_weight(T1, (1, 1))


@given(st.data(), hypergraphs())
def test_unsatisfied_weight_matches_scan(data, H):
    k = H.color_count
    coloring = data.draw(st.lists(st.integers(1, k), min_size=H.node_count, max_size=H.node_count))
    assert unsatisfied_weight(H, coloring) == per_edge_objective(H, coloring)


@given(st.data(), hypergraphs())
def test_deletions_bound_coloring_objective(data, H):
    ids = [e.id for e in H.edges]
    deleted = data.draw(st.sets(st.sampled_from(ids))) if ids else set()
    if is_conflict_free(H, deleted):
        coloring = coloring_from_deletions(H, deleted)
        assert unsatisfied_weight(H, coloring) <= H.weight_of(deleted)
        gone = set(deleted)
        for e in H.edges:
            if e.id not in gone:
                assert all(coloring[u - 1] == e.color for u in e.nodes)


def test_stats_pair_term():
    H = ColoredHypergraph.from_edges(2, 4, [(c, 1, [1]) for c in (1, 2, 3, 4)] + [(1, 1, [2])])
    s = compute_stats(H)
    assert s.lp_cp_constraints == s.mu + comb(4, 2)
