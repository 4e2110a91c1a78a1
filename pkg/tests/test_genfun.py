import itertools
from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wilflab.embedding import embedding_count, embedding_set
from wilflab.genfun import (cluster_series, compositions,
                            count_embedding_exactly,
                            count_embedding_superset, count_geq,
                            em_count_distribution, embedding_series,
                            factor_series, minimal_cluster_terms,
                            strong_truncated_equal, wilf_truncated_equal)
from wilflab.words import norm, parse_word

patterns = st.lists(st.integers(min_value=1, max_value=3), min_size=1,
                    max_size=3).map(tuple)


def scan_cell(length, total):
    return compositions(total, length)


def test_compositions_basics():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 3)) == [(1, 1, 1)]
    assert list(compositions(2, 3)) == []
    assert list(compositions(0, 1)) == []


@given(st.integers(min_value=1, max_value=9), st.integers(min_value=1, max_value=5))
def test_compositions_count_and_order(total, parts):
    seq = list(compositions(total, parts))
    expected = comb(total - 1, parts - 1) if total >= parts else 0
    assert len(seq) == expected
    assert seq == sorted(seq)
    assert all(len(c) == parts and sum(c) == total and min(c) >= 1
               for c in seq)


def test_count_geq_frozen():
    assert count_geq((2, 3, 1), 4, 9) == 19
    assert count_geq((2, 3, 1), 3, 6) == 1
    assert count_geq((2, 3, 1), 2, 9) == 0
    assert count_geq((2, 3, 1), 4, 6) == 0


def test_em_count_distribution_frozen():
    assert dict(em_count_distribution((2, 3, 1), 4, 9)) == {1: 18, 2: 1}
    assert sum(em_count_distribution((2, 3, 1), 4, 9).values()) == 19
    assert dict(em_count_distribution((2, 3, 1), 3, 6)) == {1: 1}


def test_zero_shortcut_matches_full_scan():
    # the shortcut may only ever skip provably empty cells
    u = (2, 3, 1)
    for length in range(1, 5):
        for total in range(length, 11):
            brute = sum(
                1 for w in scan_cell(length, total)
                if embedding_count(u, w) > 0)
            assert count_geq(u, length, total) == brute
            brute_dist = Counter(
                embedding_count(u, w) for w in scan_cell(length, total)
                if embedding_count(u, w) > 0)
            assert em_count_distribution(u, length, total) == brute_dist


def test_superset_count_frozen():
    # the ten norm-9 length-4 words carrying the pattern at position 1
    expected = ["2313", "2322", "2331", "2412", "2421",
                "2511", "3312", "3321", "3411", "4311"]
    found = [w for w in scan_cell(4, 9)
             if 1 in embedding_set((2, 3, 1), w)]
    assert ["".join(str(x) for x in w) for w in found] == expected
    assert count_embedding_superset((2, 3, 1), 4, 9, (1,)) == 10


def test_superset_count_is_stars_and_bars():
    u = (2, 3, 1)
    for length in range(3, 6):
        slots = range(1, length - len(u) + 2)
        sets = [(t,) for t in slots] + list(itertools.combinations(slots, 2))
        for total in range(length, 13):
            for S in sets:
                brute = sum(
                    1 for w in scan_cell(length, total)
                    if set(S) <= set(embedding_set(u, w)))
                assert count_embedding_superset(u, length, total, S) == brute


def test_superset_bounds_validation():
    with pytest.raises(ValueError):
        count_embedding_superset((2, 3, 1), 4, 9, (3,))
    with pytest.raises(ValueError):
        count_embedding_exactly((2, 3, 1), 4, 9, (2, 3))


def test_exact_count_frozen():
    assert count_embedding_exactly((2, 3, 1), 4, 9, (1,)) == 9
    assert count_embedding_exactly((2, 3, 1), 4, 9, (1, 2)) == 1


def test_exact_counts_partition_count_geq():
    # summing the exact count over every nonempty position set recovers
    # the number of dominating words
    u = (2, 3, 1)
    for length in range(3, 6):
        slots = range(1, length - len(u) + 2)
        for total in range(length, 12):
            acc = 0
            for r in range(1, len(slots) + 1):
                for S in itertools.combinations(slots, r):
                    acc += count_embedding_exactly(u, length, total, S)
            assert acc == count_geq(u, length, total)


def test_exact_count_matches_brute():
    u = (2, 1)
    for length in range(2, 6):
        for total in range(length, 10):
            for r in range(1, length):
                for S in itertools.combinations(range(1, length), r):
                    brute = sum(
                        1 for w in scan_cell(length, total)
                        if embedding_set(u, w) == S)
                    assert count_embedding_exactly(u, length, total, S) == brute


def test_minimal_cluster_terms_frozen():
    assert minimal_cluster_terms((2, 3, 1), 2) == Counter(
        {(4, 9): 1, (5, 11): 1})
    assert minimal_cluster_terms((2, 3, 1), 3) == Counter(
        {(5, 12): 1, (6, 14): 2, (7, 16): 1})
    assert minimal_cluster_terms((5,), 2) == Counter()
    with pytest.raises(ValueError):
        minimal_cluster_terms((2, 3, 1), 1)


@given(patterns, st.integers(min_value=2, max_value=3))
@settings(max_examples=30)
def test_cluster_term_count(u, rows):
    terms = minimal_cluster_terms(u, rows)
    expected = (len(u) - 1) ** (rows - 1) if len(u) > 1 else 0
    assert sum(terms.values()) == expected
    assert all(len(u) + rows - 1 <= length <= norm_
               for (length, norm_) in terms)


def test_wilf_truncated_equal_basics():
    assert wilf_truncated_equal((1, 2), (2, 1), 4, 6)
    assert not wilf_truncated_equal((1, 1), (1, 2), 2, 3)
    with pytest.raises(ValueError):
        wilf_truncated_equal((1, 2), (2, 1), 1, 6)
    with pytest.raises(ValueError):
        wilf_truncated_equal((1, 2), (2, 1), 4, 2)


def test_strong_truncated_equal_basics():
    assert strong_truncated_equal((1, 2), (2, 1), 4, 6)
    assert not strong_truncated_equal((1, 1), (1, 2), 2, 3)


def test_ss_equivalent_pairs_agree_truncated():
    # pairs equal under the strongest relation must agree under the
    # truncated weaker ones at any bounds covering them
    for u, v in [((2, 1, 3), (3, 1, 2)), ((1, 2), (2, 1))]:
        assert strong_truncated_equal(u, v, len(u) + 2, norm(u) + 4)
        assert wilf_truncated_equal(u, v, len(u) + 2, norm(u) + 4)


def test_factor_series_dump():
    s = factor_series((2, 3, 1), 4, 8)
    assert s.dump() == "3 6 1\n3 7 3\n3 8 6\n4 7 2\n4 8 8"
    assert s.as_dict()["rows"] == [
        [3, 6, 1], [3, 7, 3], [3, 8, 6], [4, 7, 2], [4, 8, 8]]
    assert s.as_dict()["kind"] == "F"
    assert s.as_dict()["pattern"] == "231"


def test_embedding_series_dump():
    s = embedding_series((2, 3, 1), 4, 8)
    lines = s.dump().splitlines()
    assert lines[0] == "3 6 1 1"
    assert all(len(line.split()) == 4 for line in lines)
    rows = [tuple(int(t) for t in line.split()) for line in lines]
    assert rows == sorted(rows)
    # the k-distributions must re-aggregate to the factor series
    f = {(L, M): c for L, M, c in factor_series((2, 3, 1), 4, 8).rows}
    agg: Counter = Counter()
    for L, M, _, c in rows:
        agg[(L, M)] += c
    assert dict(agg) == f


def test_cluster_series_dump():
    s = cluster_series((2, 3, 1), 5, 99)
    assert s.dump() == "2 4 9\n2 5 11\n3 5 12"


def test_series_respect_multiplicity():
    # two different shift vectors may build clusters with equal length
    # and norm; the dump then repeats the line
    s = cluster_series((2, 1, 2), 7, 99)
    rows = Counter(tuple(int(t) for t in line.split())
                   for line in s.dump().splitlines())
    assert rows[(3, 6, 11)] == 2
    for (length, norm_), mult in minimal_cluster_terms((2, 1, 2), 3).items():
        assert rows[(3, length, norm_)] == mult


def test_conclusion_pair_truncated_agreement():
    u, v = parse_word("234156"), parse_word("256143")
    assert wilf_truncated_equal(u, v, 6, 22)


def test_long_pair_strong_agreement_completes():
    # heaviest single comparison in the suite (about ten seconds): two
    # eight-letter permutations with the same per-letter distance
    # multisets but different difference profiles still show no
    # counting discrepancy on the whole grid up to their own weight
    u, v = parse_word("21365874"), parse_word("21478563")
    assert strong_truncated_equal(u, v, 8, 36)
