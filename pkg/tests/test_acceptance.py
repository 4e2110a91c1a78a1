"""Acceptance suite: nine numbered criteria, each printing one
[criterion N] PASS/FAIL line with its elapsed time and enforcing its
time budget.  Run with -s to watch the lines as they appear."""

import itertools
import random
import time
from contextlib import contextmanager

from wilflab.clusters import (compose_embeddings, extended_minimal_cluster,
                              minimal_cluster)
from wilflab.embedding import embedding_set, iter_shift_sets
from wilflab.enumeration import enumerate_classes
from wilflab.equivalence import (adjacent_top_swap, cross_equivalent,
                                 difference_profile,
                                 minimal_clusters_rearranged,
                                 rearrangement_witness_search,
                                 reversal_class_kind, ss_class, ss_equivalent)
from wilflab.genfun import (count_embedding_exactly, count_embedding_superset,
                            count_geq, strong_truncated_equal)
from wilflab.tree import build_tree, partition_leaves
from wilflab.words import format_word, parse_word, reversal

U = parse_word("21365874")

U_CLASS_ROWS = [
    ["21346578", "21346587", "21365784", "21365874",
     "21465783", "21465873", "21657843", "21658743"],
    ["21347856", "21348756", "21378564", "21387564",
     "21478563", "21487563", "21785643", "21875643"],
    ["34785612", "34875612", "37856412", "38756412",
     "47856312", "48756312", "78564312", "87564312"],
    ["34657812", "34658712", "36578412", "36587412",
     "46578312", "46587312", "65784312", "65874312"],
]


@contextmanager
def criterion(number: int, budget: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - start
        print(f"[criterion {number}] FAIL in {elapsed:.2f}s (budget {budget:g}s)")
        raise
    elapsed = time.perf_counter() - start
    status = "PASS" if elapsed < budget else "FAIL"
    print(f"[criterion {number}] {status} in {elapsed:.2f}s (budget {budget:g}s)")
    assert elapsed < budget, \
        f"criterion {number} took {elapsed:.2f}s, over its {budget:g}s budget"


def test_criterion_1_golden_examples():
    with criterion(1, 1.0):
        assert embedding_set((3, 2, 2), parse_word("2343213421")) == (2, 3, 7)
        assert minimal_cluster((2, 3, 1, 4), (1, 2, 4)) == parse_word("2334414")
        assert minimal_cluster(parse_word("2334414"), (1, 3)) == \
            minimal_cluster((2, 3, 1, 4), (1, 2, 3, 4, 6))
        assert compose_embeddings((1, 2, 4), (1, 3)) == (1, 2, 3, 4, 6)
        assert extended_minimal_cluster((2, 3, 1, 4), (1, 6, 7), 11) == \
            parse_word("23141233441")
        triple = minimal_cluster((1, 1, 1), (1, 3))
        assert triple == parse_word("11111")
        assert embedding_set((1, 1, 1), triple) == (1, 2, 3)


def test_criterion_2_profile_and_class():
    with criterion(2, 1.0):
        profile = difference_profile(U)
        assert profile.deltas == (
            (2, 1, 1, 1, 1, 1),
            (1, 1, 1, 1, 1),
            (1, 1, 1, 1),
            (1, 1, 1),
            (2, 1),
            (1,),
        )
        assert ss_class(U) == tuple(parse_word(w) for w in U_CLASS_ROWS[0])
        other = parse_word("21478563")
        assert profile.delta(6) == (2, 1)
        assert difference_profile(other).delta(6) == (1, 2)
        assert not ss_equivalent(U, other)


def test_criterion_3_counterexample_clusters():
    with criterion(3, 1.0):
        u, v = parse_word("2351647"), parse_word("6471532")
        assert cross_equivalent(u, v)
        E = (1, 2, 5)
        assert minimal_cluster(u, E) == parse_word("23556677647")
        assert minimal_cluster(v, E) == parse_word("66776572532")
        assert not minimal_clusters_rearranged(u, v, E)


def test_criterion_4_tree_partition():
    with criterion(4, 1.0):
        tree = build_tree(U)
        assert len(tree.leaves()) == 32
        assert tree.same_shape_levels == 3
        assert tree.split_shape_levels == 2
        partition = partition_leaves(tree)
        rows = [[format_word(w) for w in members]
                for members in partition.classes.values()]
        assert rows == U_CLASS_ROWS


def test_criterion_5_exhaustive_small_n():
    with criterion(5, 60.0):
        for n in range(1, 8):
            ss = enumerate_classes(n, "ss")
            cross = enumerate_classes(n, "cross")
            # (a) power-of-two class sizes
            for members in ss.classes.values():
                size = len(members)
                assert size & (size - 1) == 0
            # (b) ss refines cross, with the tree's (k, l) split per
            # cross class
            split: dict[tuple, list[tuple]] = {}
            for rep, members in ss.classes.items():
                split.setdefault(cross.class_of(rep), []).append(members)
            assert sum(len(v) for v in split.values()) == len(ss.classes)
            for cross_members, ss_blocks in split.items():
                assert set().union(*map(set, ss_blocks)) == set(cross_members)
                t = build_tree(cross_members[0])
                k, l = t.same_shape_levels, t.split_shape_levels
                assert len(ss_blocks) == 2 ** l
                assert all(len(b) == 2 ** k for b in ss_blocks)
            # (c) reversal equivalence exactly for the two special kinds
            for p in itertools.permutations(range(1, n + 1)):
                expected = reversal_class_kind(p) != "neither"
                assert ss_equivalent(p, reversal(p)) == expected
        # (d) tree leaves equal the brute-force cross class on all of S_6
        for members in enumerate_classes(6, "cross").classes.values():
            expected = set(members)
            for u in members:
                assert set(build_tree(u).leaves()) == expected


def test_criterion_6_oracle_equivalence():
    with criterion(6, 120.0):
        pool = []
        for n in range(2, 7):
            for members in enumerate_classes(n, "cross").classes.values():
                pool.extend(itertools.combinations(members, 2))
        assert len(pool) == 3336
        rng = random.Random(20260815)
        sample = rng.sample(pool, 500)
        for u, v in sample:
            bound = max(1, len(u) - 1)
            if difference_profile(u).deltas == difference_profile(v).deltas:
                for E in iter_shift_sets(3, bound):
                    assert minimal_clusters_rearranged(u, v, E), \
                        f"rearrangement failed for {format_word(u)} ~ " \
                        f"{format_word(v)} on {E}"
            else:
                verdict = rearrangement_witness_search(u, v, 2)
                assert verdict.kind == "refuted", \
                    "hard failure: no witness with <= 2 shifts for " \
                    f"{format_word(u)} vs {format_word(v)}"


def test_criterion_7_counting():
    with criterion(7, 10.0):
        u = (2, 3, 1)
        assert count_embedding_superset(u, 4, 9, (1,)) == 10
        expected = ["2313", "2322", "2331", "2412", "2421",
                    "2511", "3312", "3321", "3411", "4311"]
        from wilflab.genfun import compositions
        found = ["".join(str(x) for x in w)
                 for w in compositions(9, 4)
                 if 1 in embedding_set(u, w)]
        assert found == expected
        for length in range(3, 6):
            slots = range(1, length - len(u) + 2)
            for total in range(length, 13):
                acc = 0
                for r in range(1, len(slots) + 1):
                    for S in itertools.combinations(slots, r):
                        acc += count_embedding_exactly(u, length, total, S)
                assert acc == count_geq(u, length, total)


def test_criterion_8_conclusion_pair():
    with criterion(8, 300.0):
        u, v = parse_word("234156"), parse_word("256143")
        assert not ss_equivalent(v, u)
        assert not ss_equivalent(v, reversal(u))
        agreed = strong_truncated_equal(u, v, 7, 24)
        assert agreed
        print("strong grid check (L <= 7, M <= 24): no discrepancy found")


def test_criterion_9_top_swap_family():
    with criterion(9, 30.0):
        rng = random.Random(92653)
        for _ in range(200):
            n = rng.randint(2, 7)
            w = tuple(rng.sample(range(1, n + 1), n))
            swapped = adjacent_top_swap(w)
            assert ss_equivalent(w, swapped)
            for E in iter_shift_sets(2, max(1, n - 1)):
                assert minimal_clusters_rearranged(w, swapped, E), \
                    f"rearrangement failed for {format_word(w)} on {E}"
