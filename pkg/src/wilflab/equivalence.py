"""Cross equivalence and super-strong Wilf equivalence of permutations.

Two permutations are super-strong Wilf equivalent exactly when their
difference profiles agree: for each letter threshold i, the vector of
consecutive gaps between the sorted positions of letters >= i.  Cross
equivalence is the coarser relation comparing, for each letter, the
multiset of distances to all larger letters.  The minimal-cluster
rearrangement check is the independent oracle for the same relation.
"""

from __future__ import annotations

import itertools
from bisect import insort
from dataclasses import dataclass

from . import clusters, embedding
from .words import Permutation, Word, as_permutation, as_word, inverse

KIND_EQUIVALENT_UP_TO_BOUND = "equivalent-up-to-bound"
KIND_REFUTED = "refuted"

KIND_IDENTITY_CLASS = "identity-class"
KIND_NEAR_IDENTITY_CLASS = "near-identity-class"
KIND_NEITHER = "neither"

# brute filter of S_n is the production path up to here; past it the
# insertion tree enumerates the class instead
BRUTE_CLASS_LIMIT = 10


@dataclass(frozen=True)
class DifferenceProfile:
    """Gap vectors of the sorted positions of letters >= i, one vector
    per threshold i in [2, n-1] (empty for n <= 2)."""

    n: int
    deltas: tuple[tuple[int, ...], ...]

    def delta(self, i: int) -> tuple[int, ...]:
        if not 2 <= i <= self.n - 1:
            raise ValueError(f"threshold must lie in [2, {self.n - 1}], got {i}")
        return self.deltas[i - 2]

    def thresholds(self) -> range:
        return range(2, self.n - 1 + 1)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "deltas": {str(i): list(self.delta(i)) for i in self.thresholds()},
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of a bounded rearrangement search; a witness embedding
    set is present exactly when the pair was refuted."""

    kind: str
    witness: embedding.EmbeddingSet | None = None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "witness": None if self.witness is None else list(self.witness),
        }


def distances_to_larger(u: Permutation, i: int) -> tuple[int, ...]:
    """Sorted multiset of distances from the position of letter ``i`` to
    the positions of all larger letters; size n - i.

    >>> distances_to_larger((2, 3, 6, 1, 7, 4, 5), 4)
    (1, 1, 3)
    """
    p = as_permutation(u)
    n = len(p)
    if not 1 <= i <= n - 1:
        raise ValueError(f"letter must lie in 1..{n - 1}, got {i}")
    s = inverse(p)
    pi = s[i - 1]
    return tuple(sorted(abs(pi - s[j - 1]) for j in range(i + 1, n + 1)))


def _check_same_size(u: Permutation, v: Permutation) -> tuple[Permutation, Permutation]:
    pu, pv = as_permutation(u), as_permutation(v)
    if len(pu) != len(pv):
        raise ValueError(f"size mismatch: {len(pu)} vs {len(pv)}")
    return pu, pv


def cross_equivalent(u: Permutation, v: Permutation) -> bool:
    """True iff distances_to_larger agrees for every letter 1..n-1.

    >>> cross_equivalent((2, 3, 5, 1, 6, 4, 7), (6, 4, 7, 1, 5, 3, 2))
    True
    """
    pu, pv = _check_same_size(u, v)
    n = len(pu)
    return all(
        distances_to_larger(pu, i) == distances_to_larger(pv, i)
        for i in range(1, n)
    )


def difference_profile(u: Permutation) -> DifferenceProfile:
    """The super-strong Wilf fingerprint of a permutation.

    >>> difference_profile((2, 1, 3, 6, 5, 8, 7, 4)).delta(6)
    (2, 1)
    """
    p = as_permutation(u)
    n = len(p)
    s = inverse(p)
    if n <= 2:
        return DifferenceProfile(n=n, deltas=())
    deltas: list[tuple[int, ...]] = []
    positions = [s[n - 1]]
    for i in range(n - 1, 1, -1):
        insort(positions, s[i - 1])
        deltas.append(tuple(b - a for a, b in zip(positions, positions[1:])))
    deltas.reverse()
    return DifferenceProfile(n=n, deltas=tuple(deltas))


def ss_equivalent(u: Permutation, v: Permutation) -> bool:
    """Super-strong Wilf equivalence, decided through the difference
    profiles (exact for permutations).

    >>> ss_equivalent((2, 1, 3), (3, 1, 2))
    True
    >>> ss_equivalent((2, 1, 3, 6, 5, 8, 7, 4), (2, 1, 4, 7, 8, 5, 6, 3))
    False
    """
    pu, pv = _check_same_size(u, v)
    return difference_profile(pu) == difference_profile(pv)


def ss_class(u: Permutation) -> tuple[Permutation, ...]:
    """Every permutation sharing the difference profile of ``u``, sorted
    lexicographically; the size is always a power of 2."""
    p = as_permutation(u)
    if len(p) <= BRUTE_CLASS_LIMIT:
        members = _brute_class(p)
    else:
        members = _tree_class(p)
    return tuple(sorted(members))


def _brute_class(p: Permutation) -> list[Permutation]:
    n = len(p)
    # Δ vectors for i = n-1 down to 2, matching the build order below so
    # mismatching candidates drop out at the first vector
    targets = tuple(reversed(difference_profile(p).deltas))
    members = []
    for cand in itertools.permutations(range(1, n + 1)):
        pos = [0] * (n + 1)
        for k in range(n):
            pos[cand[k]] = k + 1
        positions = [pos[n]]
        ok = True
        for t, i in enumerate(range(n - 1, 1, -1)):
            insort(positions, pos[i])
            delta = tuple(
                positions[k + 1] - positions[k] for k in range(len(positions) - 1)
            )
            if delta != targets[t]:
                ok = False
                break
        if ok:
            members.append(cand)
    return members


def _tree_class(p: Permutation) -> list[Permutation]:
    from . import tree

    partition = tree.partition_leaves(tree.build_tree(p))
    for members in partition.classes.values():
        if p in members:
            return list(members)
    raise AssertionError("leaf partition must contain the root word")


def adjacent_top_swap(u: Permutation) -> Permutation:
    """Exchange the letters n-1 and n in place; the result is always
    super-strong Wilf equivalent to the input.

    >>> adjacent_top_swap((2, 1, 3))
    (3, 1, 2)
    """
    p = as_permutation(u)
    n = len(p)
    if n < 2:
        raise ValueError("needs at least two letters")
    swapped = {n: n - 1, n - 1: n}
    return tuple(swapped.get(x, x) for x in p)


def minimal_clusters_rearranged(u: Word, v: Word, E: embedding.EmbeddingSet) -> bool:
    """True iff the minimal clusters of ``u`` and ``v`` on E have the
    same letter multiplicities; false refutes super-strong Wilf
    equivalence.

    >>> minimal_clusters_rearranged((2, 1, 3), (3, 1, 2), (1, 2))
    True
    """
    wu, wv = as_word(u), as_word(v)
    if len(wu) != len(wv):
        raise ValueError(f"size mismatch: {len(wu)} vs {len(wv)}")
    return sorted(clusters.minimal_cluster(wu, E)) == sorted(
        clusters.minimal_cluster(wv, E)
    )


def rearrangement_witness_search(u: Word, v: Word, max_shifts: int) -> Verdict:
    """Try every embedding set {1, 1+e1, ...} with at most ``max_shifts``
    shifts, each shift in [1, |u|-1], shortest first then lexicographic;
    report the first failing set, or equivalent-up-to-bound.

    The bounded search never certifies equivalence, only the absence of
    small witnesses.
    """
    wu, wv = as_word(u), as_word(v)
    if len(wu) != len(wv):
        raise ValueError(f"size mismatch: {len(wu)} vs {len(wv)}")
    if max_shifts < 1:
        raise ValueError(f"max_shifts must be >= 1, got {max_shifts}")
    for E in embedding.iter_shift_sets(max_shifts, len(wu) - 1):
        if not minimal_clusters_rearranged(wu, wv, E):
            return Verdict(kind=KIND_REFUTED, witness=E)
    return Verdict(kind=KIND_EQUIVALENT_UP_TO_BOUND)


def reversal_class_kind(u: Permutation) -> str:
    """Which reversal-symmetric class ``u`` belongs to.

    "identity-class": every profile vector is all ones (the class of
    12...n).  "near-identity-class": the top vector is (2) and the rest
    are all ones (the class of 12...(n-3)(n-1)(n-2)n).  Every other
    permutation is "neither", and exactly those are inequivalent to
    their reversal.

    >>> reversal_class_kind((3, 2, 1))
    'identity-class'
    >>> reversal_class_kind((2, 1, 3))
    'near-identity-class'
    """
    p = as_permutation(u)
    profile = difference_profile(p)
    flat = [d == (1,) * len(d) for d in profile.deltas]
    if all(flat):
        return KIND_IDENTITY_CLASS
    if profile.n >= 3 and profile.delta(profile.n - 1) == (2,) and all(flat[:-1]):
        return KIND_NEAR_IDENTITY_CLASS
    return KIND_NEITHER
