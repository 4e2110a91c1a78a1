"""Counting words by length and norm under generalized factor order.

Everything here is truncated-series arithmetic over the grid
(length L, norm M): how many words of each cell dominate a pattern,
how embedding counts distribute, and which (length, norm) terms the
minimal clusters of a pattern contribute.  Equality of two patterns'
grids up to a bound is the computable surrogate for Wilf / strong Wilf
equivalence.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb

from . import clusters, embedding
from .words import Word, as_word, format_word, norm


def compositions(total: int, parts: int):
    """Yield all tuples of ``parts`` positive integers summing to
    ``total``, lexicographically; there are C(total-1, parts-1).

    >>> list(compositions(4, 2))
    [(1, 3), (2, 2), (3, 1)]
    """
    if parts < 1 or total < parts:
        return
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[k + 1] - bounds[k] for k in range(parts))


def _scan_cell(u: Word, length: int, total: int):
    """All words of the cell (``length``, ``total``) paired with their
    embedding counts; the single source of truth for this module."""
    for w in compositions(total, length):
        yield w, embedding.embedding_count(u, w)


def _cell_is_trivially_empty(u: Word, length: int, total: int) -> bool:
    # a dominating factor needs |u| positions and at least norm(u) mass
    # there, plus 1 per surrounding position
    return length < len(u) or total < norm(u) + length - len(u)


def count_geq(u: Word, length: int, total: int) -> int:
    """Number of words with ``length`` letters and norm ``total`` that
    lie above ``u`` in generalized factor order.

    >>> count_geq((2, 3, 1), 4, 9)
    19
    """
    p = as_word(u)
    if _cell_is_trivially_empty(p, length, total):
        return 0
    return sum(1 for _, c in _scan_cell(p, length, total) if c > 0)


def em_count_distribution(u: Word, length: int, total: int) -> Counter:
    """How many words of the cell have each embedding count k >= 1.

    >>> dict(em_count_distribution((2, 3, 1), 4, 9))
    {1: 18, 2: 1}
    """
    p = as_word(u)
    dist: Counter = Counter()
    if _cell_is_trivially_empty(p, length, total):
        return dist
    for _, c in _scan_cell(p, length, total):
        if c > 0:
            dist[c] += 1
    return dist


def _covering_word(u: Word, positions: tuple[int, ...], length: int) -> tuple[int, ...]:
    """Smallest word of the given length whose factors at ``positions``
    all dominate ``u`` letterwise (max of shifted copies, floor 1)."""
    offsets = tuple(t - 1 for t in positions)
    return clusters.column_max_word(u, offsets, length)


def count_embedding_superset(u: Word, length: int, total: int,
                             positions: embedding.EmbeddingSet) -> int:
    """Number of words of the cell whose embedding set contains
    ``positions`` (a stars-and-bars count over the covering word).

    >>> count_embedding_superset((2, 3, 1), 4, 9, (1,))
    10
    """
    p = as_word(u)
    S = embedding.as_embedding_set(positions)
    if S[-1] > length - len(p) + 1:
        raise ValueError("embedding positions exceed the word length")
    base = norm(_covering_word(p, S, length))
    slack = total - base
    if slack < 0:
        return 0
    return comb(slack + length - 1, length - 1)


def count_embedding_exactly(u: Word, length: int, total: int,
                            positions: embedding.EmbeddingSet) -> int:
    """Number of words of the cell whose embedding set is exactly
    ``positions`` (inclusion-exclusion over supersets).

    >>> count_embedding_exactly((2, 3, 1), 4, 9, (1,))
    9
    """
    p = as_word(u)
    S = embedding.as_embedding_set(positions)
    last = length - len(p) + 1
    if S[-1] > last:
        raise ValueError("embedding positions exceed the word length")
    others = [t for t in range(1, last + 1) if t not in S]
    result = 0
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            T = tuple(sorted(S + extra))
            result += (-1) ** r * count_embedding_superset(p, length, total, T)
    return result


def minimal_cluster_terms(u: Word, rows: int) -> Counter:
    """Multiset of (length, norm) over the minimal clusters of ``u``
    built from every embedding set with ``rows`` stacked copies
    (rows - 1 shifts, each in [1, |u|-1]).

    >>> sorted(minimal_cluster_terms((1, 2), 2).items())
    [((3, 5), 1)]
    """
    p = as_word(u)
    if rows < 2:
        raise ValueError(f"rows must be >= 2, got {rows}")
    terms: Counter = Counter()
    if len(p) == 1:
        return terms
    for gaps in itertools.product(range(1, len(p)), repeat=rows - 1):
        E = embedding.from_shift_vector(1, gaps)
        m = clusters.minimal_cluster(p, E)
        terms[(len(m), norm(m))] += 1
    return terms


def wilf_truncated_equal(u: Word, v: Word, max_len: int, max_norm: int) -> bool:
    """Whether count_geq agrees for ``u`` and ``v`` on every cell of the
    grid [1, max_len] x [1, max_norm]; bounds must cover both patterns.

    >>> wilf_truncated_equal((1, 2), (2, 1), 4, 6)
    True
    """
    pu, pv = as_word(u), as_word(v)
    _check_bounds(pu, pv, max_len, max_norm)
    for length in range(1, max_len + 1):
        for total in range(length, max_norm + 1):
            if count_geq(pu, length, total) != count_geq(pv, length, total):
                return False
    return True


def strong_truncated_equal(u: Word, v: Word, max_len: int, max_norm: int) -> bool:
    """Whether the full embedding-count distributions agree on every
    cell of the grid; implies the plain count comparison.

    >>> strong_truncated_equal((1, 2), (2, 1), 4, 6)
    True
    """
    pu, pv = as_word(u), as_word(v)
    _check_bounds(pu, pv, max_len, max_norm)
    for length in range(1, max_len + 1):
        for total in range(length, max_norm + 1):
            if _cell_is_trivially_empty(pu, length, total) and \
                    _cell_is_trivially_empty(pv, length, total):
                continue
            delta: Counter = Counter()
            for w in compositions(total, length):
                cu = embedding.embedding_count(pu, w)
                cv = embedding.embedding_count(pv, w)
                if cu != cv:
                    delta[cu] += 1
                    delta[cv] -= 1
            if any(delta.values()):
                return False
    return True


def _check_bounds(u: Word, v: Word, max_len: int, max_norm: int) -> None:
    need_len = max(len(u), len(v))
    need_norm = max(norm(u), norm(v))
    if max_len < need_len:
        raise ValueError(
            f"max_len={max_len} is below the pattern length {need_len}")
    if max_norm < need_norm:
        raise ValueError(
            f"max_norm={max_norm} is below the pattern norm {need_norm}")


@dataclass(frozen=True)
class TruncatedSeries:
    """A finite table of series coefficients with a fixed line format
    for dumps; rows are tuples of ints ending in the coefficient."""

    kind: str
    pattern: Word
    max_len: int
    max_norm: int
    rows: tuple[tuple[int, ...], ...] = field(default=())

    def dump(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "pattern": format_word(self.pattern),
            "max_len": self.max_len,
            "max_norm": self.max_norm,
            "rows": [list(row) for row in self.rows],
        }


def factor_series(u: Word, max_len: int, max_norm: int) -> TruncatedSeries:
    """Rows "L M count" for every nonzero count_geq cell in the grid."""
    p = as_word(u)
    rows = []
    for length in range(1, max_len + 1):
        for total in range(length, max_norm + 1):
            c = count_geq(p, length, total)
            if c:
                rows.append((length, total, c))
    return TruncatedSeries("F", p, max_len, max_norm, tuple(rows))


def embedding_series(u: Word, max_len: int, max_norm: int) -> TruncatedSeries:
    """Rows "L M k count" for every nonzero entry of the embedding-count
    distributions over the grid."""
    p = as_word(u)
    rows = []
    for length in range(1, max_len + 1):
        for total in range(length, max_norm + 1):
            dist = em_count_distribution(p, length, total)
            for k in sorted(dist):
                rows.append((length, total, k, dist[k]))
    return TruncatedSeries("A", p, max_len, max_norm, tuple(rows))


def cluster_series(u: Word, max_len: int, max_norm: int) -> TruncatedSeries:
    """Rows "rows length norm", one per minimal cluster (repeated to
    multiplicity), for every row count whose clusters fit the bounds."""
    p = as_word(u)
    rows = []
    r = 2
    while len(p) + r - 1 <= max_len:
        for (length, total), count in sorted(minimal_cluster_terms(p, r).items()):
            if length <= max_len and total <= max_norm:
                rows.extend([(r, length, total)] * count)
        r += 1
    return TruncatedSeries("M", p, max_len, max_norm, tuple(rows))
