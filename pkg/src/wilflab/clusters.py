"""Stacked copies of a word: pre-clusters and minimal clusters.

A pre-cluster places one copy of ``u`` per embedding position, each
shifted to start at its position; the minimal cluster is the column-wise
maximum of the stack, with columns covered by no copy holding letter 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import embedding
from .words import Permutation, Word, as_permutation, as_word, inverse


@dataclass(frozen=True)
class PreCluster:
    """Base word plus row offsets; rows are never materialized."""

    base: Word
    offsets: tuple[int, ...]

    @property
    def width(self) -> int:
        return self.offsets[-1] + len(self.base)

    @property
    def rows(self) -> int:
        return len(self.offsets)


def _overlap_offsets(u: Word, E) -> tuple[int, ...]:
    # overlapping form: E starts at 1 and consecutive gaps stay within
    # [1, |u|-1] so every copy overlaps the previous one
    E = embedding.as_embedding_set(E)
    if E[0] != 1:
        raise ValueError("cluster embedding sets must start at position 1")
    bound = len(u) - 1
    for a, b in zip(E, E[1:]):
        if b - a > bound:
            raise ValueError(
                f"overlap violation: consecutive positions {a},{b} are "
                f"{b - a} apart, more than |u|-1 = {bound}"
            )
    return tuple(j - 1 for j in E)


def column_max_word(u: Word, offsets, width: int) -> Word:
    """Column-wise maximum of copies of ``u`` placed at the given
    0-based offsets, over ``width`` columns; uncovered columns get 1."""
    columns = [1] * width
    for off in offsets:
        for i, x in enumerate(u):
            if x > columns[off + i]:
                columns[off + i] = x
    return tuple(columns)


def pre_cluster(u: Word, E) -> PreCluster:
    """The stack of copies of ``u`` at positions E (overlapping form).

    >>> pre_cluster((2, 3, 1, 4), (1, 2, 4)).offsets
    (0, 1, 3)
    """
    u = as_word(u)
    if not u:
        raise ValueError("cannot cluster the empty word")
    return PreCluster(base=u, offsets=_overlap_offsets(u, E))


def minimal_cluster(u: Word, E) -> Word:
    """Column maxima of the pre-cluster: the smallest word containing a
    copy of ``u`` at every position of E.

    >>> minimal_cluster((2, 3, 1, 4), (1, 2, 4))
    (2, 3, 3, 4, 4, 1, 4)
    >>> minimal_cluster((1, 1, 1), (1, 3))
    (1, 1, 1, 1, 1)
    """
    pc = pre_cluster(u, E)
    return column_max_word(pc.base, pc.offsets, pc.width)


def extended_minimal_cluster(u: Permutation, E, m: int) -> Word:
    """The unique smallest word of length exactly ``m`` whose embedding
    set for ``u`` equals E; gaps wider than the word are padded with 1.

    Defined for permutations only: only then is the embedding set of the
    result guaranteed to reproduce E.

    >>> extended_minimal_cluster((2, 3, 1, 4), (1, 6, 7), 11)
    (2, 3, 1, 4, 1, 2, 3, 3, 4, 4, 1)
    """
    p = as_permutation(u)
    E = embedding.as_embedding_set(E)
    if E[0] != 1:
        raise ValueError("cluster embedding sets must start at position 1")
    least = E[-1] + len(p) - 1
    if m < least:
        raise ValueError(
            f"no extended minimal cluster of length {m}: "
            f"positions {E} need length at least {least}"
        )
    w = column_max_word(p, [j - 1 for j in E], m)
    assert embedding.embedding_set(p, w) == E
    return w


def compose_embeddings(E1, E2) -> embedding.EmbeddingSet:
    """{i + j - 1 : i in E1, j in E2}; composing cluster-of-cluster
    stacks into a single stack.

    >>> compose_embeddings((1, 2, 4), (1, 3))
    (1, 2, 3, 4, 6)
    """
    E1 = embedding.as_embedding_set(E1)
    E2 = embedding.as_embedding_set(E2)
    if E1[0] != 1 or E2[0] != 1:
        raise ValueError("cluster embedding sets must start at position 1")
    return tuple(sorted({i + j - 1 for i in E1 for j in E2}))


def blocked_count(u: Permutation, E, i: int) -> int:
    """How many copies of letter ``i`` in the pre-cluster are covered by
    a bigger letter of another copy in the minimal cluster.

    Computed by set arithmetic on shifted positions of the inverse
    permutation; equals |E| minus the occurrences of ``i`` in
    minimal_cluster(u, E).

    >>> blocked_count((2, 3, 1, 4), (1, 2, 4), 1)
    2
    >>> blocked_count((2, 3, 1, 4), (1, 2, 4), 4)
    0
    """
    p = as_permutation(u)
    _overlap_offsets(p, E)
    n = len(p)
    if not 1 <= i <= n:
        raise ValueError(f"letter must lie in 1..{n}, got {i}")
    s = inverse(p)
    own = set(embedding.shifted_positions(s[i - 1], E))
    above = set()
    for j in range(i + 1, n + 1):
        above.update(embedding.shifted_positions(s[j - 1], E))
    return len(own & above)


def render_tableau(u: Word, offsets, width: int | None = None) -> str:
    """Rows of the stack as shifted text lines, for human inspection.

    >>> print(render_tableau((2, 3, 1, 4), (0, 1, 3)))
    2314
     2314
       2314
    """
    u = as_word(u)
    cell = max(len(str(x)) for x in u)
    sep = "" if cell == 1 else " "
    step = cell + len(sep)
    lines = []
    for off in offsets:
        cells = sep.join(str(x).rjust(cell) for x in u)
        lines.append(" " * (step * off) + cells)
    return "\n".join(lines)
