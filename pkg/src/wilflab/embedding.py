"""Generalized factor order and embedding index sets.

``u <= w`` in generalized factor order when some factor of ``w`` of
length |u| dominates ``u`` letter by letter; the embedding set collects
every starting position of such a factor.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .words import Word

EmbeddingSet = tuple[int, ...]


def embeds_at(u: Word, w: Word, j: int) -> bool:
    """True iff the factor of ``w`` starting at position j dominates ``u``.

    Out-of-range ``j`` (including windows running past the end of ``w``)
    yields False rather than an error.

    >>> embeds_at((3, 2, 2), (2, 3, 4, 3, 2, 1, 3, 4, 2, 1), 2)
    True
    >>> embeds_at((3, 2, 2), (2, 3, 4, 3, 2, 1, 3, 4, 2, 1), 1)
    False
    """
    if j < 1 or j + len(u) - 1 > len(w):
        return False
    return all(a <= b for a, b in zip(u, w[j - 1:]))


def embedding_set(u: Word, w: Word) -> EmbeddingSet:
    """All positions of ``w`` where ``u`` embeds.

    >>> embedding_set((3, 2, 2), (2, 3, 4, 3, 2, 1, 3, 4, 2, 1))
    (2, 3, 7)
    >>> embedding_set((1, 1, 1), (1, 1, 1, 1, 1))
    (1, 2, 3)
    """
    if not u:
        raise ValueError("cannot embed the empty pattern")
    n = len(u)
    return tuple(
        j
        for j in range(1, len(w) - n + 2)
        if all(a <= b for a, b in zip(u, w[j - 1:]))
    )


def embedding_count(u: Word, w: Word) -> int:
    """len(embedding_set(u, w)), without building the tuple."""
    if not u:
        raise ValueError("cannot embed the empty pattern")
    n = len(u)
    count = 0
    for j in range(len(w) - n + 1):
        for i in range(n):
            if u[i] > w[j + i]:
                break
        else:
            count += 1
    return count


def leq_factor(u: Word, w: Word) -> bool:
    """Generalized factor order: true iff the embedding set is nonempty."""
    if not u:
        raise ValueError("cannot embed the empty pattern")
    n = len(u)
    for j in range(len(w) - n + 1):
        for i in range(n):
            if u[i] > w[j + i]:
                break
        else:
            return True
    return False


def as_embedding_set(positions) -> EmbeddingSet:
    """Canonicalize and validate: nonempty, positive, no duplicates."""
    E = tuple(sorted(int(j) for j in positions))
    if not E:
        raise ValueError("embedding set must be nonempty")
    if E[0] < 1:
        raise ValueError(f"embedding positions must be >= 1, got {E[0]}")
    for a, b in zip(E, E[1:]):
        if a == b:
            raise ValueError(f"duplicate embedding position {a}")
    return E


def to_shift_vector(E: EmbeddingSet) -> tuple[int, tuple[int, ...]]:
    """(start, gaps): E = {start, start+e1, start+e1+e2, ...}.

    >>> to_shift_vector((1, 2, 4))
    (1, (1, 2))
    >>> to_shift_vector((1,))
    (1, ())
    """
    E = as_embedding_set(E)
    return E[0], tuple(b - a for a, b in zip(E, E[1:]))


def from_shift_vector(start: int, shifts) -> EmbeddingSet:
    """Inverse of to_shift_vector.

    >>> from_shift_vector(1, (5, 1))
    (1, 6, 7)
    """
    if start < 1:
        raise ValueError(f"start position must be >= 1, got {start}")
    positions = [start]
    for e in shifts:
        if e < 1:
            raise ValueError(f"shifts must be >= 1, got {e}")
        positions.append(positions[-1] + e)
    return tuple(positions)


def shifted_positions(j: int, E: EmbeddingSet) -> EmbeddingSet:
    """The set (j-1) + E; defined only for sets starting at 1.

    >>> shifted_positions(3, (1, 2, 4))
    (3, 4, 6)
    """
    E = as_embedding_set(E)
    if j < 1:
        raise ValueError(f"position must be >= 1, got {j}")
    if E[0] != 1:
        raise ValueError("shifted_positions requires an embedding set starting at 1")
    return tuple(x + j - 1 for x in E)


def iter_shift_sets(max_shifts: int, shift_bound: int) -> Iterator[EmbeddingSet]:
    """Embedding sets {1, 1+e1, ...} with at most ``max_shifts`` shifts,
    each shift in [1, shift_bound], shortest first then lexicographic.
    """
    yield (1,)
    for r in range(1, max_shifts + 1):
        for shifts in itertools.product(range(1, shift_bound + 1), repeat=r):
            yield from_shift_vector(1, shifts)


def parse_embedding_set(text: str) -> EmbeddingSet:
    """Parse "1,2,4" (or space-separated) into an embedding set."""
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty embedding set")
    try:
        positions = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"cannot parse embedding set {text!r}") from None
    return as_embedding_set(positions)


def format_embedding_set(E: EmbeddingSet) -> str:
    return ",".join(str(j) for j in E)
