"""Words over the positive integers and permutation primitives.

A word is a tuple of positive integer letters.  Positions are 1-indexed
everywhere: the first letter of ``w`` is ``w[0]`` in Python but position 1
in every argument and result of this package.
"""

from __future__ import annotations

from collections import Counter

Word = tuple[int, ...]
Permutation = tuple[int, ...]


def as_word(letters) -> Word:
    """Coerce an iterable of letters to a word, checking positivity.

    >>> as_word([2, 1, 3])
    (2, 1, 3)
    """
    w = tuple(int(x) for x in letters)
    if not w:
        raise ValueError("word must be nonempty")
    for x in w:
        if x < 1:
            raise ValueError(f"letters must be positive integers, got {x}")
    return w


def is_permutation(w: Word) -> bool:
    """True iff ``w`` contains each of 1..len(w) exactly once.

    >>> is_permutation((2, 3, 1, 4))
    True
    >>> is_permutation((1, 1, 2))
    False
    """
    return sorted(w) == list(range(1, len(w) + 1))


def as_permutation(letters) -> Permutation:
    p = as_word(letters)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def weight(w: Word) -> tuple[int, int]:
    """The pair (length, norm); the norm is the letter sum.

    >>> weight((2, 1, 3, 2, 2, 1, 3))
    (7, 14)
    >>> weight(())
    (0, 0)
    """
    return len(w), sum(w)


def norm(w: Word) -> int:
    return sum(w)


def reversal(w: Word) -> Word:
    """The word read right to left.

    >>> reversal((2, 1, 3, 2, 2, 1, 3))
    (3, 1, 2, 2, 3, 1, 2)
    """
    return w[::-1]


def letter_stats(w: Word) -> tuple[tuple[int, ...], dict[int, int]]:
    """The alphabet (sorted) and the multiplicity of each letter.

    >>> letter_stats((2, 1, 3, 2, 2, 1, 3))
    ((1, 2, 3), {1: 2, 2: 3, 3: 2})
    """
    counts = Counter(w)
    alphabet = tuple(sorted(counts))
    return alphabet, {a: counts[a] for a in alphabet}


def distance_multiset(w: Word, i: int, j: int) -> tuple[int, ...]:
    """Sorted multiset of |k - l| over occurrences w_k = i and w_l = j.

    One entry per pair of occurrences, so the size is the product of the
    two letter multiplicities.

    >>> distance_multiset((2, 1, 3, 2, 2, 1, 3), 2, 3)
    (1, 2, 2, 2, 3, 6)
    """
    if i == j:
        raise ValueError("distance multiset requires two distinct letters")
    ki = [k for k, x in enumerate(w, 1) if x == i]
    kj = [k for k, x in enumerate(w, 1) if x == j]
    return tuple(sorted(abs(a - b) for a in ki for b in kj))


def inverse(p: Permutation) -> Permutation:
    """The inverse permutation: position i of the result holds the
    position of letter i in ``p``.

    >>> inverse((2, 1, 3, 6, 5, 8, 7, 4))
    (2, 1, 3, 8, 5, 4, 7, 6)
    """
    p = as_permutation(p)
    pos = [0] * len(p)
    for k, x in enumerate(p, 1):
        pos[x - 1] = k
    return tuple(pos)


def shift_up(w: Word) -> Word:
    """Every letter incremented by one.

    >>> shift_up((2, 3, 1))
    (3, 4, 2)
    """
    return tuple(x + 1 for x in w)


def parse_word(text: str) -> Word:
    """Parse the textual word format.

    Accepted forms: comma- or space-separated positive integers
    ("2,13,2"), or a run of contiguous digits read one letter per digit
    when every digit is 1..9 ("2314").  A lone multi-digit letter needs a
    separator to disambiguate ("13," is the one-letter word 13).

    >>> parse_word("2,13,2")
    (2, 13, 2)
    >>> parse_word("2314")
    (2, 3, 1, 4)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    if "," in text or any(c.isspace() for c in text):
        parts = text.replace(",", " ").split()
        try:
            return as_word(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"cannot parse word {text!r}: {exc}") from None
    if not text.isdigit():
        raise ValueError(f"cannot parse word {text!r}: expected digits or separated integers")
    if "0" in text:
        raise ValueError(
            f"cannot parse word {text!r}: 0 is not a letter; "
            "write letters above 9 comma-separated"
        )
    return tuple(int(c) for c in text)


def format_word(w: Word) -> str:
    """Render a word in the textual format; inverse of parse_word.

    Contiguous digits when every letter fits one digit, otherwise
    comma-separated (with a trailing comma for a lone multi-digit letter,
    which would otherwise re-parse digit by digit).

    >>> format_word((2, 3, 1, 4))
    '2314'
    >>> format_word((2, 13, 2))
    '2,13,2'
    >>> format_word((13,))
    '13,'
    """
    if all(x <= 9 for x in w):
        return "".join(str(x) for x in w)
    if len(w) == 1:
        return f"{w[0]},"
    return ",".join(str(x) for x in w)
