"""Insertion tree enumerating the cross class of a permutation.

Letters 1..n are placed into an initially blank word, smallest first.
At each step the letter must sit at the right distance multiset from
the still-blank positions (which will hold the larger letters), and the
only viable spots are at distance max(multiset) from the first or last
blank.  Every level of the tree branches uniformly into one or two
children, the leaves are exactly the cross class of the seed, and
grouping leaves by the blank/letter silhouettes along their root paths
recovers the partition into super-strong Wilf classes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import prod

from . import enumeration
from .equivalence import distances_to_larger
from .words import Permutation, as_permutation, reversal

BLANK = 0


def render_partial(word: tuple[int, ...], wide: bool | None = None) -> str:
    """Text form of a partially filled word, '*' for blanks; contiguous
    unless a letter needs two digits (or ``wide`` forces spacing).

    >>> render_partial((2, 1, 0, 0, 5, 0))
    '21**5*'
    """
    if wide is None:
        wide = max(word) > 9
    cells = ["*" if x == BLANK else str(x) for x in word]
    return " ".join(cells) if wide else "".join(cells)


def configuration(word: tuple[int, ...]) -> str:
    """Silhouette of the span between the first and last blank: 'o' for
    a placed letter, '*' for a blank.

    >>> configuration((2, 1, 0, 4, 0, 3))
    '*o*'
    """
    blanks = [i for i, x in enumerate(word) if x == BLANK]
    if not blanks:
        raise ValueError("word has no blanks")
    return "".join(
        "*" if x == BLANK else "o" for x in word[blanks[0]:blanks[-1] + 1]
    )


@dataclass
class CrossTree:
    """Uniform-branching insertion tree; node j of level d+1 has parent
    j // child_counts[d], so no explicit edge lists are stored."""

    n: int
    seed: Permutation
    levels: tuple[tuple[tuple[int, ...], ...], ...]
    child_counts: tuple[int, ...]
    labels: dict[int, int]

    def leaves(self) -> tuple[Permutation, ...]:
        return self.levels[-1]

    @property
    def same_shape_levels(self) -> int:
        """Number of branching levels whose two children share a
        configuration (written k)."""
        return sum(1 for b in self.labels.values() if b == 0)

    @property
    def split_shape_levels(self) -> int:
        """Number of branching levels whose two children differ (written
        l); the leaf partition has 2**l classes of 2**k leaves."""
        return sum(1 for b in self.labels.values() if b == 1)


def _place(node: tuple[int, ...], pos: int, letter: int) -> tuple[int, ...]:
    return node[:pos - 1] + (letter,) + node[pos:]


def build_tree(u: Permutation) -> CrossTree:
    """Grow the full insertion tree of the cross class of ``u``.

    Candidate positions for letter i are first-blank + k and last-blank
    - k with k = max distance from i to larger letters in the seed; a
    candidate is kept when it is blank and sits at exactly the seed's
    distance multiset from the remaining blanks.  Each level must end up
    with the same child count (1 or 2) under every parent.
    """
    p = as_permutation(u)
    n = len(p)
    targets = {i: distances_to_larger(p, i) for i in range(1, n)}
    levels: list[tuple[tuple[int, ...], ...]] = [((BLANK,) * n,)]
    child_counts: list[int] = []
    for letter in range(1, n + 1):
        new_level: list[tuple[int, ...]] = []
        counts = set()
        for node in levels[-1]:
            blanks = [i + 1 for i, x in enumerate(node) if x == BLANK]
            if letter == n:
                assert len(blanks) == 1, "last letter needs exactly one blank"
                valid = blanks
            else:
                k = max(targets[letter])
                valid = []
                for pos in sorted({blanks[0] + k, blanks[-1] - k}):
                    if pos not in blanks:
                        continue
                    rest = tuple(sorted(
                        abs(pos - b) for b in blanks if b != pos))
                    if rest == targets[letter]:
                        valid.append(pos)
                assert valid, f"letter {letter} has no valid position"
                assert len(valid) <= 2
            counts.add(len(valid))
            new_level.extend(_place(node, pos, letter) for pos in valid)
        assert len(counts) == 1, f"level {letter - 1} branches non-uniformly"
        child_counts.append(counts.pop())
        levels.append(tuple(new_level))
    tree = CrossTree(
        n=n,
        seed=p,
        levels=tuple(levels),
        child_counts=tuple(child_counts),
        labels={},
    )
    tree.labels = _label_levels(tree)
    return tree


def _label_levels(tree: CrossTree) -> dict[int, int]:
    """0 per branching level when sibling configurations coincide, 1
    when they differ; the bit must be the same under every parent."""
    labels: dict[int, int] = {}
    for depth, cc in enumerate(tree.child_counts):
        if cc != 2:
            continue
        bits = set()
        kids = tree.levels[depth + 1]
        for j in range(len(tree.levels[depth])):
            same = configuration(kids[2 * j]) == configuration(kids[2 * j + 1])
            bits.add(0 if same else 1)
        assert len(bits) == 1, f"level {depth} labels disagree across parents"
        labels[depth] = bits.pop()
    return labels


def _path_silhouettes(tree: CrossTree, leaf_index: int) -> tuple[str, ...]:
    """Configurations of the leaf's ancestors, root downward (leaves
    themselves have no blanks and contribute nothing)."""
    out = []
    for depth in range(tree.n):
        anc = leaf_index // prod(tree.child_counts[depth:])
        out.append(configuration(tree.levels[depth][anc]))
    return tuple(out)


def partition_leaves(tree: CrossTree) -> "enumeration.ClassPartition":
    """Group the leaves by the silhouettes along their root paths; the
    groups are the super-strong Wilf classes inside the cross class.

    Members keep leaf order.  Classes appear in left-to-right order of
    first appearance, except that a class mirroring (reversing) an
    earlier one is held back and appended after the rest, the held-back
    classes in their partners' order — so each mirror pair reads
    primary-then-reversal."""
    groups: dict[tuple[str, ...], list[Permutation]] = {}
    for j, leaf in enumerate(tree.leaves()):
        groups.setdefault(_path_silhouettes(tree, j), []).append(leaf)
    expected_classes = 2 ** tree.split_shape_levels
    expected_size = 2 ** tree.same_shape_levels
    assert len(groups) == expected_classes, \
        f"expected {expected_classes} classes, found {len(groups)}"
    assert all(len(g) == expected_size for g in groups.values()), \
        f"every class should hold {expected_size} leaves"
    member_key = {leaf: key for key, members in groups.items()
                  for leaf in members}
    primary: list[tuple[str, ...]] = []
    mirrored: list[tuple[int, tuple[str, ...]]] = []
    for key, members in groups.items():
        partner = member_key[reversal(members[0])]
        if partner != key and partner in primary:
            mirrored.append((primary.index(partner), key))
        else:
            primary.append(key)
    ordered = primary + [key for _, key in sorted(mirrored)]
    classes = {groups[key][0]: tuple(groups[key]) for key in ordered}
    return enumeration.ClassPartition(relation="ss", classes=classes)


def cross_class(u: Permutation) -> tuple[Permutation, ...]:
    """All permutations cross equivalent to ``u``, sorted (the leaf set
    of the insertion tree)."""
    return tuple(sorted(build_tree(u).leaves()))


def export_tree(tree: CrossTree, format: str = "dot") -> str:
    """Serialize the tree for inspection; "dot" draws every node with
    branching levels tinted by label, "json" keeps the levels, edges,
    labels and leaf classes."""
    if format == "dot":
        return _to_dot(tree)
    if format == "json":
        return _to_json(tree)
    raise ValueError(f"unknown tree format: {format!r}")


_LABEL_FILL = {0: "palegreen", 1: "orange"}


def _to_dot(tree: CrossTree) -> str:
    wide = tree.n > 9
    lines = [
        "digraph cross_tree {",
        "  rankdir=TB;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for depth, nodes in enumerate(tree.levels):
        if depth in tree.labels:
            comment = f"branches in two, label {tree.labels[depth]}"
        elif depth < tree.n:
            comment = "single child"
        else:
            comment = "leaves"
        lines.append(f"  // level {depth}: {comment}")
        for j, node in enumerate(nodes):
            text = render_partial(node, wide=wide)
            style = ""
            if depth in tree.labels:
                style = f', style=filled, fillcolor={_LABEL_FILL[tree.labels[depth]]}'
            lines.append(f'  n{depth}_{j} [label="{text}"{style}];')
    for depth, cc in enumerate(tree.child_counts):
        for j in range(len(tree.levels[depth + 1])):
            lines.append(f"  n{depth}_{j // cc} -> n{depth + 1}_{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_json(tree: CrossTree) -> str:
    wide = tree.n > 9
    partition = partition_leaves(tree)
    payload = {
        "n": tree.n,
        "levels": [
            [render_partial(node, wide=wide) for node in nodes]
            for nodes in tree.levels
        ],
        "edges": [
            [j // cc for j in range(len(tree.levels[depth + 1]))]
            for depth, cc in enumerate(tree.child_counts)
        ],
        "labels": {str(depth): bit for depth, bit in sorted(tree.labels.items())},
        "classes": [
            [render_partial(w, wide=wide) for w in members]
            for members in partition.classes.values()
        ],
    }
    return json.dumps(payload, indent=2) + "\n"
