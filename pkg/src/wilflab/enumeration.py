"""Exhaustive classification of all n! permutations into equivalence
classes, for the two relations with computable fingerprints.

The fingerprint of a permutation is either its difference profile
(relation "ss") or its per-letter distance multisets (relation
"cross"); two permutations are equivalent iff their fingerprints match,
so one pass over S_n suffices.  Work can be split across processes by
first letter; the merged result is identical to the serial one.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from multiprocessing import Pool

from .equivalence import difference_profile, distances_to_larger
from .words import Permutation, as_permutation, format_word

RELATIONS = ("ss", "cross")

# past this size the full scan of n! permutations stops being a
# reasonable default; callers must opt in explicitly
GUARD_N = 10


@dataclass
class ClassPartition:
    """Equivalence classes keyed by a canonical representative.

    The census scan below visits S_n lexicographically, so each class is
    keyed by its lexicographically least member, members are sorted, and
    classes appear in representative order.  The insertion-tree path
    instead keys by leftmost leaf and keeps leaf order throughout."""

    relation: str
    classes: dict[Permutation, tuple[Permutation, ...]]

    def class_of(self, u: Permutation) -> tuple[Permutation, ...]:
        p = as_permutation(u)
        for members in self.classes.values():
            if p in members:
                return members
        raise KeyError(f"{format_word(p)} is not in this partition")


def ss_fingerprint(u: Permutation) -> tuple[tuple[int, ...], ...]:
    """Hashable key equal between permutations iff they are super-strong
    Wilf equivalent."""
    return difference_profile(as_permutation(u)).deltas


def cross_fingerprint(u: Permutation) -> tuple[tuple[int, ...], ...]:
    """Hashable key equal between permutations iff they are cross
    equivalent."""
    p = as_permutation(u)
    return tuple(distances_to_larger(p, i) for i in range(1, len(p)))


_FINGERPRINTS = {"ss": ss_fingerprint, "cross": cross_fingerprint}


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        raw = os.environ.get("WILFLAB_THREADS", "")
        if raw == "":
            return 1
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(
                f"WILFLAB_THREADS must be an integer, got {raw!r}") from None
    if workers == 0:
        return os.cpu_count() or 1
    if workers < 0:
        raise ValueError(f"worker count must be >= 0, got {workers}")
    return workers


def _chunk_worker(task: tuple[int, str, int]) -> dict:
    n, relation, first = task
    fingerprint = _FINGERPRINTS[relation]
    found: dict[tuple, list[Permutation]] = {}
    rest = [x for x in range(1, n + 1) if x != first]
    for tail in itertools.permutations(rest):
        p = (first,) + tail
        found.setdefault(fingerprint(p), []).append(p)
    return found


def enumerate_classes(n: int, relation: str, force: bool = False,
                      workers: int | None = None) -> ClassPartition:
    """Partition S_n under the given relation; refuses n > 10 unless
    forced, and honors WILFLAB_THREADS when ``workers`` is None."""
    if relation not in RELATIONS:
        raise ValueError(f"relation must be one of {RELATIONS}, got {relation!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > GUARD_N and not force:
        raise ValueError(
            f"n={n} asks for a scan of {n}! permutations; "
            "pass force=True (--force on the command line) to proceed")
    workers = _resolve_workers(workers)
    fingerprint = _FINGERPRINTS[relation]
    found: dict[tuple, list[Permutation]] = {}
    if workers == 1 or n == 1:
        for p in itertools.permutations(range(1, n + 1)):
            found.setdefault(fingerprint(p), []).append(p)
    else:
        tasks = [(n, relation, first) for first in range(1, n + 1)]
        with Pool(processes=min(workers, n)) as pool:
            for chunk in pool.map(_chunk_worker, tasks):
                for key, members in chunk.items():
                    found.setdefault(key, []).extend(members)
    classes = {members[0]: tuple(members) for members in found.values()}
    return ClassPartition(relation=relation, classes=classes)


def class_statistics(partition: ClassPartition) -> dict:
    """Counts describing a partition: how many classes, how many words
    in total, the extreme class sizes, and sizes by multiplicity."""
    sizes = sorted(len(m) for m in partition.classes.values())
    histogram: dict[int, int] = {}
    for s in sizes:
        histogram[s] = histogram.get(s, 0) + 1
    return {
        "class_count": len(sizes),
        "total": sum(sizes),
        "min_size": sizes[0] if sizes else 0,
        "max_size": sizes[-1] if sizes else 0,
        "histogram": histogram,
    }


def partition_as_dict(partition: ClassPartition) -> dict:
    """JSON-ready form of a partition plus its statistics."""
    stats = class_statistics(partition)
    first = next(iter(partition.classes), ())
    return {
        "n": len(first),
        "relation": partition.relation,
        "classes": [
            {"rep": format_word(rep), "members": [format_word(m) for m in members]}
            for rep, members in partition.classes.items()
        ],
        "histogram": {str(size): count for size, count in sorted(stats["histogram"].items())},
    }
