"""Command-line front end: one subcommand per library operation.

Results go to stdout, diagnostics to stderr.  Exit status is 0 on
success, 1 on usage errors (bad flags, malformed words), and 2 on
domain errors (invalid embedding sets, size mismatches, guard
refusals).  Every subcommand takes --format json for machine-readable
output; identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import clusters, embedding, enumeration, equivalence, genfun, tree
from .words import (as_permutation, format_word, is_permutation, letter_stats,
                    norm, parse_word, reversal)


class _Parser(argparse.ArgumentParser):
    """argparse reserves status 2 for its own errors; usage problems
    here must exit 1 instead, leaving 2 for domain errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _word_arg(text: str):
    try:
        return parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int_list_arg(text: str):
    """Comma/space-separated integers, syntax only; semantic checks
    (sortedness, positivity, overlap) stay with the handlers so they
    exit 2, not 1."""
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"not a comma-separated integer list: {text!r}")


def _emit(args, payload: dict, text: str) -> int:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return 0


def _cmd_info(args) -> int:
    w = args.word
    alphabet, _ = letter_stats(w)
    perm = is_permutation(w)
    lines = [
        f"word: {format_word(w)}",
        f"length: {len(w)}",
        f"norm: {norm(w)}",
        f"alphabet: {','.join(str(a) for a in alphabet)}",
        f"permutation: {'true' if perm else 'false'}",
    ]
    payload = {
        "word": format_word(w),
        "length": len(w),
        "norm": norm(w),
        "alphabet": list(alphabet),
        "permutation": perm,
    }
    if perm:
        kind = equivalence.reversal_class_kind(w)
        lines.append(f"reversal: {format_word(reversal(w))}")
        lines.append(f"reversal-class: {kind}")
        payload["reversal"] = format_word(reversal(w))
        payload["reversal_class"] = kind
    return _emit(args, payload, "\n".join(lines))


def _cmd_embed(args) -> int:
    positions = embedding.embedding_set(args.pattern, args.word)
    text = embedding.format_embedding_set(positions) if positions else "none"
    payload = {
        "pattern": format_word(args.pattern),
        "word": format_word(args.word),
        "positions": list(positions),
        "count": len(positions),
    }
    return _emit(args, payload, text)


def _cmd_cluster(args) -> int:
    E = embedding.as_embedding_set(args.set)
    if args.extended:
        if args.length is None:
            raise ValueError("--extended needs --length")
        word = clusters.extended_minimal_cluster(args.pattern, E, args.length)
    elif args.length is not None:
        raise ValueError("--length only applies with --extended")
    else:
        word = clusters.minimal_cluster(args.pattern, E)
    lines = []
    rows: list[str] = []
    if args.tableau:
        rows = clusters.render_tableau(
            args.pattern, tuple(p - 1 for p in E)).splitlines()
        width = max(len(r) for r in rows)
        lines.extend(rows)
        lines.append("-" * width)
    lines.append(format_word(word))
    payload = {
        "pattern": format_word(args.pattern),
        "set": list(E),
        "extended": bool(args.extended),
        "cluster": format_word(word),
        "length": len(word),
        "norm": norm(word),
    }
    if args.tableau:
        payload["tableau"] = rows
    return _emit(args, payload, "\n".join(lines))


def _cmd_compose(args) -> int:
    first = embedding.as_embedding_set(args.first)
    second = embedding.as_embedding_set(args.second)
    composed = clusters.compose_embeddings(first, second)
    payload = {
        "first": list(first),
        "second": list(second),
        "composed": list(composed),
    }
    return _emit(args, payload, embedding.format_embedding_set(composed))


def _cmd_blocked(args) -> int:
    E = embedding.as_embedding_set(args.set)
    count = clusters.blocked_count(args.word, E, args.letter)
    payload = {
        "pattern": format_word(args.word),
        "set": list(E),
        "letter": args.letter,
        "blocked": count,
    }
    return _emit(args, payload, str(count))


def _cmd_plus(args) -> int:
    distances = equivalence.distances_to_larger(args.word, args.letter)
    payload = {
        "word": format_word(args.word),
        "letter": args.letter,
        "distances": list(distances),
    }
    return _emit(args, payload, ",".join(str(d) for d in distances))


def _cmd_profile(args) -> int:
    profile = equivalence.difference_profile(args.word)
    lines = [
        f"{i}: {','.join(str(d) for d in profile.delta(i))}"
        for i in reversed(profile.thresholds())
    ]
    return _emit(args, profile.as_dict(), "\n".join(lines))


def _cmd_sstest(args) -> int:
    answer = equivalence.ss_equivalent(args.left, args.right)
    payload = {
        "left": format_word(args.left),
        "right": format_word(args.right),
        "equivalent": answer,
    }
    return _emit(args, payload, "true" if answer else "false")


def _class_output(args, members) -> int:
    rendered = [format_word(m) for m in members]
    return _emit(args, rendered, "\n".join(rendered))


def _cmd_ssclass(args) -> int:
    return _class_output(args, equivalence.ss_class(args.word))


def _cmd_crossclass(args) -> int:
    return _class_output(args, tree.cross_class(args.word))


def _cmd_witness(args) -> int:
    verdict = equivalence.rearrangement_witness_search(
        args.left, args.right, args.max_shifts)
    if verdict.witness is None:
        text = verdict.kind
    else:
        text = f"{verdict.kind} {embedding.format_embedding_set(verdict.witness)}"
    return _emit(args, verdict.as_dict(), text)


def _cmd_tree(args) -> int:
    t = tree.build_tree(as_permutation(args.word))
    sys.stdout.write(tree.export_tree(t, args.format))
    return 0


def _cmd_enumerate(args) -> int:
    partition = enumeration.enumerate_classes(
        args.n, args.relation, force=args.force)
    if args.stats:
        stats = enumeration.class_statistics(partition)
        lines = [
            f"classes: {stats['class_count']}",
            f"total: {stats['total']}",
            f"min_size: {stats['min_size']}",
            f"max_size: {stats['max_size']}",
        ]
        lines += [
            f"size {size}: {count}"
            for size, count in sorted(stats["histogram"].items())
        ]
        payload = dict(stats)
        payload["histogram"] = {
            str(size): count for size, count in sorted(stats["histogram"].items())
        }
        return _emit(args, payload, "\n".join(lines))
    text = "\n".join(
        " ".join(format_word(m) for m in members)
        for members in partition.classes.values()
    )
    return _emit(args, enumeration.partition_as_dict(partition), text)


def _cmd_genfun(args) -> int:
    u = args.pattern
    max_len = args.max_len if args.max_len is not None else len(u) + 4
    max_norm = args.max_norm if args.max_norm is not None else norm(u) + 10
    builder = {
        "F": genfun.factor_series,
        "A": genfun.embedding_series,
        "M": genfun.cluster_series,
    }[args.series]
    series = builder(u, max_len, max_norm)
    return _emit(args, series.as_dict(), series.dump())


def _cmd_report(args) -> int:
    from . import report

    written = report.write_census_report(
        args.max_n, args.out, force=args.force)
    paths = [str(p) for p in written]
    return _emit(args, {"written": paths}, "\n".join(paths))


def _add_format(sub, choices=("text", "json"), default="text") -> None:
    sub.add_argument("--format", choices=choices, default=default,
                     help=f"output format (default: {default})")


def build_parser() -> _Parser:
    parser = _Parser(prog="wilflab", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True,
                                     metavar="command")

    p = commands.add_parser("info", help="basic facts about a word")
    p.add_argument("word", type=_word_arg)
    _add_format(p)
    p.set_defaults(handler=_cmd_info)

    p = commands.add_parser("embed",
                            help="where a word embeds into another")
    p.add_argument("pattern", type=_word_arg)
    p.add_argument("word", type=_word_arg)
    _add_format(p)
    p.set_defaults(handler=_cmd_embed)

    p = commands.add_parser("cluster",
                            help="minimal cluster of a word on an embedding set")
    p.add_argument("pattern", type=_word_arg)
    p.add_argument("--set", type=_int_list_arg, required=True,
                   help="embedding positions, e.g. 1,2,4")
    p.add_argument("--extended", action="store_true",
                   help="pad on the right to --length (permutations only)")
    p.add_argument("--length", type=int,
                   help="target length for --extended")
    p.add_argument("--tableau", action="store_true",
                   help="also print the stacked shifted copies")
    _add_format(p)
    p.set_defaults(handler=_cmd_cluster)

    p = commands.add_parser("compose",
                            help="compose two overlap embedding sets")
    p.add_argument("first", type=_int_list_arg)
    p.add_argument("second", type=_int_list_arg)
    _add_format(p)
    p.set_defaults(handler=_cmd_compose)

    p = commands.add_parser("blocked",
                            help="blocked positions of a letter in a cluster")
    p.add_argument("word", type=_word_arg)
    p.add_argument("--set", type=_int_list_arg, required=True)
    p.add_argument("--letter", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_blocked)

    p = commands.add_parser("plus",
                            help="distances from a letter to all larger letters")
    p.add_argument("word", type=_word_arg)
    p.add_argument("letter", type=int)
    _add_format(p)
    p.set_defaults(handler=_cmd_plus)

    p = commands.add_parser("profile",
                            help="difference profile of a permutation")
    p.add_argument("word", type=_word_arg)
    _add_format(p)
    p.set_defaults(handler=_cmd_profile)

    p = commands.add_parser("sstest",
                            help="test two permutations for super-strong Wilf equivalence")
    p.add_argument("left", type=_word_arg)
    p.add_argument("right", type=_word_arg)
    _add_format(p)
    p.set_defaults(handler=_cmd_sstest)

    p = commands.add_parser("ssclass",
                            help="full super-strong Wilf class of a permutation")
    p.add_argument("word", type=_word_arg)
    _add_format(p)
    p.set_defaults(handler=_cmd_ssclass)

    p = commands.add_parser("crossclass",
                            help="full cross-equivalence class of a permutation")
    p.add_argument("word", type=_word_arg)
    _add_format(p)
    p.set_defaults(handler=_cmd_crossclass)

    p = commands.add_parser("witness",
                            help="search for an embedding set refuting equivalence")
    p.add_argument("left", type=_word_arg)
    p.add_argument("right", type=_word_arg)
    p.add_argument("--max-shifts", type=int, default=2,
                   help="largest number of stacked shifts to try (default 2)")
    _add_format(p)
    p.set_defaults(handler=_cmd_witness)

    p = commands.add_parser("tree",
                            help="insertion tree of the cross class of a permutation")
    p.add_argument("word", type=_word_arg)
    p.add_argument("--format", choices=("dot", "json"), default="dot",
                   help="output format (default: dot)")
    p.set_defaults(handler=_cmd_tree)

    p = commands.add_parser("enumerate",
                            help="classify all permutations of a given size")
    p.add_argument("n", type=int)
    p.add_argument("--relation", choices=enumeration.RELATIONS, required=True)
    p.add_argument("--stats", action="store_true",
                   help="print statistics instead of the classes")
    p.add_argument("--force", action="store_true",
                   help="allow n beyond the guard")
    _add_format(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = commands.add_parser("genfun",
                            help="truncated counting series of a pattern")
    p.add_argument("pattern", type=_word_arg)
    p.add_argument("--series", choices=("F", "A", "M"), required=True,
                   help="F: dominating words; A: embedding counts; M: cluster terms")
    p.add_argument("--max-len", type=int, default=None,
                   help="length bound (default: pattern length + 4)")
    p.add_argument("--max-norm", type=int, default=None,
                   help="norm bound (default: pattern norm + 10)")
    _add_format(p)
    p.set_defaults(handler=_cmd_genfun)

    p = commands.add_parser("report",
                            help="write a census report with tables and figures")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out", default="wilflab-report",
                   help="output directory (default: wilflab-report)")
    p.add_argument("--force", action="store_true",
                   help="allow max-n beyond the guard")
    _add_format(p)
    p.set_defaults(handler=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"wilflab: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
