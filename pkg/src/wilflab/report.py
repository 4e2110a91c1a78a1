"""Census reports over S_1..S_n: delimited tables, class listings, and
rendered figures, all written next to each other in one directory."""

from __future__ import annotations

import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import enumeration


def write_census_report(max_n: int, out_dir, relations=("ss", "cross"),
                        force: bool = False) -> list[Path]:
    """Classify S_1..S_max_n under each relation and write census.tsv,
    one classes-n{n}-{relation}.json per run, and two PNG charts;
    returns all written paths."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    census_rows = []
    class_counts: dict[str, list[int]] = {rel: [] for rel in relations}
    top_histograms: dict[str, dict[int, int]] = {}
    written = []
    for n in range(1, max_n + 1):
        for relation in relations:
            partition = enumeration.enumerate_classes(n, relation, force=force)
            stats = enumeration.class_statistics(partition)
            class_counts[relation].append(stats["class_count"])
            if n == max_n:
                top_histograms[relation] = stats["histogram"]
            for size, count in sorted(stats["histogram"].items()):
                census_rows.append((n, relation, size, count))
            path = out / f"classes-n{n}-{relation}.json"
            path.write_text(
                json.dumps(enumeration.partition_as_dict(partition), indent=2)
                + "\n")
            written.append(path)
    census = out / "census.tsv"
    lines = ["n\trelation\tclass_size\tnum_classes"]
    lines += [f"{n}\t{rel}\t{size}\t{count}"
              for n, rel, size, count in census_rows]
    census.write_text("\n".join(lines) + "\n")
    written.insert(0, census)
    written.append(_plot_class_counts(out, max_n, class_counts))
    written.append(_plot_class_sizes(out, max_n, top_histograms))
    return written


def _plot_class_counts(out: Path, max_n: int,
                       class_counts: dict[str, list[int]]) -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = list(range(1, max_n + 1))
    for relation, counts in class_counts.items():
        ax.plot(xs, counts, marker="o", label=relation)
    ax.set_xlabel("n")
    ax.set_ylabel("number of classes")
    ax.set_title("Equivalence classes of S_n")
    ax.set_xticks(xs)
    ax.legend()
    fig.tight_layout()
    path = out / "class-counts.png"
    fig.savefig(path)
    plt.close(fig)
    return path


def _plot_class_sizes(out: Path, max_n: int,
                      top_histograms: dict[str, dict[int, int]]) -> Path:
    fig, axes = plt.subplots(
        1, max(len(top_histograms), 1), figsize=(5 * max(len(top_histograms), 1), 4))
    if len(top_histograms) == 1:
        axes = [axes]
    for ax, (relation, histogram) in zip(axes, top_histograms.items()):
        sizes = sorted(histogram)
        ax.bar(range(len(sizes)), [histogram[s] for s in sizes])
        ax.set_xticks(range(len(sizes)))
        ax.set_xticklabels([str(s) for s in sizes])
        ax.set_xlabel("class size")
        ax.set_ylabel("number of classes")
        ax.set_title(f"{relation}, n = {max_n}")
    fig.tight_layout()
    path = out / "class-sizes.png"
    fig.savefig(path)
    plt.close(fig)
    return path
