"""Figures written next to the delimited CLI output."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_class_sizes(result, path) -> None:
    """Bar chart of reduced-square counts per class, in catalog order."""
    pairs = sorted(zip(result.representatives, result.class_sizes), key=lambda p: p[0].key())
    sizes = [s for _, s in pairs]
    fig, ax = plt.subplots(figsize=(max(4, 0.35 * len(sizes) + 2), 3.2))
    ax.bar(range(1, len(sizes) + 1), sizes, color="0.35")
    ax.set_xlabel("class index")
    ax.set_ylabel("reduced squares")
    ax.set_title(f"order {result.order}, {result.kind.label}: {len(sizes)} classes")
    ax.set_xticks(range(1, len(sizes) + 1))
    _save(fig, path)


def plot_bench(rows, path) -> None:
    """Grouped bars of ``(task, order, variant, seconds)`` rows, log scale."""
    tasks = sorted({(r[0], r[1]) for r in rows})
    variants = sorted({r[2] for r in rows})
    width = 0.8 / max(1, len(variants))
    fig, ax = plt.subplots(figsize=(max(5, 1.1 * len(tasks) + 2), 3.5))
    for k, var in enumerate(variants):
        xs, ys = [], []
        for i, t in enumerate(tasks):
            for r in rows:
                if (r[0], r[1]) == t and r[2] == var:
                    xs.append(i + k * width)
                    ys.append(max(r[3], 1e-6))
        ax.bar(xs, ys, width=width, label=var)
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(tasks))])
    ax.set_xticklabels([f"{t} n={n}" for t, n in tasks], rotation=30, ha="right")
    ax.set_yscale("log")
    ax.set_ylabel("seconds")
    ax.legend(fontsize=8)
    _save(fig, path)
