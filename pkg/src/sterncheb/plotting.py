"""Figure rendering for the reporting commands.

Figures are written straight to files (Agg backend, no display): a
pass/fail summary for verification runs, a timing chart for benchmarks,
and the classic scatter of the sequence itself for table dumps.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_verify_figure(reports, path: str) -> None:
    """Horizontal bars of checks per identity, green for pass, red for fail."""
    names = [r.identity for r in reports]
    counts = [r.checked for r in reports]
    colors = ["#2a9d2a" if r.passed else "#cc3333" for r in reports]
    height = max(2.0, 0.45 * len(reports) + 1.2)
    fig, ax = plt.subplots(figsize=(7, height))
    ypos = range(len(reports))
    ax.barh(ypos, counts, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("comparisons checked")
    failed = sum(1 for r in reports if not r.passed)
    ax.set_title("identity verification" + (f" ({failed} FAILED)" if failed else " (all passed)"))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_bench_figure(rows, path: str) -> None:
    """Bar chart of mean seconds per algorithm; rows are bench dicts."""
    algos = [row["algo"] for row in rows]
    means = [row["mean_s"] for row in rows]
    mins = [row["min_s"] for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    bars = ax.bar(algos, means, color="#4878a8", label="mean")
    ax.plot(algos, mins, "kv", label="min")
    for bar, mean in zip(bars, means):
        ax.annotate(
            f"{mean:.3g}s",
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
            fontsize=8,
        )
    ax.set_ylabel("seconds per evaluation")
    ax.set_title(f"pathway timings, {rows[0]['bits']}-bit input")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_table_figure(values, path: str) -> None:
    """Scatter of a(n) against n; the self-similar fan is the point."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(range(len(values)), values, ",", color="#333366")
    ax.set_xlabel("n")
    ax.set_ylabel("a(n)")
    ax.set_title(f"Stern diatomic sequence, first {len(values)} values")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
