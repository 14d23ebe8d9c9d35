"""Figures for the verification report (matplotlib, headless)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def plot_complexity(rows: list[dict], path: Path) -> Path:
    """Runtime against n on log-log axes, one fitted line per series."""
    fig, ax = plt.subplots(figsize=(5.5, 4))
    for series in sorted({r.get("series", "runs") for r in rows}):
        sel = [r for r in rows if r.get("series", "runs") == series]
        ns = sorted({r["n"] for r in sel})
        med = [max(float(np.median([r["seconds"] for r in sel if r["n"] == n])), 1e-7) for n in ns]
        (line,) = ax.loglog(ns, med, "o-", label=f"{series} (median)")
        if len(ns) >= 2:
            k, c = np.polyfit(np.log(ns), np.log(med), 1)
            xs = np.array([ns[0], ns[-1]], float)
            ax.loglog(xs, np.exp(c) * xs**k, "--", color=line.get_color(), label=f"{series} fit, slope {k:.2f}")
    ax.set_xlabel("n (vertices)")
    ax.set_ylabel("seconds")
    ax.set_title("Fast pyramid-or-prism test")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_suite_times(results, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    labels = [str(r.criterion) for r in results]
    colors = ["tab:green" if r.passed else "tab:red" for r in results]
    ax.bar(labels, [r.elapsed for r in results], color=colors)
    ax.set_xlabel("criterion")
    ax.set_ylabel("seconds")
    ax.set_title("Acceptance suite runtimes (green = pass)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_order_histogram(results, path: Path) -> Path | None:
    """Vertex-count distribution of the corpora that record one."""
    data = {r.criterion: [row["n"] for row in r.rows if "n" in row] for r in results if r.criterion != 9}
    data = {k: v for k, v in data.items() if v}
    if not data:
        return None
    fig, ax = plt.subplots(figsize=(6, 3.5))
    for k, v in sorted(data.items()):
        ax.hist(v, bins=range(0, max(v) + 2), histtype="step", label=f"criterion {k}")
    ax.set_xlabel("n")
    ax.set_ylabel("graphs")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_results(results, out_dir: Path) -> list[Path]:
    out = [plot_suite_times(results, out_dir / "suite_times.png")]
    for r in results:
        if r.criterion == 9 and r.rows:
            out.append(plot_complexity(r.rows, out_dir / "complexity_loglog.png"))
    hist = plot_order_histogram(results, out_dir / "corpus_orders.png")
    if hist is not None:
        out.append(hist)
    return out
