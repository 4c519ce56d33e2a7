"""Figure rendering for CLI report paths.

matplotlib is imported lazily with the Agg backend so that library use never
requires a display; every function writes a file and returns its path.
"""

from __future__ import annotations


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_probe_figure(rows, path: str, title: str = "truncation error") -> str:
    """Log-log decay of |lhs - rhs| against the truncation bound.

    rows: iterable of (N, lhs, rhs, abs_error).
    """
    plt = _pyplot()
    ns = [row[0] for row in rows]
    errors = [row[3] for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, errors, "o-", color="tab:blue")
    ax.set_xscale("log")
    if all(e > 0 for e in errors):
        ax.set_yscale("log")
    ax.set_xlabel("truncation N")
    ax.set_ylabel("|lhs - rhs|")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_verify_figure(counts, path: str) -> str:
    """Bar chart of pass/fail counts per family.

    counts: dict family -> (passed, failed).
    """
    plt = _pyplot()
    families = sorted(counts)
    passed = [counts[f][0] for f in families]
    failed = [counts[f][1] for f in families]
    fig, ax = plt.subplots(figsize=(max(6, 0.7 * len(families) + 2), 4))
    xs = range(len(families))
    ax.bar(xs, passed, color="tab:green", label="pass")
    ax.bar(xs, failed, bottom=passed, color="tab:red", label="fail")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(families, rotation=45, ha="right")
    ax.set_ylabel("cases")
    ax.set_title("verification sweep")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_conjecture_figure(reports, path: str) -> str:
    """Achieved rank against the kernel-dimension target per weight."""
    plt = _pyplot()
    weights = [r["weight"] for r in reports]
    ranks = [r["rank"] for r in reports]
    targets = [r["target"] for r in reports]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(weights, targets, "s--", color="tab:gray", label="target")
    ax.plot(weights, ranks, "o-", color="tab:blue", label="achieved rank")
    ax.set_xlabel("weight")
    ax.set_ylabel("rank")
    ax.set_title("closed Kawashima span vs kernel dimension")
    ax.set_xticks(weights)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
