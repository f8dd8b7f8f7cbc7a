"""Figure rendering for audit and scaling reports.

Figures are derived from the same records the CSV files are written from;
the delimited reports stay the canonical output.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .audit import AuditRecord, ScalingResult  # noqa: E402


def render_audit_figure(records: list[AuditRecord], path: Path | str) -> Path:
    """Scatter of per-instance clique counts, algorithm vs oracle."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.5))

    oracle = [r.oracle_clique_count for r in records]
    paper = [r.paper_clique_count for r in records]
    ax1.scatter(oracle, paper, s=18, alpha=0.6)
    top = max(oracle + paper + [1])
    ax1.plot([0, top], [0, top], lw=1, ls="--", color="gray")
    ax1.set_xlabel("oracle maximal cliques")
    ax1.set_ylabel("algorithm maximal cliques")
    ax1.set_title("clique counts per instance")

    missed = [r.missed_cliques for r in records]
    ax2.hist(missed, bins=max(5, min(30, max(missed) + 1 if missed else 5)))
    ax2.set_xlabel("missed maximal cliques")
    ax2.set_ylabel("instances")
    ax2.set_title("completeness gap")

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_scaling_figure(result: ScalingResult, path: Path | str) -> Path:
    """Log-log operation counts against size, with the fitted slopes."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    sizes = [r.n for r in result.records]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(
        sizes,
        [r.phase1_ops for r in result.records],
        "o-",
        label=f"introduction ops (slope {result.phase1_slope:.2f})",
    )
    ax.loglog(
        sizes,
        [r.phase2_ops for r in result.records],
        "s-",
        label=f"merge ops (slope {result.phase2_slope:.2f})",
    )
    ax.set_xlabel("nodes")
    ax.set_ylabel("operations")
    ax.set_title("operation-count scaling")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
