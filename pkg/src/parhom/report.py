"""Selfcheck report files: a delimited summary plus matplotlib figures."""

from __future__ import annotations

import csv
import os

from .selfcheck import CheckResult


def write_report(results: list[CheckResult], outdir: str) -> list[str]:
    """Write report.csv and runtime/status figures into outdir; returns paths."""
    os.makedirs(outdir, exist_ok=True)
    paths = []

    csv_path = os.path.join(outdir, "report.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "status", "seconds", "details"])
        for r in results:
            writer.writerow([r.name, "pass" if r.ok else "fail", f"{r.seconds:.3f}", r.details])
    paths.append(csv_path)

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [r.name for r in results]
    seconds = [r.seconds for r in results]
    colors = ["#2a9d2a" if r.ok else "#cc3311" for r in results]

    fig, ax = plt.subplots(figsize=(8, 0.45 * len(results) + 1.2))
    ypos = range(len(results))
    ax.barh(ypos, seconds, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    passed = sum(r.ok for r in results)
    ax.set_title(f"selfcheck: {passed}/{len(results)} passed")
    fig.tight_layout()
    png_path = os.path.join(outdir, "report.png")
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    paths.append(png_path)
    return paths
