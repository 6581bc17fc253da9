"""Report files: structured JSON, delimited summary, and a rendered figure.

Given a verification report and an output directory, writes
``<statement>.json`` (the stable machine-readable document),
``<statement>.tsv`` (one delimited summary row), and ``<statement>.png``
(a small matplotlib summary chart).
"""

from __future__ import annotations

import os

from .harness import VerificationReport


def _slug(statement: str) -> str:
    return statement.replace("/", "-")


def write_report_files(report: VerificationReport, directory: str) -> list[str]:
    """Write json + tsv + png for the report; returns the paths written."""
    os.makedirs(directory, exist_ok=True)
    base = os.path.join(directory, _slug(report.statement))
    paths = []

    json_path = base + ".json"
    with open(json_path, "w") as f:
        f.write(report.to_json() + "\n")
    paths.append(json_path)

    tsv_path = base + ".tsv"
    with open(tsv_path, "w") as f:
        f.write("statement\tmode\tchecked\tviolations\twork_units\tresult\n")
        f.write(
            f"{report.statement}\t{report.mode}\t{report.checked}\t"
            f"{len(report.violations)}\t{report.work_units}\t"
            f"{'pass' if report.passed else 'fail'}\n"
        )
    paths.append(tsv_path)

    paths.append(_render_figure(report, base + ".png"))
    return paths


def _render_figure(report: VerificationReport, path: str) -> str:
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5.5, 3.2))
    labels = ["checked", "violations", "work units"]
    values = [report.checked, len(report.violations), report.work_units]
    colors = ["#4878a8", "#b2556b" if report.violations else "#7aa374", "#a8a458"]
    bars = ax.bar(labels, values, color=colors)
    for bar, value in zip(bars, values):
        ax.annotate(
            str(value),
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
            fontsize=9,
        )
    ax.set_title(
        f"{report.statement} [{report.mode}]: "
        f"{'pass' if report.passed else 'FAIL'}"
    )
    ax.set_yscale("symlog")
    ax.margins(y=0.15)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
