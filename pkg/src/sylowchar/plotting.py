"""Figures for multiplicity reports.

Rendering is file-only (Agg backend); nothing here opens a window.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .characters import degree  # noqa: E402
from .multiplicity import MultiplicityReport  # noqa: E402
from .partitions import format_partition  # noqa: E402
from .sylow import sylow_order  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def report_stem(report: MultiplicityReport) -> str:
    return f"multiplicity_p{report.prime}_n{report.degree}"


def write_table(report: MultiplicityReport, path: Path, delimiter: str = ",") -> Path:
    """One row per partition: index, partition (compact), degree, multiplicity."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        w.writerow(["index", "partition", "degree", "multiplicity"])
        for i, (lam, m) in enumerate(report.entries.items()):
            w.writerow([i, format_partition(lam, compact=True) or "()", degree(lam), m])
    return path


def plot_report(report: MultiplicityReport, path: Path) -> Path:
    """Two panels: f over P(n) in canonical order, and f against chi(1)/|P_n|."""
    lams = list(report.entries)
    values = [report.entries[lam] for lam in lams]
    order = sylow_order(report.prime, report.degree)
    with plt.rc_context(STYLE):
        fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(9, 3.4))

        xs = range(len(lams))
        pos = [(i, v) for i, v in zip(xs, values) if v > 0]
        zero = [i for i, v in zip(xs, values) if v == 0]
        if pos:
            ax0.semilogy([i for i, _ in pos], [v for _, v in pos], ".", ms=3, color="0.2")
        floor = min((v for _, v in pos), default=1)
        if zero:
            # zeros cannot sit on a log axis; mark them below the smallest positive value
            ax0.plot(zero, [floor / 4] * len(zero), "x", color="tab:red", ms=6,
                     label=f"f = 0 ({len(zero)})")
            ax0.legend(loc="upper right", frameon=False)
        ax0.set_xlabel("partition index (reverse lexicographic)")
        ax0.set_ylabel("multiplicity f")
        ax0.set_title(f"p = {report.prime}, n = {report.degree}")

        ratio = [degree(lam) / order for lam in lams]
        pts = [(r, v) for r, v in zip(ratio, values) if v > 0]
        if pts:
            ax1.loglog([r for r, _ in pts], [v for _, v in pts], ".", ms=3, color="0.2")
            lo = min(r for r, _ in pts)
            hi = max(r for r, _ in pts)
            ax1.loglog([lo, hi], [lo, hi], "-", lw=0.8, color="tab:blue",
                       label="f = deg / |P_n|")
            ax1.legend(loc="upper left", frameon=False)
        ax1.set_xlabel("degree / |P_n|")
        ax1.set_ylabel("multiplicity f")

        fig.savefig(path)
        plt.close(fig)
    return path


def write_report_files(
    report: MultiplicityReport, outdir: Path, fmt: str = "png", delimiter: str = ","
) -> dict[str, Path]:
    outdir.mkdir(parents=True, exist_ok=True)
    stem = report_stem(report)
    ext = "tsv" if delimiter == "\t" else "csv"
    return {
        "table": write_table(report, outdir / f"{stem}.{ext}", delimiter),
        "figure": plot_report(report, outdir / f"{stem}.{fmt}"),
    }
