#!/usr/bin/env python
"""
Plot seed-averaged mean angular error against the fraction of missing edges.

One curve per (method, loss, depth) group of a sweep CSV; failed rows are
skipped. Requires the ``plot`` extra (matplotlib).

Usage:
    python scripts/plot_sweep.py sweep.csv sweep.png
"""
import argparse
import csv
import logging
import sys
from collections import defaultdict
from pathlib import Path
from typing import Optional

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def curve_label(row: dict[str, str]) -> str:
    if row["method"] == "dmf":
        return f"depth {row['depth']} ({row['loss']})"
    return row["method"]


def load_curves(path: Path) -> dict[str, dict[float, list[float]]]:
    """Errors grouped by curve label, then by requested missing fraction."""
    curves: dict[str, dict[float, list[float]]] = defaultdict(lambda: defaultdict(list))
    skipped = 0
    with open(path, "r", encoding="utf-8", newline="") as handle:
        for row in csv.DictReader(handle):
            if row["status"] != "ok" or not row["mean_err_deg"]:
                skipped += 1
                continue
            missing = float(row["missing_requested"] or row["missing_realized"])
            curves[curve_label(row)][missing].append(float(row["mean_err_deg"]))
    if skipped:
        logger.warning(f"Skipped {skipped} failed rows")
    return curves


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Plot a rotsync sweep.")
    parser.add_argument("csv", type=Path, help="sweep CSV")
    parser.add_argument("out", type=Path, help="image file to write")
    args = parser.parse_args(argv)

    curves = load_curves(args.csv)
    fig, ax = plt.subplots(figsize=(5, 3.5), dpi=150)
    for label in sorted(curves):
        points = sorted(curves[label].items())
        xs = [missing for missing, _ in points]
        ys = [float(np.mean(errors)) for _, errors in points]
        ax.plot(xs, ys, "-o", ms=4, lw=1, label=label)

    ax.set_xlabel("Fraction of missing edges")
    ax.set_ylabel("Mean angular error [deg]")
    ax.legend(loc="upper left", fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(args.out)
    logger.info(f"Wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
