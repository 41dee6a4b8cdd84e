#!/usr/bin/env python3
"""Histogram surface with the analytic growth-rate curve overlaid.

Inputs: a histogram.csv produced by `martfrag analyze --mode histogram` and
a curve CSV from `martfrag theory` (1D profile on the support line, or a 2D
surface grid).  The support line x + y = 1 is drawn dashed.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np
from matplotlib import pyplot as plt

from .common import (
    CURVE_1D_COLUMNS,
    CURVE_2D_COLUMNS,
    FigureSpec,
    HISTOGRAM_COLUMNS,
    SchemaError,
    read_csv_checked,
    save_figure,
)


def build_figure(spec: FigureSpec):
    hist_path, curve_path = spec.inputs
    hist = read_csv_checked(hist_path, HISTOGRAM_COLUMNS)
    if hist.empty:
        raise SchemaError(f"{hist_path}: empty histogram, nothing to plot")
    curve = _read_curve(curve_path)

    fig = plt.figure(figsize=(7.0, 5.6))
    ax = fig.add_subplot(projection="3d")
    ax.scatter(hist["x_lo"], hist["y_lo"], hist["value"],
               s=6, c=hist["value"], cmap="viridis", depthshade=False,
               label="normalized histogram")

    if "y" in curve.columns:
        _plot_surface_curve(ax, curve)
    else:
        # 1D profile lives on the support line x + y = 1
        ax.plot(curve["x"], 1.0 - curve["x"], curve["value"],
                color="crimson", lw=2.0, label="analytic")

    # dashed support line at height 0
    line = np.linspace(0.0, 1.0, 50)
    ax.plot(line, 1.0 - line, np.zeros_like(line), "k--", lw=1.0,
            label="x + y = 1")

    ax.set_xlabel(spec.labels.get("x", "x"))
    ax.set_ylabel(spec.labels.get("y", "y"))
    ax.set_zlabel(spec.labels.get("z", "growth rate"))
    ax.legend(loc="upper left", fontsize=8)
    if "title" in spec.labels:
        ax.set_title(spec.labels["title"])
    return fig


def _read_curve(path):
    try:
        return read_csv_checked(path, CURVE_2D_COLUMNS)
    except SchemaError:
        return read_csv_checked(path, CURVE_1D_COLUMNS)


def _plot_surface_curve(ax, curve):
    xs = np.sort(curve["x"].unique())
    ys = np.sort(curve["y"].unique())
    grid = curve.pivot(index="x", columns="y", values="value")
    xx, yy = np.meshgrid(xs, ys, indexing="ij")
    ax.plot_wireframe(xx, yy, grid.to_numpy(), color="crimson", lw=0.5,
                      rstride=1, cstride=1, label="analytic")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--input", required=True, help="histogram.csv")
    parser.add_argument("--curve", required=True, help="analytic curve CSV")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--title", default=None)
    args = parser.parse_args(argv)
    try:
        labels = {"title": args.title} if args.title else {}
        spec = FigureSpec(inputs=(args.input, args.curve),
                          family="density-surface", out=Path(args.out),
                          labels=labels)
        fig = build_figure(spec)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    save_figure(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
