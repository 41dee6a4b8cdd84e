#!/usr/bin/env python3
"""Log-log interface-size histogram with a power-law slope guide.

Input is an interfaces.csv from `martfrag run`; if the run directory also
holds a fit.json (from `martfrag analyze --mode powerlaw`) an inset shows
the per-realization exponent histogram.  The guide slope defaults to the
fit's predicted density exponent and can be overridden with --slope.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np
from matplotlib import pyplot as plt

from .common import (
    FigureSpec,
    INTERFACES_COLUMNS,
    SchemaError,
    read_csv_checked,
    read_json_checked,
    save_figure,
)

GUIDE_LABEL = "slope {slope:g}"


def build_figure(spec: FigureSpec, slope: float, orientation=None):
    iface_path = spec.inputs[0]
    df = read_csv_checked(iface_path, INTERFACES_COLUMNS)
    if orientation:
        df = df[df["orientation"] == orientation]
    sizes = df["size"].to_numpy(dtype=float)
    sizes = sizes[sizes > 0.0]
    if sizes.size < 2:
        raise SchemaError(f"{iface_path}: need at least 2 positive sizes, "
                          f"got {sizes.size}")

    bins = np.geomspace(sizes.min(), sizes.max(), 60)
    counts, edges = np.histogram(sizes, bins=bins)
    widths = np.diff(edges)
    centers = np.sqrt(edges[:-1] * edges[1:])
    density = counts / (widths * sizes.size)
    keep = density > 0.0

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.loglog(centers[keep], density[keep], "o", ms=3.5, mfc="none",
              label="empirical density")

    # anchor the guide at the empirical median-density point
    x0 = np.median(centers[keep])
    y0 = np.interp(x0, centers[keep], density[keep])
    xs = np.array([centers[keep].min(), centers[keep].max()])
    ax.loglog(xs, y0 * (xs / x0) ** slope, "r-", lw=1.5,
              label=GUIDE_LABEL.format(slope=slope))

    summary = spec.labels.get("fit_summary")
    if summary is not None:
        inset = ax.inset_axes([0.12, 0.12, 0.3, 0.3])
        exps = [f["density_exponent"] for f in summary["fits"]]
        inset.hist(exps, bins=max(3, len(exps) // 2), color="steelblue")
        inset.axvline(summary["predicted_density_exponent"], color="r", lw=1.0)
        inset.set_title("fitted exponents", fontsize=7)
        inset.tick_params(labelsize=6)

    ax.set_xlabel("interface size")
    ax.set_ylabel("density")
    ax.legend(loc="upper right", fontsize=8)
    return fig


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--input", required=True, help="interfaces.csv")
    parser.add_argument("--fit", default=None,
                        help="fit.json for the slope guide and inset")
    parser.add_argument("--slope", type=float, default=None,
                        help="guide slope (defaults to the fit's prediction)")
    parser.add_argument("--orientation", default=None)
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)
    try:
        inputs = (args.input,) if args.fit is None else (args.input, args.fit)
        labels = {}
        slope = args.slope
        orientation = args.orientation
        if args.fit is not None:
            summary = read_json_checked(
                args.fit, ["predicted_density_exponent", "fits", "orientation"])
            labels["fit_summary"] = summary
            if slope is None:
                slope = summary["predicted_density_exponent"]
            if orientation is None:
                orientation = summary["orientation"]
        if slope is None:
            raise SchemaError("need --slope when no fit.json is given")
        spec = FigureSpec(inputs=inputs, family="loglog-tail",
                          out=Path(args.out), labels=labels)
        fig = build_figure(spec, slope, orientation)
    except (SchemaError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    save_figure(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
