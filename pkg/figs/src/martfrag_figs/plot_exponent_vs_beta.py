#!/usr/bin/env python3
"""Fitted tail exponents against nucleation shape, with analytic curves.

Inputs: a summary.csv with columns (p, beta, mean_exponent, std_exponent)
and one or more gamma-curve CSVs from `martfrag theory --function
gamma_beta` (columns beta, value; cumulative exponents).  Curve values are
converted to density exponents as -(1 + gamma), matching the summary
convention.  The beta -> infinity asymptote for each curve's p is drawn
dashed when provided.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import pandas as pd
from matplotlib import pyplot as plt

from .common import FigureSpec, SchemaError, read_csv_checked, save_figure

SUMMARY_COLUMNS = ["p", "beta", "mean_exponent", "std_exponent"]
CURVE_COLUMNS = ["beta", "value"]

_COLORS = ("tab:blue", "tab:orange", "tab:green", "tab:red")


def to_density_exponent(gamma):
    """Cumulative tail exponent gamma -> density exponent -(1 + gamma)."""
    return -(1.0 + gamma)


def build_figure(spec: FigureSpec, curve_ps, asymptotes):
    summary_path = spec.inputs[0]
    summary = read_csv_checked(summary_path, SUMMARY_COLUMNS)
    if summary.empty:
        raise SchemaError(f"{summary_path}: empty summary")

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    for i, (curve_path, p) in enumerate(zip(spec.inputs[1:], curve_ps)):
        color = _COLORS[i % len(_COLORS)]
        curve = read_csv_checked(curve_path, CURVE_COLUMNS)
        ax.plot(curve["beta"], to_density_exponent(curve["value"]),
                color=color, lw=1.5, label=f"analytic, p = {p:g}")
        # tolerance match: the CSV parser need not round-trip doubles exactly
        series = summary[(summary["p"] - p).abs() < 1e-9]
        ax.errorbar(series["beta"], series["mean_exponent"],
                    yerr=series["std_exponent"], fmt="o", ms=4, color=color,
                    capsize=3, label=f"fitted, p = {p:g}")
        if asymptotes is not None and p in asymptotes:
            ax.axhline(to_density_exponent(asymptotes[p]), color=color,
                       ls="--", lw=1.0)

    ax.set_xlabel(r"nucleation shape $\beta$")
    ax.set_ylabel("density exponent")
    ax.legend(fontsize=8)
    return fig


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--input", required=True, help="summary.csv")
    parser.add_argument("--curve", action="append", required=True,
                        metavar="P:PATH",
                        help="analytic curve as 'p:path' (repeatable)")
    parser.add_argument("--asymptote", action="append", default=None,
                        metavar="P:GAMMA",
                        help="beta->inf cumulative exponent as 'p:value'")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)
    try:
        curve_ps, curve_paths = [], []
        for item in args.curve:
            p_str, _, path = item.partition(":")
            if not path:
                raise SchemaError(f"--curve needs 'p:path', got {item!r}")
            curve_ps.append(float(p_str))
            curve_paths.append(path)
        asymptotes = None
        if args.asymptote:
            asymptotes = {}
            for item in args.asymptote:
                p_str, _, val = item.partition(":")
                if not val:
                    raise SchemaError(f"--asymptote needs 'p:value', got {item!r}")
                asymptotes[float(p_str)] = float(val)
        spec = FigureSpec(inputs=(args.input, *curve_paths),
                          family="exponent-vs-beta", out=Path(args.out))
        fig = build_figure(spec, curve_ps, asymptotes)
    except (SchemaError, OSError, ValueError, pd.errors.ParserError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    save_figure(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
