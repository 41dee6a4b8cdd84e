"""Shared plumbing: schema checks, deterministic savefig, FigureSpec."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # headless, and keeps output independent of any display

import pandas as pd

from . import SCHEMA_VERSION

HISTOGRAM_COLUMNS = ["x_lo", "y_lo", "count", "value"]
INTERFACES_COLUMNS = ["realization", "seq", "orientation", "size", "birth_time"]
CURVE_1D_COLUMNS = ["x", "value"]
CURVE_2D_COLUMNS = ["x", "y", "value"]


class SchemaError(ValueError):
    """Input file does not match the documented artifact schema."""


@dataclass(frozen=True)
class FigureSpec:
    """One figure: validated input paths, family label, output path."""

    inputs: tuple
    family: str
    out: Path
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        for path in self.inputs:
            if not Path(path).exists():
                raise SchemaError(f"missing input {path}")


def read_csv_checked(path, required_columns) -> pd.DataFrame:
    df = pd.read_csv(path)
    missing = [c for c in required_columns if c not in df.columns]
    if missing:
        raise SchemaError(f"{path}: missing columns {missing}")
    return df


def read_json_checked(path, required_keys) -> dict:
    data = json.loads(Path(path).read_text())
    if data.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(
            f"{path}: schema_version {data.get('schema_version')!r}, "
            f"expected {SCHEMA_VERSION}"
        )
    missing = [k for k in required_keys if k not in data]
    if missing:
        raise SchemaError(f"{path}: missing keys {missing}")
    return data


def save_figure(fig, out_path) -> None:
    """Write the image without timestamps so reruns are byte-stable."""
    out = Path(out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150, metadata=_no_timestamp_metadata(out))


def _no_timestamp_metadata(out: Path):
    suffix = out.suffix.lower()
    if suffix == ".png":
        return {"Software": "martfrag-figs"}
    if suffix in (".pdf", ".svg"):
        return {"Creator": "martfrag-figs", "Date": None}
    return None
