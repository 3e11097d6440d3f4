"""CSV loading and curve extraction for the tangle figures.

Consumes the sweep CSV schema (columns field, alpha, r, method, tangle
columns, ckw_ok, n_max, tail_bound, error).  Extraction is a pure
function of the file contents: identical CSV bytes yield identical
curve data.  Validation failures carry 1-based row numbers (the header
is row 1).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

REQUIRED_COLUMNS = ("alpha", "r", "method")

# Known amplitude values get their exact-surd legend label.
_SURD_LABELS = (
    ("1/√2", 1.0 / math.sqrt(2.0)),
    ("1/√5", 1.0 / math.sqrt(5.0)),
    ("2/√5", 2.0 / math.sqrt(5.0)),
    ("1/√10", 1.0 / math.sqrt(10.0)),
    ("3/√10", 3.0 / math.sqrt(10.0)),
    ("1/√22", 1.0 / math.sqrt(22.0)),
    ("√(21/22)", math.sqrt(21.0 / 22.0)),
)


class FigureDataError(ValueError):
    """Malformed or incomplete figure CSV."""


@dataclass(frozen=True)
class Curve:
    alpha: float
    r: np.ndarray
    values: np.ndarray

    @property
    def label(self) -> str:
        for surd, value in _SURD_LABELS:
            if abs(self.alpha - value) < 1e-9:
                return f"α = {surd} ≈ {value:.4f}"
        return f"α = {self.alpha:.4f}"


def alpha_label(alpha: float) -> str:
    return Curve(alpha, np.empty(0), np.empty(0)).label


def _parse_float(text: str, column: str, path: Path, row_number: int) -> float:
    try:
        return float(text)
    except ValueError:
        raise FigureDataError(
            f"{path}: row {row_number}: column {column!r} is not a number: {text!r}"
        ) from None


def load_curves(csv_path: str | Path, y_column: str) -> list[Curve]:
    """One curve per distinct alpha, r-sorted, curves sorted by alpha descending.

    Rows flagged in the ``error`` column are skipped (the sweep records
    per-point failures there); when several methods are present the
    alphabetically first one is used so the extraction stays a function
    of the file alone.
    """
    path = Path(csv_path)
    with open(path, newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise FigureDataError(f"{path}: empty file")
        missing = [c for c in (*REQUIRED_COLUMNS, y_column) if c not in reader.fieldnames]
        if missing:
            raise FigureDataError(f"{path}: missing columns {missing} in header")
        points: dict[tuple[float, str], list[tuple[float, float]]] = {}
        row_number = 1
        for row in reader:
            row_number += 1
            if row.get("error"):
                continue
            alpha = _parse_float(row["alpha"], "alpha", path, row_number)
            r = _parse_float(row["r"], "r", path, row_number)
            value = _parse_float(row[y_column], y_column, path, row_number)
            points.setdefault((alpha, row["method"]), []).append((r, value))
    if not points:
        raise FigureDataError(f"{path}: no usable data rows")
    methods = sorted({method for _, method in points})
    chosen = methods[0]
    curves = []
    for (alpha, method), pairs in sorted(points.items(), key=lambda kv: -kv[0][0]):
        if method != chosen:
            continue
        pairs.sort()
        r = np.array([p[0] for p in pairs])
        values = np.array([p[1] for p in pairs])
        curves.append(Curve(alpha, r, values))
    return curves
