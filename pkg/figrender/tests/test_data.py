"""Curve extraction and CSV validation."""

import math

import numpy as np
import pytest

from figrender import FigureDataError, alpha_label, load_curves

from conftest import ALPHAS, synthetic_rows, write_csv


def test_one_curve_per_alpha_sorted(sweep_csv):
    curves = load_curves(sweep_csv, "pi_tangle")
    assert len(curves) == 7
    alphas = [c.alpha for c in curves]
    assert alphas == sorted(alphas, reverse=True)
    for curve in curves:
        assert np.all(np.diff(curve.r) > 0)
        assert curve.r.shape == curve.values.shape


def test_maximal_alpha_topmost_at_r_zero(sweep_csv):
    curves = load_curves(sweep_csv, "N_A_BC")
    at_zero = {c.alpha: c.values[c.r == 0.0][0] for c in curves}
    top_alpha = max(at_zero, key=at_zero.get)
    assert top_alpha == pytest.approx(1 / math.sqrt(2), abs=1e-9)


def test_extraction_is_deterministic(sweep_csv):
    first = load_curves(sweep_csv, "pi_tangle")
    second = load_curves(sweep_csv, "pi_tangle")
    for a, b in zip(first, second):
        assert a.alpha == b.alpha
        assert np.array_equal(a.r, b.r)
        assert np.array_equal(a.values, b.values)


def test_missing_column_is_named(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("alpha,r,method\n0.5,0.0,closed\n")
    with pytest.raises(FigureDataError, match="pi_tangle"):
        load_curves(path, "pi_tangle")


def test_malformed_row_carries_row_number(tmp_path):
    rows = synthetic_rows(r_steps=3)
    rows[1][4] = "not-a-number"  # N_A_BC of the second data row
    path = tmp_path / "bad.csv"
    write_csv(path, rows)
    with pytest.raises(FigureDataError, match="row 3"):
        load_curves(path, "N_A_BC")


def test_empty_body_rejected(tmp_path):
    path = tmp_path / "empty.csv"
    write_csv(path, [])
    with pytest.raises(FigureDataError, match="no usable data rows"):
        load_curves(path, "pi_tangle")


def test_error_rows_are_skipped(tmp_path):
    rows = synthetic_rows(r_steps=3)
    rows[0][-1] = "truncation cap exceeded"
    for i in (4, 14):
        rows[0][i] = ""
    path = tmp_path / "partial.csv"
    write_csv(path, rows)
    curves = load_curves(path, "pi_tangle")
    maximal = [c for c in curves if abs(c.alpha - ALPHAS[0]) < 1e-9][0]
    assert len(maximal.r) == 2


def test_single_method_chosen_when_both_present(tmp_path):
    rows = synthetic_rows(r_steps=3, method="closed") + synthetic_rows(r_steps=3, method="numeric")
    path = tmp_path / "both.csv"
    write_csv(path, rows)
    curves = load_curves(path, "pi_tangle")
    assert len(curves) == 7
    assert all(len(c.r) == 3 for c in curves)


def test_surd_legend_labels():
    assert "1/√5" in alpha_label(1 / math.sqrt(5))
    assert "≈ 0.4472" in alpha_label(1 / math.sqrt(5))
    assert alpha_label(0.37) == "α = 0.3700"
