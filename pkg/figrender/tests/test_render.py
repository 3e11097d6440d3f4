"""Rendering and CLI behavior, including the end-to-end CSV pipeline."""

import math
import shutil
import subprocess
import sys

import numpy as np
import pytest

from figrender import figure_spec, render
from figrender.cli import main

from conftest import synthetic_rows, write_csv


def test_render_two_panel_figure(sweep_csv, tmp_path):
    out = tmp_path / "fig1.png"
    curves = render(figure_spec(1, sweep_csv), out)
    assert out.exists() and out.stat().st_size > 0
    assert set(curves) == {"N_A_BC", "N_C_AB"}
    assert all(len(panel) == 7 for panel in curves.values())


def test_render_single_panel_and_vector_output(sweep_csv, tmp_path):
    out = tmp_path / "fig2.svg"
    curves = render(figure_spec(2, sweep_csv), out)
    assert out.exists() and out.stat().st_size > 0
    assert set(curves) == {"pi_tangle"}


def test_render_returns_identical_curve_data(sweep_csv, tmp_path):
    first = render(figure_spec(2, sweep_csv), tmp_path / "a.png")
    second = render(figure_spec(2, sweep_csv), tmp_path / "b.png")
    for a, b in zip(first["pi_tangle"], second["pi_tangle"]):
        assert np.array_equal(a.values, b.values)


def test_unknown_figure_rejected(sweep_csv):
    with pytest.raises(ValueError):
        figure_spec(5, sweep_csv)


def test_cli_render(sweep_csv, tmp_path, capsys):
    out = tmp_path / "fig2.png"
    assert main(["render", "--figure", "2", "--csv", str(sweep_csv), "--out", str(out)]) == 0
    assert out.exists()
    assert "7 curves" in capsys.readouterr().out


def test_cli_rejects_malformed_csv(tmp_path, capsys):
    rows = synthetic_rows(r_steps=2)
    rows[0][2] = "xyz"  # r column
    path = tmp_path / "bad.csv"
    write_csv(path, rows)
    code = main(["render", "--figure", "2", "--csv", str(path), "--out", str(tmp_path / "o.png")])
    assert code == 1
    assert "row 2" in capsys.readouterr().err


@pytest.mark.skipif(shutil.which(sys.executable) is None, reason="no python executable")
def test_end_to_end_from_sweep_cli(tmp_path):
    """Drive the sweep CLI for the real CSVs, then render all four figures."""
    result = subprocess.run(
        [sys.executable, "-m", "tritangle", "figures", "--out-dir", str(tmp_path)],
        capture_output=True,
        text=True,
    )
    if result.returncode != 0:
        pytest.skip(f"sweep CLI unavailable: {result.stderr.strip()[:200]}")
    for fig in (1, 2, 3, 4):
        out = tmp_path / f"fig{fig}.png"
        curves = render(figure_spec(fig, tmp_path / f"fig{fig}.csv"), out)
        assert out.exists() and out.stat().st_size > 0
        for panel in curves.values():
            assert len(panel) == 7
            at_zero = {c.alpha: c.values[c.r == 0.0][0] for c in panel}
            top = max(at_zero, key=at_zero.get)
            assert top == pytest.approx(1 / math.sqrt(2), abs=1e-9)
