"""Figure rendering: one line plot per tangle column, one curve per alpha.

Styling follows the reference figures: the maximal amplitude is the
thick black solid line, the three sub-maximal amplitudes are blue solid
lines and their normalization partners red dashed ones.  Output format
follows the file extension (raster .png by default, .svg/.pdf for
vector output).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .data import Curve, load_curves

_MAXIMAL = 1.0 / math.sqrt(2.0)
_BLUE_SET = (1.0 / math.sqrt(5.0), 1.0 / math.sqrt(10.0), 1.0 / math.sqrt(22.0))
_RED_SET = (2.0 / math.sqrt(5.0), 3.0 / math.sqrt(10.0), math.sqrt(21.0 / 22.0))


@dataclass(frozen=True)
class Panel:
    y_column: str
    y_label: str


@dataclass(frozen=True)
class FigureSpec:
    input_csv: Path
    title: str
    panels: tuple[Panel, ...]


FIGURE_LAYOUTS: dict[int, tuple[str, tuple[Panel, ...]]] = {
    1: (
        "Fermionic one-tangles vs acceleration parameter r",
        (Panel("N_A_BC", "inertial one-tangle"), Panel("N_C_AB", "accelerated one-tangle")),
    ),
    2: ("Fermionic π-tangle vs acceleration parameter r", (Panel("pi_tangle", "π-tangle"),)),
    3: (
        "Bosonic one-tangles vs acceleration parameter r",
        (Panel("N_A_BC", "inertial one-tangle"), Panel("N_C_AB", "accelerated one-tangle")),
    ),
    4: ("Bosonic π-tangle vs acceleration parameter r", (Panel("pi_tangle", "π-tangle"),)),
}


def figure_spec(figure: int, csv_path: str | Path) -> FigureSpec:
    if figure not in FIGURE_LAYOUTS:
        raise ValueError(f"figure must be one of {sorted(FIGURE_LAYOUTS)}, got {figure!r}")
    title, panels = FIGURE_LAYOUTS[figure]
    return FigureSpec(Path(csv_path), title, panels)


def _style(alpha: float) -> dict:
    if abs(alpha - _MAXIMAL) < 1e-9:
        return {"color": "black", "linestyle": "-", "linewidth": 2.0}
    if any(abs(alpha - v) < 1e-9 for v in _BLUE_SET):
        return {"color": "tab:blue", "linestyle": "-", "linewidth": 1.3}
    if any(abs(alpha - v) < 1e-9 for v in _RED_SET):
        return {"color": "tab:red", "linestyle": "--", "linewidth": 1.3}
    return {"color": "tab:gray", "linestyle": "-", "linewidth": 1.0}


def render(spec: FigureSpec, output_image: str | Path) -> dict[str, list[Curve]]:
    """Render the figure and return the plotted curves per panel."""
    panel_curves = {panel.y_column: load_curves(spec.input_csv, panel.y_column) for panel in spec.panels}
    fig, axes = plt.subplots(
        1, len(spec.panels), figsize=(6.0 * len(spec.panels), 4.5), squeeze=False
    )
    for axis, panel in zip(axes[0], spec.panels):
        for curve in panel_curves[panel.y_column]:
            axis.plot(curve.r, curve.values, label=curve.label, **_style(curve.alpha))
        axis.set_xlabel("acceleration parameter r")
        axis.set_ylabel(panel.y_label)
        axis.grid(True, alpha=0.3)
        axis.legend(fontsize=8)
    fig.suptitle(spec.title)
    fig.tight_layout()
    output_image = Path(output_image)
    output_image.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(output_image)
    plt.close(fig)
    return panel_curves
