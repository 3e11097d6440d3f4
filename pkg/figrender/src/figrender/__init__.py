"""Rendering of the reference tangle-decay figures from sweep CSVs."""

from .data import Curve, FigureDataError, alpha_label, load_curves
from .render import FIGURE_LAYOUTS, FigureSpec, Panel, figure_spec, render

__version__ = "0.1.0"

__all__ = [
    "Curve",
    "FIGURE_LAYOUTS",
    "FigureDataError",
    "FigureSpec",
    "Panel",
    "alpha_label",
    "figure_spec",
    "load_curves",
    "render",
]
