"""Tripartite entanglement tangles for uniformly accelerated observers.

Two independent evaluation routes for the same physics: a brute-force
density-matrix pipeline (states, partial traces, partial transposes,
dense or exact-sparse eigensolves) and direct closed-form expressions,
cross-validated against each other, with a sweep CLI that regenerates
the reference figures as CSV.
"""

from .closed_form import (
    SpectrumTerm,
    boson_one_tangle_accelerated,
    boson_one_tangle_from_spectrum,
    boson_one_tangle_inertial,
    boson_pi_tangle,
    boson_spectrum_term,
    closed_report,
    fermion_one_tangle_accelerated,
    fermion_one_tangle_inertial,
    fermion_pi_tangle,
)
from .errors import NumericalError, TruncationError
from .hermitian import (
    EigenResult,
    SeriesSum,
    eigenvalues_hermitian,
    negativity,
    polylog_neg_half,
    sum_series,
    trace_norm,
)
from .qudit import (
    DensityMatrix,
    StateVector,
    SubsystemLayout,
    outer,
    partial_trace,
    partial_transpose,
    reduced_density_matrix,
    tensor,
)
from .rindler import (
    FieldKind,
    ScenarioParams,
    TruncationReport,
    adaptive_n_max,
    boson_norm_tail,
    boson_reduced_sparse,
    boson_tail_bound,
    build_boson_state,
    build_fermion_state,
    r_from_acceleration,
    rho_abc,
)
from .sweep import PAPER_ALPHAS, PAPER_ALPHA_VALUES, SweepGrid, run_sweep, write_csv, write_figure_csvs
from .tangles import TangleReport, numeric_report, one_tangle, pi_tangle_numeric, two_tangle

__version__ = "0.1.0"

__all__ = [
    "DensityMatrix",
    "EigenResult",
    "FieldKind",
    "NumericalError",
    "PAPER_ALPHAS",
    "PAPER_ALPHA_VALUES",
    "ScenarioParams",
    "SeriesSum",
    "SpectrumTerm",
    "StateVector",
    "SubsystemLayout",
    "SweepGrid",
    "TangleReport",
    "TruncationError",
    "TruncationReport",
    "adaptive_n_max",
    "boson_norm_tail",
    "boson_one_tangle_accelerated",
    "boson_one_tangle_from_spectrum",
    "boson_one_tangle_inertial",
    "boson_pi_tangle",
    "boson_reduced_sparse",
    "boson_spectrum_term",
    "boson_tail_bound",
    "build_boson_state",
    "build_fermion_state",
    "closed_report",
    "eigenvalues_hermitian",
    "fermion_one_tangle_accelerated",
    "fermion_one_tangle_inertial",
    "fermion_pi_tangle",
    "negativity",
    "numeric_report",
    "one_tangle",
    "outer",
    "partial_trace",
    "partial_transpose",
    "pi_tangle_numeric",
    "polylog_neg_half",
    "r_from_acceleration",
    "reduced_density_matrix",
    "rho_abc",
    "run_sweep",
    "sum_series",
    "tensor",
    "trace_norm",
    "two_tangle",
    "write_csv",
    "write_figure_csvs",
]
