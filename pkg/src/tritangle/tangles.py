"""Brute-force tangle measures on explicit tripartite density matrices.

One-tangles are negativities across the one-vs-rest bipartitions,
two-tangles are negativities of the two-party reductions, residuals
follow pi_X = N_X(YZ)^2 - N_XY^2 - N_XZ^2, and the pi-tangle is the
mean of the three residuals.  This module is the numeric oracle the
closed forms are validated against; it never consults them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .hermitian import negativity
from .qudit import DensityMatrix, partial_trace
from .rindler import (
    EPS_NORM_DEFAULT,
    N_MAX_CAP,
    FieldKind,
    ScenarioParams,
    TruncationReport,
    boson_reduced_sparse,
    build_boson_state,
    build_fermion_state,
    rho_abc,
)
from .sparse_ops import SparseOperator, negativity_sparse, partial_trace_sparse

# Largest total dimension handled densely; bigger reductions go through
# the sparse block pipeline (identical results, linear scaling).
DENSE_DIM_LIMIT = 600

# Negativities within this of zero are rounding noise and clamp to 0;
# anything more negative indicates a real defect and raises.
CLAMP_TOL = 1e-10

# Slack for the monogamy comparison N_X^2 + slack >= N_XY^2 + N_XZ^2.
CKW_SLACK = 1e-9

_PAIRS = ((0, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class TangleReport:
    """All tangles of one tripartite state, plus bookkeeping.

    one_tangles is ordered (N_A(BC), N_B(AC), N_C(AB)), two_tangles
    (N_AB, N_AC, N_BC), residuals (pi_A, pi_B, pi_C).
    """

    one_tangles: tuple[float, float, float]
    two_tangles: tuple[float, float, float]
    residuals: tuple[float, float, float]
    pi_tangle: float
    ckw_ok: tuple[bool, bool, bool]
    method: str
    truncation: TruncationReport | None = None


def _clamp(value: float, tol: float = CLAMP_TOL) -> float:
    if value < -tol:
        raise NumericalError(f"negativity {value!r} is negative beyond tolerance {tol!r}")
    return 0.0 if value < 0.0 else value


def _negativity_any(rho: DensityMatrix | SparseOperator, subsystem) -> float:
    if isinstance(rho, SparseOperator):
        return negativity_sparse(rho, subsystem)
    return negativity(rho, subsystem)


def _partial_trace_any(rho: DensityMatrix | SparseOperator, keep) -> DensityMatrix | SparseOperator:
    if isinstance(rho, SparseOperator):
        return partial_trace_sparse(rho, keep)
    return partial_trace(rho, keep)


def _require_tripartite(rho: DensityMatrix | SparseOperator) -> None:
    if rho.layout.n_subsystems != 3:
        raise ValueError(f"expected a tripartite layout, got {rho.layout.dims}")


def one_tangle(rho: DensityMatrix | SparseOperator, subsystem: int) -> float:
    """Negativity of the subsystem-vs-rest bipartition."""
    _require_tripartite(rho)
    return _negativity_any(rho, subsystem)


def two_tangle(rho: DensityMatrix | SparseOperator, pair: tuple[int, int]) -> float:
    """Negativity of the two-party reduction rho_pair."""
    _require_tripartite(rho)
    i, j = pair
    if i == j:
        raise ValueError("pair must name two distinct subsystems")
    reduced = _partial_trace_any(rho, (i, j))
    return _negativity_any(reduced, 0)


def pi_tangle_numeric(
    rho: DensityMatrix | SparseOperator,
    method: str = "numeric",
    truncation: TruncationReport | None = None,
    clamp_tol: float = CLAMP_TOL,
    ckw_slack: float = CKW_SLACK,
) -> TangleReport:
    """Full tangle report from an explicit density matrix."""
    _require_tripartite(rho)
    ones = tuple(_clamp(one_tangle(rho, k), clamp_tol) for k in range(3))
    twos = tuple(_clamp(two_tangle(rho, pair), clamp_tol) for pair in _PAIRS)
    n_ab, n_ac, n_bc = twos
    # squares combined exactly as defined; no algebraic rearrangement
    residuals = (
        ones[0] ** 2 - n_ab**2 - n_ac**2,
        ones[1] ** 2 - n_ab**2 - n_bc**2,
        ones[2] ** 2 - n_ac**2 - n_bc**2,
    )
    pi = (residuals[0] + residuals[1] + residuals[2]) / 3.0
    ckw = (
        ones[0] ** 2 + ckw_slack >= n_ab**2 + n_ac**2,
        ones[1] ** 2 + ckw_slack >= n_ab**2 + n_bc**2,
        ones[2] ** 2 + ckw_slack >= n_ac**2 + n_bc**2,
    )
    return TangleReport(ones, twos, residuals, pi, ckw, method, truncation)


def numeric_report(
    params: ScenarioParams,
    eps_norm: float = EPS_NORM_DEFAULT,
    n_max_cap: int = N_MAX_CAP,
) -> TangleReport:
    """Build the scenario's density matrix and measure every tangle.

    Scalar scenarios use the dense pipeline while the reduced matrix
    stays small and the exact sparse block pipeline beyond that.
    """
    if params.field is FieldKind.DIRAC:
        return pi_tangle_numeric(rho_abc(build_fermion_state(params.alpha, params.r)))
    if params.n_max is not None:
        n_max = params.n_max
    else:
        from .rindler import adaptive_n_max

        n_max = adaptive_n_max(params.alpha, params.r, eps_norm, cap=n_max_cap)
    if 4 * (n_max + 2) <= DENSE_DIM_LIMIT:
        psi, report = build_boson_state(params.alpha, params.r, n_max, eps_norm)
        return pi_tangle_numeric(rho_abc(psi), truncation=report)
    reduced, report = boson_reduced_sparse(params.alpha, params.r, n_max, eps_norm)
    return pi_tangle_numeric(reduced, truncation=report)
