"""Hermitian spectra, trace norm, negativity, and convergent series summation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import NumericalError
from .qudit import TOL_HERM, DensityMatrix, partial_transpose

# Residual contract for reported eigenpairs, relative to the matrix max-norm.
TOL_EIG = 1e-12

# Default relative stop tolerance for series summation.
TOL_SERIES = 1e-14

# Ceiling on summed terms; tanh^2(r) ratios near the r<=5 cap need ~2e5 terms.
MAX_TERMS = 1_000_000


@dataclass(frozen=True)
class EigenResult:
    """Ascending real spectrum plus the worst eigenpair residual max||Mv - lv||."""

    eigenvalues: np.ndarray
    residual: float


@dataclass(frozen=True)
class SeriesSum:
    value: float
    terms_used: int
    tail_estimate: float


def _as_matrix(matrix: DensityMatrix | np.ndarray) -> np.ndarray:
    if isinstance(matrix, DensityMatrix):
        return matrix.entries
    return np.asarray(matrix, dtype=np.complex128)


def eigenvalues_hermitian(matrix: DensityMatrix | np.ndarray, tol_herm: float = TOL_HERM) -> EigenResult:
    """Full real spectrum of a Hermitian matrix, ascending, with residual check."""
    mat = _as_matrix(matrix)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    scale = float(np.max(np.abs(mat))) if mat.size else 0.0
    if scale > 0.0:
        asym = float(np.max(np.abs(mat - mat.conj().T)))
        if asym > tol_herm * scale:
            raise ValueError(f"matrix is not Hermitian: asymmetry {asym:.3e} vs scale {scale:.3e}")
    sym = (mat + mat.conj().T) / 2.0
    values, vectors = np.linalg.eigh(sym)
    residual = float(np.max(np.linalg.norm(sym @ vectors - vectors * values, axis=0))) if mat.size else 0.0
    values.setflags(write=False)
    return EigenResult(values, residual)


def trace_norm(matrix: DensityMatrix | np.ndarray) -> float:
    """Sum of absolute eigenvalues (Hermitian input only)."""
    return float(np.sum(np.abs(eigenvalues_hermitian(matrix).eigenvalues)))


def negativity(rho: DensityMatrix, subsystem: int | Iterable[int]) -> float:
    """Trace norm of the partial transpose minus the trace.

    Nonnegative up to eigensolver noise; 0 for PPT states.  Callers that
    need exact zeros clamp the tiny negative residue themselves.
    """
    return trace_norm(partial_transpose(rho, subsystem)) - rho.trace


def polylog_neg_half(x: float, tol_series: float = TOL_SERIES, max_terms: int = 5_000_000) -> float:
    """Sum_{k>=1} sqrt(k) x^k for 0 <= x < 1 (order -1/2 polylogarithm).

    Terms are summed in growing chunks until the latest term drops below
    tol_series times the partial sum; diverges at x = 1, hence the open
    domain.
    """
    if not 0.0 <= x:
        raise ValueError(f"x must be nonnegative, got {x!r}")
    if x >= 1.0:
        raise ValueError(f"series diverges for x >= 1, got {x!r}")
    if x == 0.0:
        return 0.0
    total = 0.0
    k0 = 1
    chunk = 2048
    while k0 <= max_terms:
        k = np.arange(k0, min(k0 + chunk, max_terms + 1), dtype=np.float64)
        terms = np.sqrt(k) * np.power(x, k)
        total += float(terms.sum())
        if terms[-1] < tol_series * total:
            return total
        k0 += len(k)
        chunk = min(chunk * 2, 1 << 20)
    raise NumericalError(
        f"polylog series did not converge within {max_terms} terms at x={x!r}"
    )


def sum_series(
    term: Callable[[int], float],
    tol_series: float = TOL_SERIES,
    max_terms: int = MAX_TERMS,
) -> SeriesSum:
    """Sum term(0) + term(1) + ... until |term| <= tol_series * |partial sum|.

    Assumes the terms are eventually monotonically decreasing in magnitude
    (growth before a peak is fine).  The reported tail estimate is the
    geometric bound |t_n| * rho / (1 - rho) from the last ratio.  A series
    whose *first* term is exactly zero terminates immediately; shift the
    index if leading zeros are meaningful.
    """
    total = 0.0
    prev_mag = None
    for n in range(max_terms):
        t = float(term(n))
        total += t
        mag = abs(t)
        if mag <= tol_series * abs(total):
            if prev_mag and mag < prev_mag:
                ratio = mag / prev_mag
                tail = mag * ratio / (1.0 - ratio)
            else:
                tail = mag
            return SeriesSum(total, n + 1, tail)
        prev_mag = mag
    raise NumericalError(
        f"series did not converge within {max_terms} terms "
        f"(last term {t!r}, partial sum {total!r})"
    )
