"""Tripartite states seen from a uniformly accelerated observer.

Three parties share a GHZ-type state alpha|000> + sqrt(1-alpha^2)|111>.
When the third party (subsystem C) accelerates uniformly, its mode is
re-expressed in the two causally disconnected Rindler wedges; the state
picks up a fourth tensor factor (the hidden wedge) which is traced out
to get the observable three-party density matrix.  Subsystem order is
always (A, B, C-accessible, C-hidden) before the trace and (A, B, C)
after it.

The mixing angle r is dimensionless and monotone in the proper
acceleration a at fixed mode frequency:

    fermionic field:  cos r  = (1 + e^{-2 pi omega c / a})^{-1/2},  r in [0, pi/4]
    scalar field:     cosh r = (1 - e^{-2 pi omega c / a})^{-1/2},  r in [0, inf)

The fermionic construction is exact in a 2x2x2x2 space.  The scalar one
lives on a Fock ladder and is truncated at n_max with an explicit norm
budget; truncation reports carry the analytic tail bounds used for
error budgeting downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import TruncationError
from .qudit import DensityMatrix, StateVector, SubsystemLayout, reduced_density_matrix
from .sparse_ops import SparseOperator, pure_reduction

R_MAX_DIRAC = math.pi / 4
R_CAP_SCALAR = 5.0          # soft cap documented for all scalar-field operations
EPS_NORM_DEFAULT = 1e-10
N_MAX_START = 16
N_MAX_CAP = 1 << 18

_R_SLACK = 1e-12


class FieldKind(str, Enum):
    DIRAC = "dirac"
    SCALAR = "scalar"


@dataclass(frozen=True)
class ScenarioParams:
    """Field kind, entanglement amplitude alpha, mixing angle r, truncation."""

    field: FieldKind
    alpha: float
    r: float
    n_max: int | None = None    # scalar only; None = adaptive

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha!r}")
        if self.r < 0.0:
            raise ValueError(f"r must be nonnegative, got {self.r!r}")
        if self.field is FieldKind.DIRAC and self.r > R_MAX_DIRAC + _R_SLACK:
            raise ValueError(f"fermionic r is capped at pi/4, got {self.r!r}")
        if self.field is FieldKind.SCALAR and self.r > R_CAP_SCALAR + _R_SLACK:
            raise ValueError(f"scalar r is capped at {R_CAP_SCALAR}, got {self.r!r}")
        if self.n_max is not None and self.n_max < 1:
            raise ValueError(f"n_max must be positive, got {self.n_max!r}")


@dataclass(frozen=True)
class TruncationReport:
    """Achieved truncation quality for a scalar-field build.

    norm_deficit is 1 - ||psi||^2 of the truncated state; tail_bound
    additionally bounds the truncation error of every reported tangle
    (always >= norm_deficit).
    """

    n_max: int
    norm_deficit: float
    tail_bound: float
    eps_norm: float

    @property
    def meets_budget(self) -> bool:
        return self.norm_deficit <= self.eps_norm


def r_from_acceleration(field: FieldKind, a: float, omega: float = 1.0, c: float = 1.0) -> float:
    """Mixing angle r for proper acceleration a at mode frequency omega."""
    if omega <= 0.0 or c <= 0.0:
        raise ValueError("omega and c must be positive")
    if a < 0.0:
        raise ValueError(f"acceleration must be nonnegative, got {a!r}")
    if a == 0.0:
        return 0.0
    y = 2.0 * math.pi * omega * c / a
    if field is FieldKind.DIRAC:
        return math.acos((1.0 + math.exp(-y)) ** -0.5)
    # 1 - e^{-y} via expm1 keeps precision when a is large (y small)
    return float(np.arccosh((-math.expm1(-y)) ** -0.5))


def build_fermion_state(alpha: float, r: float) -> StateVector:
    """Four-qubit state alpha(cos r|0000> + sin r|0011>) + sqrt(1-alpha^2)|1110>."""
    ScenarioParams(FieldKind.DIRAC, alpha, r)
    layout = SubsystemLayout((2, 2, 2, 2))
    amp = np.zeros(16, dtype=np.complex128)
    beta = math.sqrt(1.0 - alpha * alpha)
    amp[layout.flatten((0, 0, 0, 0))] = alpha * math.cos(r)
    amp[layout.flatten((0, 0, 1, 1))] = alpha * math.sin(r)
    amp[layout.flatten((1, 1, 1, 0))] = beta
    return StateVector(layout, amp)


def _boson_weights(alpha: float, r: float, n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Amplitudes of the |00 n n> and |11 n+1 n> branches for n = 0..n_max."""
    beta = math.sqrt(1.0 - alpha * alpha)
    t, ch = math.tanh(r), math.cosh(r)
    n = np.arange(n_max + 1, dtype=np.float64)
    tn = np.power(t, n)
    return alpha * tn / ch, np.sqrt(n + 1.0) * beta * tn / ch**2


def boson_norm_tail(alpha: float, r: float, n_max: int) -> float:
    """Exact squared-norm mass of the omitted n > n_max terms."""
    x = math.tanh(r) ** 2
    if x == 0.0:
        return 0.0
    m = n_max + 1
    return x**m * (alpha**2 + (1.0 - alpha**2) * ((m + 1) - m * x))


def boson_tail_bound(alpha: float, r: float, n_max: int) -> float:
    """Bound on the truncation error of the norm and of every one-tangle.

    Geometric-sum majorants of the omitted series terms; sqrt(n+1) and
    sqrt(n+2) factors are bounded linearly, which is loose by a root
    factor but still decays with the same ratio tanh^2 r.
    """
    x = math.tanh(r) ** 2
    if x == 0.0:
        return 0.0
    aa, bb = alpha**2, 1.0 - alpha**2
    ch, sh, th = math.cosh(r), math.sinh(r), math.tanh(r)
    m = n_max + 1
    one_minus = 1.0 - x
    s0 = x**m / one_minus
    s1 = x**m * ((m + 1) - m * x) / one_minus**2
    sn = x**m * (m - (m - 1) * x) / one_minus**2
    norm_tail = boson_norm_tail(alpha, r, n_max)
    tail_inertial = 2.0 * alpha * math.sqrt(bb) / ch**3 * s1
    tail_accel = (bb / sh**2 * sn + aa * th**2 * s0 + math.sqrt(2.0 * aa * bb) / ch * (s1 + s0)) / ch**2
    return max(norm_tail, tail_inertial, tail_accel)


def adaptive_n_max(
    alpha: float,
    r: float,
    eps_norm: float = EPS_NORM_DEFAULT,
    start: int = N_MAX_START,
    cap: int = N_MAX_CAP,
) -> int:
    """Smallest doubling truncation whose tail bound clears eps_norm."""
    n = start
    while boson_tail_bound(alpha, r, n) > eps_norm:
        if n >= cap:
            required = n
            while boson_tail_bound(alpha, r, required) > eps_norm:
                required *= 2
            raise TruncationError(
                f"n_max cap {cap} cannot reach eps_norm={eps_norm!r} at r={r!r}; "
                f"needs about n_max={required}",
                n_max_required=required,
            )
        n *= 2
    return n


def _boson_truncation(alpha, r, n_max, eps_norm, n_max_cap, strict):
    if n_max is None:
        n_max = adaptive_n_max(alpha, r, eps_norm, cap=n_max_cap)
    elif strict and boson_norm_tail(alpha, r, n_max) > eps_norm:
        raise TruncationError(
            f"n_max={n_max} leaves norm deficit {boson_norm_tail(alpha, r, n_max):.3e} "
            f"> eps_norm={eps_norm!r}; needs about n_max={adaptive_n_max(alpha, r, eps_norm)}",
            n_max_required=adaptive_n_max(alpha, r, eps_norm),
        )
    return n_max


def build_boson_state(
    alpha: float,
    r: float,
    n_max: int | None = None,
    eps_norm: float = EPS_NORM_DEFAULT,
    n_max_cap: int = N_MAX_CAP,
    strict: bool = False,
) -> tuple[StateVector, TruncationReport]:
    """Truncated scalar-field state over layout (2, 2, n_max+2, n_max+1).

    The C-accessible factor needs one extra level because the excited
    branch populates |n+1>.  With n_max=None the truncation is chosen
    adaptively (doubling from 16) so the tail bound clears eps_norm;
    with an explicit n_max the achieved deficit is reported, and flagged
    through TruncationReport.meets_budget (or raised when strict=True).
    """
    ScenarioParams(FieldKind.SCALAR, alpha, r)
    n_max = _boson_truncation(alpha, r, n_max, eps_norm, n_max_cap, strict)
    d_acc, d_hidden = n_max + 2, n_max + 1
    layout = SubsystemLayout((2, 2, d_acc, d_hidden))
    w0, w1 = _boson_weights(alpha, r, n_max)
    amp = np.zeros(layout.total_dim, dtype=np.complex128)
    n = np.arange(n_max + 1)
    amp[((0 * 2 + 0) * d_acc + n) * d_hidden + n] = w0
    amp[((1 * 2 + 1) * d_acc + n + 1) * d_hidden + n] = w1
    deficit = max(0.0, 1.0 - float(w0 @ w0 + w1 @ w1))
    tail = max(boson_tail_bound(alpha, r, n_max), deficit)
    report = TruncationReport(n_max, deficit, tail, eps_norm)
    return StateVector(layout, amp, norm_budget=max(deficit, boson_norm_tail(alpha, r, n_max))), report


def boson_reduced_sparse(
    alpha: float,
    r: float,
    n_max: int | None = None,
    eps_norm: float = EPS_NORM_DEFAULT,
    n_max_cap: int = N_MAX_CAP,
    strict: bool = False,
) -> tuple[SparseOperator, TruncationReport]:
    """Hidden-wedge-traced scalar density matrix, built sparsely.

    Same physics as rho_abc(build_boson_state(...)[0]) but linear in
    n_max, for truncations where a dense matrix is impractical.
    """
    ScenarioParams(FieldKind.SCALAR, alpha, r)
    n_max = _boson_truncation(alpha, r, n_max, eps_norm, n_max_cap, strict)
    d_acc, d_hidden = n_max + 2, n_max + 1
    layout = SubsystemLayout((2, 2, d_acc))
    w0, w1 = _boson_weights(alpha, r, n_max)
    n = np.arange(n_max + 1)
    kept = np.concatenate([(0 * 2 + 0) * d_acc + n, (1 * 2 + 1) * d_acc + n + 1])
    hidden = np.concatenate([n, n])
    amps = np.concatenate([w0, w1]).astype(np.complex128)
    deficit = max(0.0, 1.0 - float(w0 @ w0 + w1 @ w1))
    tail = max(boson_tail_bound(alpha, r, n_max), deficit)
    report = TruncationReport(n_max, deficit, tail, eps_norm)
    return pure_reduction(kept, hidden, amps, layout, d_hidden), report


def rho_abc(psi: StateVector) -> DensityMatrix:
    """Observable three-party density matrix: trace out the last factor."""
    n = psi.layout.n_subsystems
    if n < 2:
        raise ValueError("state must have at least two subsystems")
    return reduced_density_matrix(psi, keep=range(n - 1))
