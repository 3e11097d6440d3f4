"""Closed-form tangles, evaluated directly from the analytic expressions.

These are the cross-check route for the brute-force pipeline in
``tangles``.  Two of the published expressions come in inequivalent
variants; in both cases the default is the variant the dense pipeline
confirms, and the other stays reachable through a ``variant`` flag:

* fermionic accelerated one-tangle -- the widely quoted form
  z - s + sqrt(z^2 + s^2) (z = alpha sqrt(1-alpha^2) cos r,
  s = alpha^2 sin^2 r) overshoots the actual negativity whenever
  s, z > 0; the correct block eigenvalue calculation gives
  sqrt(s^2 + 4 z^2) - s.  Variants: "consistent" (default) and
  "as_printed".

* bosonic accelerated one-tangle -- the series coefficient inside the
  square root is 2 alpha^2 (1-alpha^2) (n+2) / cosh^2 r; a plausible
  mis-derivation (dropping the block determinant) yields (n+1).
  Variants: "n_plus_2" (default) and "n_plus_1".

Scalar-field evaluations respect the soft cap r <= 5; the removable
r -> 0 singularities return their analytic limits below R_ZERO.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NumericalError
from .hermitian import TOL_SERIES, polylog_neg_half, sum_series
from .rindler import R_CAP_SCALAR, R_MAX_DIRAC, FieldKind, ScenarioParams
from .tangles import CKW_SLACK, TangleReport

# Below this the scalar expressions with sinh denominators switch to
# their r -> 0 limits.
R_ZERO = 1e-8

_R_SLACK = 1e-12


@dataclass(frozen=True)
class SpectrumTerm:
    """One ladder level of the accelerated-partition squared spectrum.

    lambda_plus/minus = (xi +- sqrt(eta + mu)) / 2 are eigenvalues of
    (rho^{T_C})(rho^{T_C})^dag; each 2x2 transpose block contributes
    one such pair.
    """

    n: int
    xi: float
    mu: float
    eta: float
    lambda_plus: float
    lambda_minus: float


def _check_dirac_domain(alpha: float, r: float) -> None:
    ScenarioParams(FieldKind.DIRAC, alpha, r)


def _check_scalar_domain(alpha: float, r: float) -> None:
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha!r}")
    if r < 0.0:
        raise ValueError(f"r must be nonnegative, got {r!r}")
    if r > R_CAP_SCALAR + _R_SLACK:
        raise NumericalError(
            f"scalar closed forms are capped at r={R_CAP_SCALAR} (series ratio too close to 1), got {r!r}"
        )


def fermion_one_tangle_inertial(alpha: float, r: float) -> float:
    """N_A(BC) = N_B(AC) = 2 alpha sqrt(1-alpha^2) cos r."""
    _check_dirac_domain(alpha, r)
    return 2.0 * alpha * math.sqrt(1.0 - alpha * alpha) * math.cos(r)


def fermion_one_tangle_accelerated(alpha: float, r: float, variant: str = "consistent") -> float:
    """One-tangle of the accelerated party for the fermionic field."""
    _check_dirac_domain(alpha, r)
    beta2 = 1.0 - alpha * alpha
    s = alpha * alpha * math.sin(r) ** 2
    z = alpha * math.sqrt(beta2) * math.cos(r)
    if variant == "consistent":
        return math.sqrt(s * s + 4.0 * z * z) - s
    if variant == "as_printed":
        return z - s + alpha * math.sqrt(beta2 * math.cos(r) ** 2 + alpha * alpha * math.sin(r) ** 4)
    raise ValueError(f"unknown variant {variant!r}")


def fermion_pi_tangle(alpha: float, r: float, variant: str = "consistent") -> float:
    """(2 N_A(BC)^2 + N_C(AB)^2) / 3; fermionic two-tangles vanish."""
    n_inertial = fermion_one_tangle_inertial(alpha, r)
    n_accel = fermion_one_tangle_accelerated(alpha, r, variant)
    return (2.0 * n_inertial**2 + n_accel**2) / 3.0


def boson_one_tangle_inertial(
    alpha: float,
    r: float,
    form: str = "polylog",
    tol_series: float = TOL_SERIES,
) -> float:
    """Inertial one-tangle for the scalar field.

    form="sum":     2 a sqrt(1-a^2) / cosh^3 r * sum sqrt(n+1) tanh^{2n} r
    form="polylog": 2 a sqrt(1-a^2) / (cosh r sinh^2 r) * Li_{-1/2}(tanh^2 r)

    The two are the same function (shift the summation index); both are
    kept because they converge through different code paths.
    """
    _check_scalar_domain(alpha, r)
    prefactor = 2.0 * alpha * math.sqrt(1.0 - alpha * alpha)
    if prefactor == 0.0:
        return 0.0
    if r < R_ZERO:
        return prefactor
    x = math.tanh(r) ** 2
    ch = math.cosh(r)
    if form == "sum":
        series = sum_series(lambda n: math.sqrt(n + 1.0) * x**n, tol_series)
        return prefactor / ch**3 * series.value
    if form == "polylog":
        return prefactor / (ch * math.sinh(r) ** 2) * polylog_neg_half(x, tol_series)
    raise ValueError(f"unknown form {form!r}")


def boson_spectrum_term(alpha: float, r: float, n: int) -> SpectrumTerm:
    """Ladder-level eigenvalue pair of the accelerated-partition square."""
    if r <= 0.0:
        raise ValueError(f"spectrum terms need r > 0, got {r!r}")
    _check_scalar_domain(alpha, r)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n!r}")
    aa, bb = alpha * alpha, 1.0 - alpha * alpha
    ch, sh, th = math.cosh(r), math.sinh(r), math.tanh(r)
    t4n = th ** (4 * n)
    t8n = th ** (8 * n)
    xi = t4n / ch**4 * (n * n * bb * bb / sh**4 + 2.0 * aa * bb * (n + 1) / ch**2 + aa * aa * th**4)
    mu = 4.0 * aa * bb * (n + 1) / ch**2 * t8n / ch**8 * (n * bb / sh**2 + aa * th**2) ** 2
    eta = t8n / ch**8 * (n * n * bb * bb / sh**4 - aa * aa * th**4) ** 2
    root = math.sqrt(eta + mu)
    return SpectrumTerm(n, xi, mu, eta, 0.5 * (xi + root), 0.5 * (xi - root))


def boson_one_tangle_accelerated(
    alpha: float,
    r: float,
    variant: str = "n_plus_2",
    tol_series: float = TOL_SERIES,
) -> float:
    """One-tangle of the accelerated party for the scalar field.

    -1 + alpha^2/cosh^2 r
       + sum_n tanh^{2n} r / cosh^2 r
         * sqrt(n^2 (1-a^2)^2 / sinh^4 r + 2 a^2 (1-a^2)(n+k) / cosh^2 r + a^4 tanh^4 r)

    with k = 2 for the default variant, k = 1 for the rejected one.
    """
    _check_scalar_domain(alpha, r)
    if variant == "n_plus_2":
        shift = 2.0
    elif variant == "n_plus_1":
        shift = 1.0
    else:
        raise ValueError(f"unknown variant {variant!r}")
    aa, bb = alpha * alpha, 1.0 - alpha * alpha
    if aa == 0.0 or bb == 0.0:
        return 0.0
    if r < R_ZERO:
        return 2.0 * alpha * math.sqrt(bb)
    x = math.tanh(r) ** 2
    ch2, sh2 = math.cosh(r) ** 2, math.sinh(r) ** 2
    th4 = math.tanh(r) ** 4

    def term(n: int) -> float:
        return (
            x**n
            / ch2
            * math.sqrt(n * n * bb * bb / sh2**2 + 2.0 * aa * bb * (n + shift) / ch2 + aa * aa * th4)
        )

    return -1.0 + aa / ch2 + sum_series(term, tol_series).value


def boson_one_tangle_from_spectrum(alpha: float, r: float, tol_series: float = TOL_SERIES) -> float:
    """Accelerated one-tangle re-derived from the eigenvalue ladder.

    alpha^2/cosh^2 r + sum_n (sqrt(lambda_n^+) + sqrt(lambda_n^-)) - 1;
    agrees with the n_plus_2 variant and with the dense pipeline, and
    serves as the third independent route in the verification suite.
    """
    _check_scalar_domain(alpha, r)
    aa, bb = alpha * alpha, 1.0 - alpha * alpha
    if aa == 0.0 or bb == 0.0:
        return 0.0
    if r < R_ZERO:
        return 2.0 * alpha * math.sqrt(bb)

    def term(n: int) -> float:
        st = boson_spectrum_term(alpha, r, n)
        return math.sqrt(max(st.lambda_plus, 0.0)) + math.sqrt(max(st.lambda_minus, 0.0))

    return aa / math.cosh(r) ** 2 + sum_series(term, tol_series).value - 1.0


def boson_pi_tangle(alpha: float, r: float, variant: str = "n_plus_2", tol_series: float = TOL_SERIES) -> float:
    """(2 N_A(BC)^2 + N_C(AB)^2) / 3; scalar two-tangles vanish."""
    n_inertial = boson_one_tangle_inertial(alpha, r, tol_series=tol_series)
    n_accel = boson_one_tangle_accelerated(alpha, r, variant, tol_series)
    return (2.0 * n_inertial**2 + n_accel**2) / 3.0


def closed_report(params: ScenarioParams, tol_series: float = TOL_SERIES) -> TangleReport:
    """TangleReport from the closed forms (two-tangles are identically 0).

    The two-party reductions are block diagonal for both fields, so the
    closed-form two-tangles are the constant 0; the numeric pipeline
    re-verifies this rather than assuming it.
    """
    if params.field is FieldKind.DIRAC:
        n_inertial = fermion_one_tangle_inertial(params.alpha, params.r)
        n_accel = fermion_one_tangle_accelerated(params.alpha, params.r)
    else:
        n_inertial = boson_one_tangle_inertial(params.alpha, params.r, tol_series=tol_series)
        n_accel = boson_one_tangle_accelerated(params.alpha, params.r, tol_series=tol_series)
    ones = (n_inertial, n_inertial, n_accel)
    residuals = (n_inertial**2, n_inertial**2, n_accel**2)
    pi = (residuals[0] + residuals[1] + residuals[2]) / 3.0
    ckw = tuple(v + CKW_SLACK >= 0.0 for v in residuals)
    return TangleReport(ones, (0.0, 0.0, 0.0), residuals, pi, ckw, "closed", None)
