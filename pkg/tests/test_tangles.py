"""Numeric tangle oracle: one-tangles, two-tangles, pi-tangle reports."""

import math

import numpy as np
import pytest

from tritangle import (
    FieldKind,
    NumericalError,
    ScenarioParams,
    StateVector,
    SubsystemLayout,
    build_boson_state,
    build_fermion_state,
    numeric_report,
    one_tangle,
    outer,
    pi_tangle_numeric,
    rho_abc,
    two_tangle,
)
from tritangle.rindler import boson_reduced_sparse
from tritangle.tangles import _clamp

INV_SQRT2 = 1 / math.sqrt(2)


def dirac_rho(alpha, r):
    return rho_abc(build_fermion_state(alpha, r))


def test_one_tangles_inertial_maximal():
    rho = dirac_rho(INV_SQRT2, 0.0)
    for k in range(3):
        assert one_tangle(rho, k) == pytest.approx(1.0, abs=1e-12)


def test_one_tangle_accelerated_point():
    rho = dirac_rho(INV_SQRT2, math.pi / 4)
    assert one_tangle(rho, 0) == pytest.approx(INV_SQRT2, abs=1e-12)
    assert one_tangle(rho, 1) == pytest.approx(INV_SQRT2, abs=1e-12)


def test_one_tangle_product_state():
    rho = dirac_rho(0.0, 0.6)
    for k in range(3):
        assert abs(one_tangle(rho, k)) < 1e-13


def test_two_tangles_vanish_dirac():
    for alpha in (0.3, INV_SQRT2, 0.9):
        for r in (0.0, 0.5, math.pi / 4):
            rho = dirac_rho(alpha, r)
            for pair in ((0, 1), (0, 2), (1, 2)):
                assert abs(two_tangle(rho, pair)) < 1e-13


def test_two_tangles_vanish_scalar():
    psi, _ = build_boson_state(0.6, 0.9, n_max=32)
    rho = rho_abc(psi)
    for pair in ((0, 1), (0, 2), (1, 2)):
        assert abs(two_tangle(rho, pair)) < 1e-12


def test_two_tangle_bell_pair_anchor():
    # Bell pair on (A, B) with a spectator C
    amp = np.zeros(8, dtype=complex)
    amp[0] = amp[6] = INV_SQRT2  # |000> + |110>
    rho = outer(StateVector(SubsystemLayout((2, 2, 2)), amp))
    assert two_tangle(rho, (0, 1)) == pytest.approx(1.0, abs=1e-12)
    assert two_tangle(rho, (0, 2)) == pytest.approx(0.0, abs=1e-12)


def test_two_tangle_rejects_degenerate_pair():
    with pytest.raises(ValueError):
        two_tangle(dirac_rho(0.5, 0.1), (1, 1))


def test_pi_tangle_maximal_inertial():
    report = pi_tangle_numeric(dirac_rho(INV_SQRT2, 0.0))
    assert report.pi_tangle == pytest.approx(1.0, abs=1e-12)
    assert report.method == "numeric"
    assert all(report.ckw_ok)


def test_pi_tangle_maximal_accelerated_value():
    # frozen from this pipeline: exactly 5/12 at (1/sqrt2, pi/4)
    report = pi_tangle_numeric(dirac_rho(INV_SQRT2, math.pi / 4))
    assert report.pi_tangle == pytest.approx(5.0 / 12.0, abs=1e-12)


def test_pi_tangle_is_mean_of_residuals():
    report = pi_tangle_numeric(dirac_rho(0.4, 0.3))
    assert report.pi_tangle == sum(report.residuals) / 3.0


def test_pi_tangle_product_state():
    report = pi_tangle_numeric(dirac_rho(1.0, 0.5))
    assert report.pi_tangle == pytest.approx(0.0, abs=1e-12)
    assert max(abs(v) for v in report.one_tangles) < 1e-10


def test_clamp_policy():
    assert _clamp(-5e-11) == 0.0
    assert _clamp(0.25) == 0.25
    with pytest.raises(NumericalError):
        _clamp(-1e-6)


def test_inertial_symmetry_and_alpha_swap():
    for field, r in ((FieldKind.DIRAC, 0.6), (FieldKind.SCALAR, 1.1)):
        for alpha in (0.35, 1 / math.sqrt(5)):
            rep = numeric_report(ScenarioParams(field, alpha, r))
            assert rep.one_tangles[0] == pytest.approx(rep.one_tangles[1], abs=1e-10)

    # swapping alpha with its normalization partner keeps the inertial
    # tangle and moves the accelerated one
    alpha, partner = 1 / math.sqrt(5), 2 / math.sqrt(5)
    rep_a = numeric_report(ScenarioParams(FieldKind.DIRAC, alpha, 0.7))
    rep_b = numeric_report(ScenarioParams(FieldKind.DIRAC, partner, 0.7))
    assert rep_a.one_tangles[0] == pytest.approx(rep_b.one_tangles[0], abs=1e-12)
    assert abs(rep_a.one_tangles[2] - rep_b.one_tangles[2]) > 1e-3


def test_numeric_report_scalar_attaches_truncation():
    rep = numeric_report(ScenarioParams(FieldKind.SCALAR, 0.6, 0.5))
    assert rep.truncation is not None
    assert rep.truncation.meets_budget
    assert rep.method == "numeric"


def test_numeric_report_dense_sparse_agree():
    # same n_max forced through both pipelines
    for alpha, r in ((INV_SQRT2, 0.8), (0.3, 1.2)):
        psi, trunc = build_boson_state(alpha, r, n_max=24, eps_norm=1.0)
        dense_rep = pi_tangle_numeric(rho_abc(psi), truncation=trunc)
        sparse_op, trunc_s = boson_reduced_sparse(alpha, r, n_max=24, eps_norm=1.0)
        sparse_rep = pi_tangle_numeric(sparse_op, truncation=trunc_s)
        for a, b in zip(dense_rep.one_tangles, sparse_rep.one_tangles):
            assert a == pytest.approx(b, abs=1e-13)
        for a, b in zip(dense_rep.two_tangles, sparse_rep.two_tangles):
            assert a == pytest.approx(b, abs=1e-13)
        assert dense_rep.pi_tangle == pytest.approx(sparse_rep.pi_tangle, abs=1e-13)


def test_numeric_report_uses_sparse_for_large_truncations():
    rep = numeric_report(ScenarioParams(FieldKind.SCALAR, 0.5, 2.3))
    assert rep.truncation.n_max >= 512
    assert rep.truncation.meets_budget
    assert all(rep.ckw_ok)


def test_rejects_non_tripartite():
    bell = StateVector(SubsystemLayout((2, 2)), np.array([1, 0, 0, 1]) / math.sqrt(2))
    with pytest.raises(ValueError):
        one_tangle(outer(bell), 0)
