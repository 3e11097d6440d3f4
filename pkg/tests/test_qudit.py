"""Dense multipartite algebra: kets, reductions, transposes."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tritangle import (
    DensityMatrix,
    StateVector,
    SubsystemLayout,
    negativity,
    outer,
    partial_trace,
    partial_transpose,
    reduced_density_matrix,
    tensor,
)

from conftest import random_pure_state


def test_tensor_basis_kets():
    psi = tensor([(2, 0), (2, 0)])
    assert psi.amplitudes[0] == 1.0 and np.count_nonzero(psi.amplitudes) == 1

    psi = tensor([(2, 1), (3, 2)])
    assert psi.layout.total_dim == 6
    assert psi.amplitudes[5] == 1.0 and np.count_nonzero(psi.amplitudes) == 1

    psi = tensor([(2, 0), (2, 1), (2, 1), (2, 0)])
    assert psi.amplitudes[6] == 1.0 and np.count_nonzero(psi.amplitudes) == 1


def test_tensor_rejects_out_of_range_level():
    with pytest.raises(ValueError):
        tensor([(2, 2)])


def test_outer_examples():
    e0 = tensor([(2, 0)])
    assert np.allclose(outer(e0).entries, np.diag([1.0, 0.0]))

    plus = StateVector(SubsystemLayout((2,)), np.array([1, 1]) / math.sqrt(2))
    assert np.allclose(outer(plus).entries, np.full((2, 2), 0.5))


def test_outer_fermion_style_state_support():
    # alpha(cos r|0000> + sin r|0011>) + sqrt(1-alpha^2)|1110> at r=0:
    # only the |0000> and |1110> amplitudes survive.
    layout = SubsystemLayout((2, 2, 2, 2))
    amp = np.zeros(16, dtype=complex)
    amp[layout.flatten((0, 0, 0, 0))] = 1 / math.sqrt(2)
    amp[layout.flatten((1, 1, 1, 0))] = 1 / math.sqrt(2)
    rho = outer(StateVector(layout, amp))
    support = {i for i in range(16) if np.any(np.abs(rho.entries[i]) > 0)}
    assert support == {0, 14}
    eig = np.linalg.eigvalsh(rho.entries)
    assert np.sum(eig > 1e-12) == 1  # rank one


@given(
    dims=st.lists(st.integers(1, 5), min_size=1, max_size=4),
    data=st.data(),
)
def test_layout_index_roundtrip(dims, data):
    layout = SubsystemLayout(tuple(dims))
    index = data.draw(st.integers(0, layout.total_dim - 1))
    assert layout.flatten(layout.unflatten(index)) == index


def test_layout_rejects_bad_dims():
    with pytest.raises(ValueError):
        SubsystemLayout(())
    with pytest.raises(ValueError):
        SubsystemLayout((2, 0))


def test_partial_trace_two_qubit_example():
    rho = outer(tensor([(2, 0), (2, 0)]))
    reduced = partial_trace(rho, [0])
    assert reduced.layout.dims == (2,)
    assert np.allclose(reduced.entries, np.diag([1.0, 0.0]))


def test_partial_trace_reproduces_traced_fermion_matrix():
    # trace the hidden factor out of the r=pi/4 maximal state and check
    # every surviving coefficient
    alpha, r = 1 / math.sqrt(2), math.pi / 4
    layout = SubsystemLayout((2, 2, 2, 2))
    amp = np.zeros(16, dtype=complex)
    amp[layout.flatten((0, 0, 0, 0))] = alpha * math.cos(r)
    amp[layout.flatten((0, 0, 1, 1))] = alpha * math.sin(r)
    amp[layout.flatten((1, 1, 1, 0))] = math.sqrt(1 - alpha**2)
    rho = partial_trace(outer(StateVector(layout, amp)), keep=[0, 1, 2])

    expected = np.zeros((8, 8))
    expected[0, 0] = alpha**2 * math.cos(r) ** 2          # |000><000|
    expected[1, 1] = alpha**2 * math.sin(r) ** 2          # |001><001|
    expected[7, 7] = 1 - alpha**2                          # |111><111|
    expected[0, 7] = expected[7, 0] = alpha * math.sqrt(1 - alpha**2) * math.cos(r)
    assert np.allclose(rho.entries, expected, atol=1e-15)
    assert abs(expected[0, 0] - 0.25) < 1e-15
    assert abs(expected[1, 1] - 0.25) < 1e-15
    assert abs(expected[0, 7] - 1 / (2 * math.sqrt(2))) < 1e-15

    # tracing the accelerated party as well leaves a diagonal two-party state
    rho_ab = partial_trace(rho, keep=[0, 1])
    off = rho_ab.entries - np.diag(np.diag(rho_ab.entries))
    assert np.max(np.abs(off)) == 0.0


def test_partial_trace_validates_keep_set(rng):
    rho = outer(random_pure_state(rng, (2, 2)))
    with pytest.raises(ValueError):
        partial_trace(rho, [])
    with pytest.raises(ValueError):
        partial_trace(rho, [2])


def test_partial_trace_preserves_trace_and_hermiticity(rng):
    for _ in range(10):
        psi = random_pure_state(rng, (2, 3, 2))
        rho = outer(psi)
        keep = [int(k) for k in rng.choice(3, size=rng.integers(1, 3), replace=False)]
        reduced = partial_trace(rho, keep)
        assert abs(reduced.trace - rho.trace) < 1e-12
        assert np.allclose(reduced.entries, reduced.entries.conj().T)


def test_partial_trace_then_trace_commutes(rng):
    rho = outer(random_pure_state(rng, (2, 2, 3, 2)))
    stepwise = partial_trace(partial_trace(rho, [0, 1, 3]), [0, 1])
    combined = partial_trace(rho, [0, 1])
    assert np.allclose(stepwise.entries, combined.entries, atol=1e-14)


def test_partial_transpose_diagonal_fixed_point(rng):
    rho = DensityMatrix(SubsystemLayout((2, 2)), np.diag([0.4, 0.3, 0.2, 0.1]))
    for sub in (0, 1):
        assert np.array_equal(partial_transpose(rho, sub).entries, rho.entries)


def test_partial_transpose_involution_exact(rng):
    psi = random_pure_state(rng, (2, 3, 2))
    rho = outer(psi)
    for sub in range(3):
        pt = partial_transpose(rho, sub)
        assert np.array_equal(partial_transpose(pt, sub).entries, rho.entries)
        assert abs(pt.trace - rho.trace) < 1e-14
        eigsum = float(np.linalg.eigvalsh(pt.entries).sum())
        assert abs(eigsum - rho.trace) < 1e-12


def test_partial_transpose_on_product_is_factor_transpose(rng):
    a = random_pure_state(rng, (2,))
    b = random_pure_state(rng, (3,))
    amp = np.kron(a.amplitudes, b.amplitudes)
    rho = outer(StateVector(SubsystemLayout((2, 3)), amp))
    pt = partial_transpose(rho, 1)
    rho_a = np.outer(a.amplitudes, a.amplitudes.conj())
    rho_b = np.outer(b.amplitudes, b.amplitudes.conj())
    assert np.allclose(pt.entries, np.kron(rho_a, rho_b.T), atol=1e-15)
    assert negativity(rho, 1) < 1e-12


def test_partial_transpose_fermion_coherence_moves_blocks():
    # the |000><111| coherence of the traced fermionic matrix moves to
    # |100><011| under transposition of the first party
    layout = SubsystemLayout((2, 2, 2))
    mat = np.zeros((8, 8))
    mat[0, 0] = mat[7, 7] = 0.5
    mat[0, 7] = mat[7, 0] = 0.3
    pt = partial_transpose(DensityMatrix(layout, mat), 0)
    assert pt.entries[0, 7] == 0.0
    assert pt.entries[4, 3] == pytest.approx(0.3)
    assert pt.entries[3, 4] == pytest.approx(0.3)


def test_partial_transpose_invalid_subsystem(rng):
    rho = outer(random_pure_state(rng, (2, 2)))
    with pytest.raises(ValueError):
        partial_transpose(rho, 5)


def test_reduced_density_matrix_matches_outer_route(rng):
    for keep in ([0], [1], [0, 2], [0, 1, 2]):
        psi = random_pure_state(rng, (2, 3, 2))
        via_outer = partial_trace(outer(psi), keep)
        direct = reduced_density_matrix(psi, keep)
        assert direct.layout.dims == via_outer.layout.dims
        assert np.allclose(direct.entries, via_outer.entries, atol=1e-14)


def test_state_vector_norm_contract():
    layout = SubsystemLayout((2,))
    with pytest.raises(ValueError):
        StateVector(layout, np.array([0.5, 0.5]))
    StateVector(layout, np.array([0.6, 0.8]))
    # declared budget admits a deficit of that size
    StateVector(layout, np.array([0.6, 0.79999]), norm_budget=1e-4)


def test_density_matrix_symmetrizes_and_rejects():
    layout = SubsystemLayout((2,))
    near = np.array([[1.0, 1e-14], [0.0, 0.0]])
    rho = DensityMatrix(layout, near)
    assert np.allclose(rho.entries, rho.entries.conj().T)
    with pytest.raises(ValueError):
        DensityMatrix(layout, np.array([[1.0, 0.5], [0.0, 0.0]]))
