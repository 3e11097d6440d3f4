"""Finite-dimensional multipartite state and operator algebra.

Kets, tensor products, density matrices, partial trace and partial
transpose over arbitrary subsystem layouts.  Flattened indices are
row-major over the ordered subsystem list (leftmost factor varies
slowest), so the product ket |a b c d> sits at index
((a*d_B + b)*d_C + c)*d_D + d.

Everything here is dense and immutable after construction; all
operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Relative Hermiticity tolerance; operator constructors symmetrize
# (M + M^dag)/2 after checking the asymmetry is below this.
TOL_HERM = 1e-12

# Slack applied on top of declared norm budgets to absorb rounding.
_NORM_SLACK = 1e-12


@dataclass(frozen=True)
class SubsystemLayout:
    """Ordered subsystem dimensions defining the tensor-factor structure."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise ValueError("layout needs at least one subsystem")
        if any(d < 1 for d in dims):
            raise ValueError(f"subsystem dimensions must be >= 1, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    def flatten(self, levels: Sequence[int]) -> int:
        """Row-major flat index of a product-basis label."""
        if len(levels) != len(self.dims):
            raise ValueError("level count does not match layout")
        index = 0
        for level, dim in zip(levels, self.dims):
            if not 0 <= level < dim:
                raise ValueError(f"level {level} out of range for dimension {dim}")
            index = index * dim + level
        return index

    def unflatten(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.total_dim:
            raise ValueError(f"index {index} out of range")
        levels = []
        for dim in reversed(self.dims):
            levels.append(index % dim)
            index //= dim
        return tuple(reversed(levels))

    def subset(self, keep: Iterable[int]) -> "SubsystemLayout":
        """Layout of the kept subsystems, in original order."""
        keep = _checked_subset(keep, self.n_subsystems)
        return SubsystemLayout(tuple(self.dims[i] for i in keep))


@dataclass(frozen=True)
class StateVector:
    """Pure state over a layout.

    ``norm_budget`` declares how much squared norm the construction is
    allowed to have lost (0 for exact states); the constructor enforces
    ||psi||^2 in [1 - budget, 1] up to rounding slack.
    """

    layout: SubsystemLayout
    amplitudes: np.ndarray
    norm_budget: float = 0.0

    def __post_init__(self):
        amp = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amp.shape != (self.layout.total_dim,):
            raise ValueError(
                f"amplitude vector has shape {amp.shape}, layout needs ({self.layout.total_dim},)"
            )
        sq = float(np.vdot(amp, amp).real)
        lo = 1.0 - self.norm_budget - _NORM_SLACK
        hi = 1.0 + _NORM_SLACK
        if not lo <= sq <= hi:
            raise ValueError(
                f"squared norm {sq!r} outside [{lo!r}, {hi!r}] for norm budget {self.norm_budget!r}"
            )
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @property
    def squared_norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian operator over a layout (unit trace for physical states).

    Construction symmetrizes (M + M^dag)/2 after checking the input is
    Hermitian within TOL_HERM relative to its max entry.  Partial
    transposes are representable here too (Hermitian, possibly not PSD).
    """

    layout: SubsystemLayout
    entries: np.ndarray

    def __post_init__(self):
        mat = np.ascontiguousarray(self.entries, dtype=np.complex128)
        d = self.layout.total_dim
        if mat.shape != (d, d):
            raise ValueError(f"matrix shape {mat.shape} does not match layout dimension {d}")
        _check_hermitian(mat)
        mat = (mat + mat.conj().T) / 2.0
        mat.setflags(write=False)
        object.__setattr__(self, "entries", mat)

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)


def _check_hermitian(mat: np.ndarray, tol: float = TOL_HERM) -> None:
    scale = float(np.max(np.abs(mat))) if mat.size else 0.0
    if scale == 0.0:
        return
    asym = float(np.max(np.abs(mat - mat.conj().T)))
    if asym > tol * scale:
        raise ValueError(f"matrix is not Hermitian: asymmetry {asym:.3e} vs scale {scale:.3e}")


def _checked_subset(indices: Iterable[int], n: int) -> tuple[int, ...]:
    idx = sorted({int(i) for i in indices})
    if not idx:
        raise ValueError("subsystem set must be nonempty")
    if idx[0] < 0 or idx[-1] >= n:
        raise ValueError(f"subsystem indices {idx} out of range for {n} subsystems")
    return tuple(idx)


def tensor(kets: Sequence[tuple[int, int]]) -> StateVector:
    """Computational-basis product ket from (dimension, level) pairs."""
    if not kets:
        raise ValueError("need at least one factor")
    layout = SubsystemLayout(tuple(dim for dim, _ in kets))
    amp = np.zeros(layout.total_dim, dtype=np.complex128)
    amp[layout.flatten([level for _, level in kets])] = 1.0
    return StateVector(layout, amp)


def outer(psi: StateVector) -> DensityMatrix:
    """|psi><psi| as a DensityMatrix (trace = squared norm of psi)."""
    return DensityMatrix(psi.layout, np.outer(psi.amplitudes, psi.amplitudes.conj()))


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every subsystem not in ``keep`` (kept dims keep their order)."""
    n = rho.layout.n_subsystems
    keep_idx = _checked_subset(keep, n)
    traced = [i for i in range(n) if i not in keep_idx]
    dims = list(rho.layout.dims)
    tensor_form = rho.entries.reshape(dims + dims)
    for idx in sorted(traced, reverse=True):
        tensor_form = np.trace(tensor_form, axis1=idx, axis2=idx + len(dims))
        dims.pop(idx)
    d = int(np.prod(dims))
    return DensityMatrix(SubsystemLayout(tuple(dims)), tensor_form.reshape(d, d))


def partial_transpose(rho: DensityMatrix, subsystems: int | Iterable[int]) -> DensityMatrix:
    """Transpose the listed subsystems (an involution; preserves trace)."""
    if isinstance(subsystems, (int, np.integer)):
        subsystems = (int(subsystems),)
    n = rho.layout.n_subsystems
    subs = _checked_subset(subsystems, n)
    dims = list(rho.layout.dims)
    tensor_form = rho.entries.reshape(dims + dims)
    for s in subs:
        tensor_form = np.swapaxes(tensor_form, s, s + n)
    d = rho.layout.total_dim
    return DensityMatrix(rho.layout, np.ascontiguousarray(tensor_form.reshape(d, d)))


def reduced_density_matrix(psi: StateVector, keep: Iterable[int]) -> DensityMatrix:
    """Partial trace of |psi><psi| without materializing the outer product.

    Reshapes the amplitudes into a (kept, traced) matrix G and returns
    G G^dag; equivalent to partial_trace(outer(psi), keep) but linear in
    the state size on the traced side.
    """
    n = psi.layout.n_subsystems
    keep_idx = _checked_subset(keep, n)
    traced = [i for i in range(n) if i not in keep_idx]
    tensor_form = psi.amplitudes.reshape(psi.layout.dims)
    tensor_form = np.moveaxis(tensor_form, keep_idx, range(len(keep_idx)))
    d_keep = int(np.prod([psi.layout.dims[i] for i in keep_idx]))
    d_traced = int(np.prod([psi.layout.dims[i] for i in traced])) if traced else 1
    g = np.ascontiguousarray(tensor_form.reshape(d_keep, d_traced))
    return DensityMatrix(psi.layout.subset(keep_idx), g @ g.conj().T)
