"""Dense complex linear algebra for small tensor-product Hilbert spaces.

All data lives in plain numpy arrays (complex128, row-major).  The spaces
handled here are tiny (total dimension <= 16), so clarity wins over
vectorisation: the partial trace in particular is written as explicit sums
over kept and traced index tuples instead of reshape tricks, which makes the
index bookkeeping auditable and mirrors the multi-index sums used by the
entropy measures.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadSubsystemIndex,
    DimensionMismatch,
    NormNotPreserved,
    NotNormalized,
)

# Norm tolerance for state vectors; tighter tolerance for matrix identities.
STATE_NORM_TOL = 1e-10
MATRIX_TOL = 1e-12

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def _freeze(a: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(a)
    out.setflags(write=False)
    return out


def _check_finite(a: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{what} contains NaN or Inf entries")


@dataclass(frozen=True)
class StateVector:
    """Unit-norm amplitudes over a tensor product of finite factors.

    ``dims`` lists the factor dimensions in order; ``amplitudes`` is the flat
    row-major vector of length prod(dims).  Construction validates the shape
    and that the 2-norm equals 1 within ``STATE_NORM_TOL``.
    """

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise DimensionMismatch(f"factor dimensions must be >= 1, got {dims}")
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != math.prod(dims):
            raise DimensionMismatch(
                f"amplitude vector has length {amps.size}, dims {dims} need {math.prod(dims)}"
            )
        _check_finite(amps, "state vector")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > STATE_NORM_TOL:
            raise NotNormalized(f"state norm is {norm!r}, not 1 within {STATE_NORM_TOL}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", _freeze(amps))

    @property
    def dim(self) -> int:
        return self.amplitudes.size


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace matrix over a tensor product of finite factors.

    Construction validates Hermiticity and trace within ``MATRIX_TOL`` and
    that the purity lies in [1/d, 1] up to a small slack.
    """

    dims: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise DimensionMismatch(f"factor dimensions must be >= 1, got {dims}")
        d = math.prod(dims)
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (d, d):
            raise DimensionMismatch(f"matrix shape {m.shape} does not match dims {dims}")
        _check_finite(m, "density matrix")
        if np.max(np.abs(m - m.conj().T)) > MATRIX_TOL:
            raise ValueError("density matrix is not Hermitian within tolerance")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > MATRIX_TOL:
            raise ValueError(f"density matrix trace is {tr!r}, not 1 within {MATRIX_TOL}")
        pur = float(np.real(np.trace(m @ m)))
        if pur < 1.0 / d - STATE_NORM_TOL or pur > 1.0 + STATE_NORM_TOL:
            raise ValueError(f"purity {pur!r} outside [1/{d}, 1]")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrix", _freeze(m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the row-major block convention."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=complex).conj().T


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def apply(a: np.ndarray, psi: StateVector) -> StateVector:
    """Apply a square operator to a state, demanding that the norm survives.

    Raises NormNotPreserved if the output norm deviates from 1 beyond
    ``STATE_NORM_TOL``; otherwise the tiny float drift is renormalised away.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[1] != psi.dim:
        raise DimensionMismatch(
            f"operator shape {a.shape} does not act on a state of dimension {psi.dim}"
        )
    out = a @ psi.amplitudes
    norm = float(np.linalg.norm(out))
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise NormNotPreserved(f"output norm {norm!r} deviates from 1 beyond {STATE_NORM_TOL}")
    return StateVector(psi.dims, out / norm)


def outer(psi: StateVector) -> DensityMatrix:
    """Rank-1 projector |psi><psi| as a density matrix."""
    v = psi.amplitudes
    n2 = float(np.real(np.vdot(v, v)))
    if abs(math.sqrt(n2) - 1.0) > STATE_NORM_TOL:
        raise NotNormalized(f"cannot project a vector of norm {math.sqrt(n2)!r}")
    return DensityMatrix(psi.dims, np.outer(v, v.conj()) / n2)


def _strides(dims: tuple[int, ...]) -> list[int]:
    # Row-major: the last factor varies fastest.
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    return strides


def partial_trace(rho: DensityMatrix, keep: set[int] | frozenset[int]) -> DensityMatrix:
    """Trace out every factor not in ``keep``, preserving factor order.

    Written as explicit sums over kept index pairs and traced index tuples:

        out[I, J] = sum_T rho[(I, T), (J, T)]

    where I, J run over the kept multi-indices and T over the traced ones.
    """
    keep_list = sorted(keep)
    n = len(rho.dims)
    if not keep_list:
        raise BadSubsystemIndex("keep-set is empty")
    if len(keep_list) != len(set(keep_list)):
        raise BadSubsystemIndex(f"keep-set {keep_list} has repeated indices")
    if keep_list[0] < 0 or keep_list[-1] >= n:
        raise BadSubsystemIndex(f"keep-set {keep_list} out of range for {n} factors")

    dims = rho.dims
    m = rho.matrix
    strides = _strides(dims)
    traced = [i for i in range(n) if i not in keep_list]
    kept_dims = tuple(dims[i] for i in keep_list)

    kept_tuples = list(itertools.product(*(range(dims[i]) for i in keep_list)))
    traced_offsets = [
        sum(strides[pos] * t for pos, t in zip(traced, tup))
        for tup in itertools.product(*(range(dims[i]) for i in traced))
    ]

    d_out = math.prod(kept_dims)
    out = np.zeros((d_out, d_out), dtype=complex)
    for row, ktup_i in enumerate(kept_tuples):
        base_i = sum(strides[pos] * v for pos, v in zip(keep_list, ktup_i))
        for col, ktup_j in enumerate(kept_tuples):
            base_j = sum(strides[pos] * v for pos, v in zip(keep_list, ktup_j))
            acc = 0.0 + 0.0j
            for off in traced_offsets:
                acc += m[base_i + off, base_j + off]
            out[row, col] = acc
    return DensityMatrix(kept_dims, out)


def purity(rho: DensityMatrix) -> float:
    """Tr rho^2 as a real number."""
    return float(np.real(np.trace(rho.matrix @ rho.matrix)))
