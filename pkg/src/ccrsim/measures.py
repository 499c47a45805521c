"""Predictability, coherence, and entropy: the complete complementarity triple.

For the reduced state rho of a single d-dimensional degree of freedom inside
a pure global state, the three quantifiers

    P_l = sum_i rho_ii^2 - 1/d          (predictability)
    C_hs = sum_{i != j} |rho_ij|^2      (Hilbert-Schmidt coherence)
    S_l = 1 - Tr rho^2                  (linear entropy)

are measured in the incoherent (computational) basis and obey the identity

    P_l + C_hs + S_l = (d - 1) / d

for every subsystem of every pure state.  Each term alone is basis- and
frame-dependent; the sum is not.

``linear_entropy_multiindex`` evaluates S_l of factor 1 of a pure state
straight from global matrix elements:

    S_l = sum_{i1 != j1} sum_{I != J} ( |rho_{i1 I, j1 J}|^2
                                        - rho_{i1 I, j1 I} rho*_{i1 J, j1 J} )

with I, J multi-indices over the remaining factors.  It never builds the
reduced matrix, so it serves as an independent route against
``1 - purity(partial_trace(...))``; the two must agree to 1e-12.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadSubsystemIndex,
    DimensionMismatch,
    GlobalStateNotPure,
    NotXShaped,
)
from .linalg import DensityMatrix, StateVector, outer, partial_trace, purity
from .states import MultipartiteState

# |norm^2 - 1| beyond this means the global state cannot be treated as pure.
PURITY_TOL = 1e-10

_X_TOL = 1e-10


def _as_state_vector(state: MultipartiteState | StateVector) -> StateVector:
    return state.amplitudes if isinstance(state, MultipartiteState) else state


def _checked_pure(state: MultipartiteState | StateVector) -> StateVector:
    sv = _as_state_vector(state)
    norm_sq = float(np.real(np.vdot(sv.amplitudes, sv.amplitudes)))
    if abs(norm_sq - 1.0) > PURITY_TOL:
        raise GlobalStateNotPure(f"squared norm {norm_sq!r} deviates from 1")
    return sv


@dataclass(frozen=True)
class ComplementarityTriple:
    """One subsystem's (P_l, C_hs, S_l) with the identity residual."""

    predictability: float
    coherence: float
    entropy: float
    d: int
    residual: float

    @property
    def total(self) -> float:
        return self.predictability + self.coherence + self.entropy


def predictability_l(rho: DensityMatrix) -> float:
    """P_l = sum_i rho_ii^2 - 1/d."""
    diag = np.real(np.diag(rho.matrix))
    return float(np.sum(diag * diag)) - 1.0 / rho.dim


def coherence_hs(rho: DensityMatrix) -> float:
    """C_hs = sum over off-diagonal entries of |rho_ij|^2."""
    m = rho.matrix
    off = np.abs(m) ** 2
    return float(np.sum(off) - np.sum(np.diag(off)))


def linear_entropy(rho: DensityMatrix) -> float:
    """S_l = 1 - Tr rho^2."""
    return 1.0 - purity(rho)


def ccr(state: MultipartiteState | StateVector, subsystem: int) -> ComplementarityTriple:
    """Complementarity triple of one single-factor subsystem of a pure state."""
    sv = _checked_pure(state)
    n = len(sv.dims)
    if not 0 <= subsystem < n:
        raise BadSubsystemIndex(f"subsystem {subsystem} out of range for {n} factors")
    rho = partial_trace(outer(sv), {subsystem})
    p = predictability_l(rho)
    c = coherence_hs(rho)
    s = linear_entropy(rho)
    d = rho.dim
    residual = abs(p + c + s - (d - 1.0) / d)
    return ComplementarityTriple(p, c, s, d, residual)


def _strides(dims: tuple[int, ...]) -> list[int]:
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    return strides


def linear_entropy_multiindex(state: MultipartiteState | StateVector, subsystem: int) -> float:
    """S_l of one factor evaluated as the literal double multi-index sum.

    Works directly on amplitude products rho_{A,B} = v_A conj(v_B); no reduced
    matrix and no partial trace are involved.
    """
    sv = _as_state_vector(state)
    dims = sv.dims
    if not 0 <= subsystem < len(dims):
        raise BadSubsystemIndex(f"subsystem {subsystem} out of range for {len(dims)} factors")
    v = sv.amplitudes
    strides = _strides(dims)
    rest = [k for k in range(len(dims)) if k != subsystem]
    s_stride = strides[subsystem]
    rest_offsets = [
        sum(strides[pos] * t for pos, t in zip(rest, tup))
        for tup in itertools.product(*(range(dims[k]) for k in rest))
    ]

    def rho(row: int, col: int) -> complex:
        return v[row] * np.conj(v[col])

    total = 0.0 + 0.0j
    for i1 in range(dims[subsystem]):
        for j1 in range(dims[subsystem]):
            if i1 == j1:
                continue
            for off_i in rest_offsets:
                for off_j in rest_offsets:
                    if off_i == off_j:
                        continue
                    row_ii = i1 * s_stride + off_i
                    col_jj = j1 * s_stride + off_j
                    col_ji = j1 * s_stride + off_i
                    row_ij = i1 * s_stride + off_j
                    total += abs(rho(row_ii, col_jj)) ** 2
                    total -= rho(row_ii, col_ji) * np.conj(rho(row_ij, col_jj))
    return float(np.real(total))


def concurrence_pure(state: MultipartiteState | StateVector, subsystem: int) -> float:
    """E = sqrt(2 S_l) for the cut (subsystem | rest) of a pure global state."""
    sv = _checked_pure(state)
    s = linear_entropy(partial_trace(outer(sv), {subsystem}))
    return math.sqrt(max(0.0, 2.0 * s))


def concurrence_momentum_x(rho: DensityMatrix) -> float:
    """Concurrence E = sqrt(2 C_hs) of a two-mode-pair X-shaped mixed state.

    ``rho`` must be a 4x4 matrix over dims (2, 2); any weight beyond the
    diagonal / anti-diagonal X pattern (above 1e-10) raises NotXShaped.
    """
    if rho.dims != (2, 2):
        raise DimensionMismatch(f"expected a (2, 2) mode-pair matrix, got dims {rho.dims}")
    m = rho.matrix
    allowed = {(0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (3, 0), (1, 2), (2, 1)}
    for i in range(4):
        for j in range(4):
            if (i, j) not in allowed and abs(m[i, j]) > _X_TOL:
                raise NotXShaped(f"entry ({i}, {j}) = {m[i, j]!r} breaks the X pattern")
    return math.sqrt(2.0 * coherence_hs(rho))
