"""Mode-labelled multiparticle states and the canonical boost scenarios.

A particle carries a finite list of momentum modes, each a (token, on-shell
four-momentum) pair; tokens are opaque names for basis kets, the numeric
momentum is what a boost transforms.  Every particle also carries one
spin-1/2 factor.  Amplitudes are stored over the factor order

    (momentum_1, spin_1, momentum_2, spin_2, ...)

so particle k owns the global factors 2k (momentum) and 2k + 1 (spin).
Spin basis: |0> is up and |1> is down along z.

The five scenario states all use two momentum modes +-p along the y-axis
with energy sqrt(mass^2 + p^2), boosted in the x-z plane:

    psi      (|+p> + |-p>)/sqrt(2) (x) |0>
    xi       (|+p, 0> + |-p, 1>)/sqrt(2)
    phi      (|+p> + |-p>)/sqrt(2) (x) (|0> + |1>)/sqrt(2)
    xi2      (|+p, -p> + |-p, +p>)/sqrt(2) (x) |0, 0>          (two particles)
    upsilon  (|+p, -p>|0, 1> + |-p, +p>|1, 0>)/sqrt(2)         (two particles)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    BadPhysicalParams,
    BadSubsystemIndex,
    DimensionMismatch,
    LabelCollision,
    NotNormalized,
    ThetaOutOfRange,
)
from .linalg import STATE_NORM_TOL, DensityMatrix, StateVector, outer, partial_trace
from .relativity import FourMomentum

# Two numeric momenta closer than this (max-norm) no longer label distinct modes.
MODE_SEPARATION_TOL = 1e-9

SPIN_DIM = 2

MOMENTUM = "momentum"
SPIN = "spin"
DOFS = (MOMENTUM, SPIN)


class ScenarioId(str, enum.Enum):
    PSI = "psi"
    XI = "xi"
    PHI = "phi"
    XI2 = "xi2"
    UPSILON = "upsilon"


@dataclass(frozen=True)
class MomentumMode:
    token: str
    momentum: FourMomentum


@dataclass(frozen=True)
class Particle:
    """Ordered momentum modes of one particle; tokens and momenta distinct."""

    modes: tuple[MomentumMode, ...]

    def __post_init__(self) -> None:
        modes = tuple(self.modes)
        if not modes:
            raise BadPhysicalParams("a particle needs at least one momentum mode")
        tokens = [m.token for m in modes]
        if len(set(tokens)) != len(tokens):
            raise LabelCollision(f"momentum tokens are not distinct: {tokens}")
        for i in range(len(modes)):
            for j in range(i + 1, len(modes)):
                gap = np.max(np.abs(modes[i].momentum.as_array() - modes[j].momentum.as_array()))
                if gap <= MODE_SEPARATION_TOL:
                    raise LabelCollision(
                        f"modes {tokens[i]!r} and {tokens[j]!r} coincide within "
                        f"{MODE_SEPARATION_TOL} (max-norm gap {gap!r})"
                    )
        object.__setattr__(self, "modes", modes)

    @property
    def n_modes(self) -> int:
        return len(self.modes)


@dataclass(frozen=True)
class MultipartiteState:
    """Pure state of one or more particles over (momentum, spin) factor pairs."""

    particles: tuple[Particle, ...]
    amplitudes: StateVector

    def __post_init__(self) -> None:
        particles = tuple(self.particles)
        if not particles:
            raise BadPhysicalParams("at least one particle is required")
        expected: tuple[int, ...] = ()
        for p in particles:
            expected += (p.n_modes, SPIN_DIM)
        if self.amplitudes.dims != expected:
            raise DimensionMismatch(
                f"amplitude dims {self.amplitudes.dims} do not match particles {expected}"
            )
        object.__setattr__(self, "particles", particles)

    @property
    def n_particles(self) -> int:
        return len(self.particles)

    @property
    def dims(self) -> tuple[int, ...]:
        """Factor dimensions, ordered (momentum_1, spin_1, momentum_2, spin_2, ...)."""
        return self.amplitudes.dims

    @property
    def vector(self) -> np.ndarray:
        """Flat amplitude array (read-only)."""
        return self.amplitudes.amplitudes

    def subsystem_index(self, particle: int, dof: str) -> int:
        """Global factor index of one particle's momentum or spin."""
        if not 0 <= particle < self.n_particles:
            raise BadSubsystemIndex(
                f"particle index {particle} out of range for {self.n_particles} particles"
            )
        if dof not in DOFS:
            raise BadSubsystemIndex(f"dof must be one of {DOFS}, got {dof!r}")
        return 2 * particle + (0 if dof == MOMENTUM else 1)

    def single_dof_subsystems(self) -> list[tuple[int, str, int]]:
        """All (particle, dof, global index) triples in global-index order."""
        out = []
        for k in range(self.n_particles):
            for dof in DOFS:
                out.append((k, dof, self.subsystem_index(k, dof)))
        return out

    def basis_label(self, flat_index: int) -> str:
        """Human-readable ket label for one flat amplitude index."""
        idx = flat_index
        parts = []
        for d in reversed(self.amplitudes.dims):
            parts.append(idx % d)
            idx //= d
        parts.reverse()
        kets = []
        for k, p in enumerate(self.particles):
            kets.append(f"|{p.modes[parts[2 * k]].token},{parts[2 * k + 1]}>")
        return "".join(kets)


def reduced_density_matrix(state: MultipartiteState, keep: set[int] | frozenset[int]) -> DensityMatrix:
    """Reduction of the global projector onto the kept factors."""
    return partial_trace(outer(state.amplitudes), keep)


def boost_direction(theta: float) -> np.ndarray:
    """Unit boost direction (cos theta, 0, sin theta) in the x-z plane.

    Values a hair outside [0, pi/2] (within 1e-12, e.g. from parsed decimal
    text or grid arithmetic) are clamped to the interval.
    """
    if not math.isfinite(theta) or theta < -1e-12 or theta > math.pi / 2.0 + 1e-12:
        raise ThetaOutOfRange(f"theta must lie in [0, pi/2], got {theta!r}")
    theta = min(max(theta, 0.0), math.pi / 2.0)
    return np.array([math.cos(theta), 0.0, math.sin(theta)])


def _scenario_particles(p_mag: float, mass: float, n_particles: int) -> tuple[Particle, ...]:
    e = math.sqrt(mass**2 + p_mag**2)
    plus = MomentumMode("+p", FourMomentum(e, 0.0, p_mag, 0.0))
    minus = MomentumMode("-p", FourMomentum(e, 0.0, -p_mag, 0.0))
    return tuple(Particle((plus, minus)) for _ in range(n_particles))


def make_scenario(scenario: ScenarioId | str, p_mag: float = 1.0, mass: float = 1.0) -> MultipartiteState:
    """Build one of the five canonical states with momenta +-p_mag along y."""
    scenario = ScenarioId(scenario)
    if not (math.isfinite(p_mag) and p_mag > 0.0):
        raise BadPhysicalParams(f"p_mag must be positive and finite, got {p_mag!r}")
    if not (math.isfinite(mass) and mass > 0.0):
        raise BadPhysicalParams(f"mass must be positive and finite, got {mass!r}")

    r = 1.0 / math.sqrt(2.0)
    if scenario in (ScenarioId.PSI, ScenarioId.XI, ScenarioId.PHI):
        particles = _scenario_particles(p_mag, mass, 1)
        amps = np.zeros(4, dtype=complex)
        if scenario == ScenarioId.PSI:
            amps[0] = amps[2] = r  # (|+p> + |-p>)/sqrt2 (x) |0>
        elif scenario == ScenarioId.XI:
            amps[0] = amps[3] = r  # (|+p,0> + |-p,1>)/sqrt2
        else:
            amps[:] = 0.5  # (|+p> + |-p>)(|0> + |1>)/2
        return MultipartiteState(particles, StateVector((2, 2), amps))

    particles = _scenario_particles(p_mag, mass, 2)
    amps = np.zeros(16, dtype=complex)
    if scenario == ScenarioId.XI2:
        # (|+p,-p> + |-p,+p>)/sqrt2 (x) |0,0> over (p_A, s_A, p_B, s_B)
        amps[0b0010] = amps[0b1000] = r
    else:
        # (|+p,-p>|0,1> + |-p,+p>|1,0>)/sqrt2
        amps[0b0011] = amps[0b1100] = r
    return MultipartiteState(particles, StateVector((2, 2, 2, 2), amps))


def make_product_state(
    momenta: Sequence[Sequence[tuple[str, FourMomentum, complex]]],
    spins: Sequence[tuple[complex, complex]],
) -> MultipartiteState:
    """Product state: per particle, a momentum-mode superposition times a spin.

    ``momenta[k]`` lists (token, four-momentum, amplitude) for particle k and
    must be unit norm on its own, as must each ``spins[k]`` pair.
    """
    if len(momenta) != len(spins) or not momenta:
        raise DimensionMismatch(
            f"need matching particle counts, got {len(momenta)} momentum lists "
            f"and {len(spins)} spin pairs"
        )
    particles = []
    vec = np.ones(1, dtype=complex)
    for mode_list, spin_pair in zip(momenta, spins):
        m_amps = np.array([a for (_, _, a) in mode_list], dtype=complex)
        if abs(float(np.linalg.norm(m_amps)) - 1.0) > STATE_NORM_TOL:
            raise NotNormalized(f"momentum amplitudes {m_amps} are not unit norm")
        s_amps = np.array(spin_pair, dtype=complex)
        if s_amps.shape != (2,):
            raise DimensionMismatch(f"spin amplitudes must be a pair, got {spin_pair!r}")
        if abs(float(np.linalg.norm(s_amps)) - 1.0) > STATE_NORM_TOL:
            raise NotNormalized(f"spin amplitudes {spin_pair!r} are not unit norm")
        particles.append(Particle(tuple(MomentumMode(t, p) for (t, p, _) in mode_list)))
        vec = np.kron(vec, np.kron(m_amps, s_amps))
    dims: tuple[int, ...] = ()
    for p in particles:
        dims += (p.n_modes, SPIN_DIM)
    return MultipartiteState(tuple(particles), StateVector(dims, vec))
