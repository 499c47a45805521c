"""Lorentz boosts acting on multiparticle states.

On the discrete basis a boost acts as a momentum-controlled spin unitary:

    U(B) |p, s> = |Bp> (x) D(W(B, p)) |s>

per particle, where D is the little-group rotation of that particle's mode.
Two routes are provided.  ``apply_boost`` is the physical one: it takes a
rapidity/direction pair, rewrites the numeric momenta and derives each D from
the half-angle formulas.  ``boost_by_wigner_angle`` drives the same controlled
unitary directly by the rotation angle, which is how angle sweeps are
parameterised: a given angle does not pin down a rapidity (with p = m = 1 no
finite rapidity even reaches angle pi/2), so that route leaves the numeric
momenta untouched and only retags the mode tokens.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import BadPhysicalParams, LabelCollision
from .linalg import StateVector, apply, kron
from .relativity import (
    BoostSpec,
    WignerRotation,
    boost_matrix,
    boost_momentum,
    wigner_rotation,
)
from .states import MomentumMode, MultipartiteState, Particle

# Tag prepended to every mode token by a boost, mirroring |p> -> |Lambda p>.
BOOST_TAG = "Λ"  # capital lambda

# Direct-angle boosts require the boost plane to be orthogonal to every mode
# and all modes to share one (E, m) shell, so a single angle is consistent.
_GEOMETRY_TOL = 1e-9


def _controlled_unitary(per_particle_ops: list[list[np.ndarray]]) -> np.ndarray:
    blocks = []
    for ops in per_particle_ops:
        b = np.zeros((2 * len(ops), 2 * len(ops)), dtype=complex)
        for i, d in enumerate(ops):
            b[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = d
        blocks.append(b)
    u = blocks[0]
    for b in blocks[1:]:
        u = kron(u, b)
    return u


def _retagged(particle: Particle, new_momenta: list | None) -> Particle:
    modes = []
    for i, mode in enumerate(particle.modes):
        momentum = mode.momentum if new_momenta is None else new_momenta[i]
        modes.append(MomentumMode(BOOST_TAG + mode.token, momentum))
    return Particle(tuple(modes))


def apply_boost(state: MultipartiteState, boost: BoostSpec) -> MultipartiteState:
    """Boost a state physically: new momenta, Wigner-rotated spins.

    Raises LabelCollision if two boosted momenta of one particle land within
    the mode-separation tolerance of each other.
    """
    lam = boost_matrix(boost)
    new_particles = []
    per_particle_ops = []
    for particle in state.particles:
        boosted = [boost_momentum(lam, m.momentum) for m in particle.modes]
        for i in range(len(boosted)):
            for j in range(i + 1, len(boosted)):
                gap = np.max(np.abs(boosted[i].as_array() - boosted[j].as_array()))
                if gap <= 1e-9:
                    raise LabelCollision(
                        f"boost merges modes {particle.modes[i].token!r} and "
                        f"{particle.modes[j].token!r} (max-norm gap {gap!r})"
                    )
        per_particle_ops.append(
            [wigner_rotation(boost, m.momentum).matrix for m in particle.modes]
        )
        new_particles.append(_retagged(particle, boosted))
    u = _controlled_unitary(per_particle_ops)
    return MultipartiteState(tuple(new_particles), apply(u, state.amplitudes))


def boost_by_wigner_angle(
    state: MultipartiteState, phi: float, direction: np.ndarray
) -> MultipartiteState:
    """Boost a state by prescribing the Wigner angle instead of a rapidity.

    Every mode must be orthogonal to ``direction`` and share the same energy
    and mass, so one angle describes all of them; the rotation axis of mode p
    is then (direction x p_hat) and flips sign with the momentum.  Mode tokens
    are retagged; the numeric four-momenta are left as they are.
    """
    if not math.isfinite(phi) or phi < 0.0 or phi > math.pi / 2.0 + 1e-12:
        raise BadPhysicalParams(f"wigner angle must lie in [0, pi/2], got {phi!r}")
    e_hat = np.asarray(direction, dtype=float)

    modes = [m for particle in state.particles for m in particle.modes]
    e_ref = modes[0].momentum.e
    m_ref = modes[0].momentum.mass
    for mode in modes:
        p_vec = mode.momentum.spatial
        p_mag = float(np.linalg.norm(p_vec))
        if p_mag <= 1e-14 * mode.momentum.e:
            raise BadPhysicalParams(f"mode {mode.token!r} is at rest; its angle is fixed at 0")
        if abs(float(e_hat @ p_vec)) / p_mag > _GEOMETRY_TOL:
            raise BadPhysicalParams(
                f"mode {mode.token!r} is not orthogonal to the boost direction"
            )
        if abs(mode.momentum.e - e_ref) > _GEOMETRY_TOL * e_ref or abs(
            mode.momentum.mass - m_ref
        ) > _GEOMETRY_TOL * m_ref:
            raise BadPhysicalParams(
                "modes do not share one mass shell; a single wigner angle is ambiguous"
            )

    per_particle_ops = []
    for particle in state.particles:
        ops = []
        for mode in particle.modes:
            p_vec = mode.momentum.spatial
            axis = np.cross(e_hat, p_vec / float(np.linalg.norm(p_vec)))
            axis /= float(np.linalg.norm(axis))
            ops.append(WignerRotation.from_angle_axis(phi, axis).matrix)
        per_particle_ops.append(ops)
    u = _controlled_unitary(per_particle_ops)
    new_particles = tuple(_retagged(p, None) for p in state.particles)
    return MultipartiteState(new_particles, apply(u, state.amplitudes))
