"""Hand-derived closed forms used as oracles by the test modules.

Everything here is written directly in trigonometric functions of the boost
tilt ``theta`` (angle between the boost axis and the x axis, in the x-z plane)
and the Wigner angle ``phi``.  None of it goes through the library's boost or
partial-trace code, so agreement with the library is a genuine cross-check.

Conventions match the scenario builders: each particle carries a two-mode
momentum factor ordered (+p y-hat, -p y-hat) and a spin-1/2 factor, with the
tensor order (momentum_A, spin_A, momentum_B, spin_B).
"""

import math

import numpy as np


def half_angle(phi):
    """Return (cos(phi/2), sin(phi/2))."""
    return math.cos(0.5 * phi), math.sin(0.5 * phi)


def rot_plus(theta, phi):
    """Little-group SU(2) matrix for momentum +p y-hat.

    The rotation axis is the unit vector along e x p = (-sin(theta), 0,
    cos(theta)) and the spin-1/2 representation of a rotation by ``phi``
    about axis n is cos(phi/2) I + i sin(phi/2) (sigma . n).
    """
    c, s = half_angle(phi)
    ct, st = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [c + 1j * s * ct, -1j * s * st],
            [-1j * s * st, c - 1j * s * ct],
        ]
    )


def rot_minus(theta, phi):
    """Little-group SU(2) matrix for momentum -p y-hat (axis flips sign)."""
    c, s = half_angle(phi)
    ct, st = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [c - 1j * s * ct, 1j * s * st],
            [1j * s * st, c + 1j * s * ct],
        ]
    )


# ---------------------------------------------------------------------------
# Boosted single-particle states (amplitude vectors over (momentum, spin)).
# ---------------------------------------------------------------------------


def psi_boosted(theta, phi):
    """(1/sqrt2)(|+p>|0> + |-p>|0>) after the boost."""
    up = rot_plus(theta, phi)[:, 0]
    dn = rot_minus(theta, phi)[:, 0]
    return np.concatenate([up, dn]) / math.sqrt(2.0)


def xi_boosted(theta, phi):
    """(1/sqrt2)(|+p>|0> + |-p>|1>) after the boost."""
    up = rot_plus(theta, phi)[:, 0]
    dn = rot_minus(theta, phi)[:, 1]
    return np.concatenate([up, dn]) / math.sqrt(2.0)


def phi_boosted(theta, phi):
    """(1/2)(|+p> + |-p>)(|0> + |1>) after the boost."""
    both = np.array([1.0, 1.0])
    up = rot_plus(theta, phi) @ both
    dn = rot_minus(theta, phi) @ both
    return np.concatenate([up, dn]) / 2.0


def _pair_index(pa, sa, pb, sb):
    """Flat index in the (momentum_A, spin_A, momentum_B, spin_B) basis."""
    return ((pa * 2 + sa) * 2 + pb) * 2 + sb


def xi2_boosted(theta, phi):
    """(1/sqrt2)(|+p,-p> + |-p,+p>)|00> after the boost."""
    up = rot_plus(theta, phi)
    dn = rot_minus(theta, phi)
    amps = np.zeros(16, dtype=complex)
    for sa in range(2):
        for sb in range(2):
            amps[_pair_index(0, sa, 1, sb)] = up[sa, 0] * dn[sb, 0]
            amps[_pair_index(1, sa, 0, sb)] = dn[sa, 0] * up[sb, 0]
    return amps / math.sqrt(2.0)


def upsilon_boosted(theta, phi):
    """(1/sqrt2)(|+p>|0>|-p>|1> + |-p>|1>|+p>|0>) after the boost."""
    up = rot_plus(theta, phi)
    dn = rot_minus(theta, phi)
    amps = np.zeros(16, dtype=complex)
    for sa in range(2):
        for sb in range(2):
            amps[_pair_index(0, sa, 1, sb)] = up[sa, 0] * dn[sb, 1]
            amps[_pair_index(1, sa, 0, sb)] = dn[sa, 1] * up[sb, 0]
    return amps / math.sqrt(2.0)


# ---------------------------------------------------------------------------
# Boosted reduced density matrices, written out entry by entry.
# ---------------------------------------------------------------------------


def psi_rho_spin(theta, phi):
    c, s = half_angle(phi)
    ct, st = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [c * c + s * s * ct * ct, -(s * s) * st * ct],
            [-(s * s) * st * ct, s * s * st * st],
        ],
        dtype=complex,
    )


def psi_rho_momentum(theta, phi):
    ct = math.cos(theta)
    off = 0.5 * (math.cos(phi) + 1j * math.sin(phi) * ct)
    return np.array([[0.5, off], [np.conj(off), 0.5]])


def xi_rho_spin(theta, phi):
    c, s = half_angle(phi)
    st = math.sin(theta)
    return np.array([[0.5, 1j * c * s * st], [-1j * c * s * st, 0.5]])


def xi_rho_momentum(theta, phi):
    c, s = half_angle(phi)
    st = math.sin(theta)
    return np.array([[0.5, -1j * c * s * st], [1j * c * s * st, 0.5]])


def phi_rho_spin(theta, phi):
    c, s = half_angle(phi)
    ct, st = math.cos(theta), math.sin(theta)
    bias = s * s * st * ct
    off = 0.5 * (c * c - s * s * math.cos(2.0 * theta))
    return np.array([[0.5 - bias, off], [off, 0.5 + bias]])


def phi_rho_momentum(theta, phi):
    st = math.sin(theta)
    off = 0.5 * (math.cos(phi) - 1j * math.sin(phi) * st)
    return np.array([[0.5, off], [np.conj(off), 0.5]])


def xi2_rho_momentum_pair(theta, phi):
    """Momentum-momentum reduction of the boosted two-particle Bell state."""
    c, s = half_angle(phi)
    st = math.sin(theta)
    anti = 0.5 * (1.0 - 4.0 * c * c * s * s * st * st)
    rho = np.zeros((4, 4), dtype=complex)
    rho[1, 1] = rho[2, 2] = 0.5
    rho[1, 2] = rho[2, 1] = anti
    return rho


def upsilon_rho_spin(phi):
    """Single-particle spin reduction at theta = pi/2 (same for A and B)."""
    c, s = half_angle(phi)
    return np.array([[0.5, 1j * c * s], [-1j * c * s, 0.5]])


def upsilon_rho_momentum_pair(phi):
    """Momentum-momentum reduction at theta = pi/2."""
    c, s = half_angle(phi)
    anti = 2.0 * c * c * s * s
    rho = np.zeros((4, 4), dtype=complex)
    rho[1, 1] = rho[2, 2] = 0.5
    rho[1, 2] = rho[2, 1] = anti
    return rho


# ---------------------------------------------------------------------------
# Misc small oracles.
# ---------------------------------------------------------------------------


def kron_brute(a, b):
    """Kronecker product computed by its element definition."""
    (ra, ca), (rb, cb) = a.shape, b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for m in range(cb):
                    out[i * rb + k, j * cb + m] = a[i, j] * b[k, m]
    return out


def same_up_to_global_phase(u, v, tol=1e-10):
    """True when u = exp(i alpha) v for some real alpha."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        return False
    pivot = int(np.argmax(np.abs(v)))
    if abs(v[pivot]) < tol or abs(u[pivot]) < tol:
        return bool(np.max(np.abs(u - v)) <= tol)
    phase = u[pivot] / v[pivot]
    phase /= abs(phase)
    return bool(np.max(np.abs(u - phase * v)) <= tol)
