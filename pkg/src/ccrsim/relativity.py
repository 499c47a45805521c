"""Boost algebra and little-group rotations for massive spin-1/2 particles.

Conventions: natural units (c = 1), metric diag(-1, 1, 1, 1), index order
(t, x, y, z).  A pure boost with rapidity w along the unit vector e has

    L[0][0] = cosh w,   L[0][i] = L[i][0] = sinh w * e_i,
    L[i][j] = delta_ij + (cosh w - 1) * e_i * e_j,

so it maps the rest momentum k = (m, 0, 0, 0) to (m cosh w, m sinh w * e).

For a boost B(w, e) acting on a particle of momentum rapidity a = acosh(E/m)
along p_hat, the induced little-group (Wigner) rotation on the spin is, in
half-angle form,

    cos(f/2)         = [cosh(w/2) cosh(a/2) + sinh(w/2) sinh(a/2) (e . p_hat)] / N
    sin(f/2) * n_hat = sinh(w/2) sinh(a/2) (e x p_hat) / N
    N                = sqrt((1 + cosh w cosh a + sinh w sinh a (e . p_hat)) / 2)

represented on spin-1/2 as D = cos(f/2) I + i sin(f/2) (sigma . n_hat).
When e is perpendicular to p_hat the rotation angle reduces to

    tan f = sinh w sinh a / (cosh w + cosh a).

The independent cross-check is the explicit 4x4 little-group element
W = L(B p)^-1 B L(p), which must fix k; its spatial block is the SO(3) image
of D, so both routes must report the same angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadPhysicalParams, VelocityOutOfRange
from .linalg import I2, MATRIX_TOL, PAULI

METRIC = np.diag([-1.0, 1.0, 1.0, 1.0])

# Hard cap on boost rapidity; cosh(50)^2 is still comfortably inside float64.
RAPIDITY_CAP = 50.0

# Relative floor on m^2/e^2 below which a momentum is treated as non-timelike.
_TIMELIKE_REL_TOL = 1e-10

_DEFAULT_AXIS = np.array([0.0, 0.0, 1.0])


def _unit3(v, what: str) -> np.ndarray:
    a = np.array(v, dtype=float).reshape(-1)
    if a.shape != (3,):
        raise BadPhysicalParams(f"{what} must be a 3-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise BadPhysicalParams(f"{what} contains NaN or Inf")
    if abs(float(np.linalg.norm(a)) - 1.0) > MATRIX_TOL:
        raise BadPhysicalParams(f"{what} must be a unit vector, |v| = {np.linalg.norm(a)!r}")
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FourMomentum:
    """Timelike four-momentum (e, px, py, pz) of a massive particle."""

    e: float
    px: float
    py: float
    pz: float

    def __post_init__(self) -> None:
        vals = (self.e, self.px, self.py, self.pz)
        if not all(math.isfinite(v) for v in vals):
            raise BadPhysicalParams(f"four-momentum {vals} contains NaN or Inf")
        if self.e <= 0.0:
            raise BadPhysicalParams(f"energy must be positive, got {self.e!r}")
        if self.mass_sq <= _TIMELIKE_REL_TOL * self.e**2:
            raise BadPhysicalParams(
                f"four-momentum {vals} is not timelike: m^2 = {self.mass_sq!r}"
            )

    @classmethod
    def from_array(cls, a) -> "FourMomentum":
        a = np.asarray(a, dtype=float).reshape(-1)
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    @classmethod
    def from_spatial(cls, mass: float, p_vec) -> "FourMomentum":
        """On-shell momentum with the given mass and spatial 3-momentum."""
        if not (math.isfinite(mass) and mass > 0.0):
            raise BadPhysicalParams(f"mass must be positive and finite, got {mass!r}")
        p = np.asarray(p_vec, dtype=float).reshape(-1)
        e = math.sqrt(mass**2 + float(p @ p))
        return cls(e, float(p[0]), float(p[1]), float(p[2]))

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz])

    @property
    def mass_sq(self) -> float:
        return self.e**2 - (self.px**2 + self.py**2 + self.pz**2)

    @property
    def mass(self) -> float:
        return math.sqrt(self.mass_sq)

    def as_array(self) -> np.ndarray:
        return np.array([self.e, self.px, self.py, self.pz])


@dataclass(frozen=True)
class BoostSpec:
    """Pure boost: nonnegative rapidity (capped) along a unit direction."""

    rapidity: float
    direction: np.ndarray

    def __post_init__(self) -> None:
        w = float(self.rapidity)
        if not math.isfinite(w) or w < 0.0:
            raise BadPhysicalParams(f"rapidity must be finite and >= 0, got {w!r}")
        if w > RAPIDITY_CAP:
            raise BadPhysicalParams(f"rapidity {w!r} exceeds the cap {RAPIDITY_CAP}")
        object.__setattr__(self, "rapidity", w)
        object.__setattr__(self, "direction", _unit3(self.direction, "boost direction"))

    @classmethod
    def from_velocity(cls, v: float, direction) -> "BoostSpec":
        return cls(rapidity_from_velocity(v), np.asarray(direction, dtype=float))


def rapidity_from_velocity(v: float) -> float:
    """w = atanh(v) for 0 <= v < 1; direction, not sign, encodes orientation."""
    if not math.isfinite(v) or v < 0.0 or v >= 1.0:
        raise VelocityOutOfRange(f"speed must satisfy 0 <= v < 1, got {v!r}")
    return math.atanh(v)


def momentum_rapidity(p: FourMomentum) -> float:
    """a = acosh(E/m); zero for a particle at rest."""
    return math.acosh(max(1.0, p.e / p.mass))


def wigner_angle(omega: float, alpha: float) -> float:
    """Perpendicular-geometry rotation angle tan f = sh(w) sh(a) / (ch(w) + ch(a))."""
    return math.atan2(math.sinh(omega) * math.sinh(alpha), math.cosh(omega) + math.cosh(alpha))


def _pure_boost(direction: np.ndarray, rapidity, dtype=np.float64) -> np.ndarray:
    e = np.asarray(direction, dtype=dtype)
    w = np.asarray(rapidity, dtype=dtype)[()]
    ch = np.cosh(w)
    sh = np.sinh(w)
    out = np.empty((4, 4), dtype=dtype)
    out[0, 0] = ch
    out[0, 1:] = sh * e
    out[1:, 0] = sh * e
    out[1:, 1:] = np.eye(3, dtype=dtype) + (ch - 1.0) * np.outer(e, e)
    return out


def boost_matrix(boost: BoostSpec) -> np.ndarray:
    """4x4 matrix of the pure boost."""
    return _pure_boost(boost.direction, boost.rapidity)


def standard_boost(p: FourMomentum) -> np.ndarray:
    """L(p): the pure boost taking the rest momentum (m, 0, 0, 0) to p."""
    p_vec = p.spatial
    p_mag = float(np.linalg.norm(p_vec))
    if p_mag <= 1e-14 * p.e:
        return np.eye(4)
    return _pure_boost(p_vec / p_mag, momentum_rapidity(p))


def boost_momentum(lam: np.ndarray, p: FourMomentum) -> FourMomentum:
    """Apply a 4x4 Lorentz matrix to a four-momentum."""
    return FourMomentum.from_array(np.asarray(lam) @ p.as_array())


def wigner_oracle(boost: BoostSpec, p: FourMomentum) -> np.ndarray:
    """Explicit little-group element W = L(Bp)^-1 B L(p) as a 4x4 matrix.

    This is the brute-force route: it must fix the rest momentum and its
    spatial block must be the SO(3) rotation whose angle matches
    ``wigner_rotation``.  Kept free of the half-angle formulas on purpose.

    The triple product cancels intermediates of order cosh(w) cosh(w + a)
    down to entries of order one, which costs ~1e-8 absolute in float64 at
    rapidities near 5.  Two measures keep the absolute error of the result
    far below the 1e-9 test tolerance: the product is carried in extended
    precision, and the standard boosts are built directly from momentum
    components (cosh a = E/m, sinh a k-hat = k/m) so no arccosh/cosh round
    trip re-amplifies rounding of the invariant mass.
    """
    ld = np.longdouble
    # Renormalize the direction in extended precision: a float64 unit vector
    # is off by ~1e-16, which the metric defect amplifies by sinh(w)^2.
    e = np.asarray(boost.direction, dtype=ld)
    e = e / np.sqrt(e @ e)
    lam = _pure_boost(e, boost.rapidity, dtype=ld)
    p4 = np.array([p.e, p.px, p.py, p.pz], dtype=ld)
    mass = np.sqrt(p4[0] ** 2 - p4[1:] @ p4[1:])
    q4 = lam @ p4

    def standard_boost_ld(k4, sign):
        k_vec = k4[1:]
        if np.sqrt(k_vec @ k_vec) <= 1e-14 * k4[0]:
            return np.eye(4, dtype=ld)
        out = np.empty((4, 4), dtype=ld)
        out[0, 0] = k4[0] / mass
        out[0, 1:] = out[1:, 0] = sign * k_vec / mass
        out[1:, 1:] = np.eye(3, dtype=ld) + np.outer(k_vec, k_vec) / (
            mass * (k4[0] + mass)
        )
        return out

    l_q_inv = standard_boost_ld(q4, -1.0)
    l_p = standard_boost_ld(p4, 1.0)
    return np.asarray(l_q_inv @ lam @ l_p, dtype=float)


def rotation_angle(w: np.ndarray) -> float:
    """Rotation angle of the spatial block of a little-group element.

    Reads sin from the antisymmetric part and cos from the trace; atan2 of
    the pair stays well-conditioned at both ends of [0, pi], unlike a bare
    arccos of the trace.
    """
    r = np.asarray(w)[1:, 1:]
    sin_vec = 0.5 * np.array(
        [r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]]
    )
    cos_val = (float(np.trace(r)) - 1.0) / 2.0
    return math.atan2(float(np.linalg.norm(sin_vec)), cos_val)


@dataclass(frozen=True)
class WignerRotation:
    """SU(2) little-group rotation: matrix plus its angle-axis reading.

    The matrix is cos(angle/2) I + i sin(angle/2) (sigma . axis); construction
    re-validates unitarity, unit determinant, and the angle-axis match.
    """

    matrix: np.ndarray
    angle: float
    axis: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=complex)
        axis = _unit3(self.axis, "rotation axis")
        angle = float(self.angle)
        if m.shape != (2, 2):
            raise BadPhysicalParams(f"spin rotation must be 2x2, got {m.shape}")
        if np.max(np.abs(m @ m.conj().T - I2)) > MATRIX_TOL:
            raise BadPhysicalParams("spin rotation is not unitary within tolerance")
        if abs(np.linalg.det(m) - 1.0) > MATRIX_TOL:
            raise BadPhysicalParams("spin rotation determinant is not 1 within tolerance")
        rebuilt = _su2_from_angle_axis(angle, axis)
        if np.max(np.abs(m - rebuilt)) > MATRIX_TOL:
            raise BadPhysicalParams("matrix does not match its angle-axis data")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "angle", angle)
        object.__setattr__(self, "axis", axis)

    @classmethod
    def identity(cls) -> "WignerRotation":
        return cls(I2.copy(), 0.0, _DEFAULT_AXIS.copy())

    @classmethod
    def from_angle_axis(cls, angle: float, axis) -> "WignerRotation":
        axis = _unit3(axis, "rotation axis")
        return cls(_su2_from_angle_axis(float(angle), axis), float(angle), axis)


def _su2_from_angle_axis(angle: float, axis: np.ndarray) -> np.ndarray:
    c = math.cos(angle / 2.0)
    s = math.sin(angle / 2.0)
    sigma_n = sum(axis[k] * PAULI[k] for k in range(3))
    return c * I2 + 1j * s * sigma_n


def wigner_rotation(boost: BoostSpec, p: FourMomentum) -> WignerRotation:
    """Half-angle closed form of the little-group rotation induced on the spin.

    A particle at rest (or a trivial boost) yields the identity with angle 0;
    when the angle vanishes the reported axis is the (never used) z-axis.
    """
    p_vec = p.spatial
    p_mag = float(np.linalg.norm(p_vec))
    if p_mag <= 1e-14 * p.e or boost.rapidity == 0.0:
        return WignerRotation.identity()

    p_hat = p_vec / p_mag
    e_hat = boost.direction
    w = boost.rapidity
    a = momentum_rapidity(p)
    dot = float(e_hat @ p_hat)

    denom = math.sqrt(
        (1.0 + math.cosh(w) * math.cosh(a) + math.sinh(w) * math.sinh(a) * dot) / 2.0
    )
    cos_half = (
        math.cosh(w / 2.0) * math.cosh(a / 2.0)
        + math.sinh(w / 2.0) * math.sinh(a / 2.0) * dot
    ) / denom
    sin_vec = (math.sinh(w / 2.0) * math.sinh(a / 2.0) / denom) * np.cross(e_hat, p_hat)

    sin_half = float(np.linalg.norm(sin_vec))
    angle = 2.0 * math.atan2(sin_half, cos_half)
    axis = sin_vec / sin_half if sin_half > 0.0 else _DEFAULT_AXIS.copy()
    matrix = cos_half * I2 + 1j * sum(sin_vec[k] * PAULI[k] for k in range(3))
    return WignerRotation(matrix, angle, axis)
