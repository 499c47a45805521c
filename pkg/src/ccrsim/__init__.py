"""Lorentz boosts of discrete-momentum spin-1/2 states and the complete
complementarity relation P_l + C_hs + S_l = (d - 1)/d."""

from .boost import apply_boost, boost_by_wigner_angle
from .errors import (
    BadPhysicalParams,
    BadSubsystemIndex,
    CcrsimError,
    ConfigError,
    DimensionMismatch,
    GlobalStateNotPure,
    LabelCollision,
    NormNotPreserved,
    NotNormalized,
    NotXShaped,
    ThetaOutOfRange,
    VelocityOutOfRange,
)
from .linalg import (
    DensityMatrix,
    StateVector,
    apply,
    dagger,
    kron,
    matmul,
    outer,
    partial_trace,
    purity,
)
from .measures import (
    ComplementarityTriple,
    ccr,
    coherence_hs,
    concurrence_momentum_x,
    concurrence_pure,
    linear_entropy,
    linear_entropy_multiindex,
    predictability_l,
)
from .relativity import (
    BoostSpec,
    FourMomentum,
    WignerRotation,
    boost_matrix,
    boost_momentum,
    momentum_rapidity,
    rapidity_from_velocity,
    rotation_angle,
    standard_boost,
    wigner_angle,
    wigner_oracle,
    wigner_rotation,
)
from .states import (
    DOFS,
    MOMENTUM,
    SPIN,
    MomentumMode,
    MultipartiteState,
    Particle,
    ScenarioId,
    boost_direction,
    make_product_state,
    make_scenario,
    reduced_density_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BadPhysicalParams",
    "BadSubsystemIndex",
    "BoostSpec",
    "CcrsimError",
    "ComplementarityTriple",
    "ConfigError",
    "DOFS",
    "DensityMatrix",
    "DimensionMismatch",
    "FourMomentum",
    "GlobalStateNotPure",
    "LabelCollision",
    "MOMENTUM",
    "MomentumMode",
    "MultipartiteState",
    "NormNotPreserved",
    "NotNormalized",
    "NotXShaped",
    "Particle",
    "SPIN",
    "ScenarioId",
    "StateVector",
    "ThetaOutOfRange",
    "VelocityOutOfRange",
    "WignerRotation",
    "apply",
    "apply_boost",
    "boost_by_wigner_angle",
    "boost_direction",
    "boost_matrix",
    "boost_momentum",
    "ccr",
    "coherence_hs",
    "concurrence_momentum_x",
    "concurrence_pure",
    "dagger",
    "kron",
    "linear_entropy",
    "linear_entropy_multiindex",
    "make_product_state",
    "make_scenario",
    "matmul",
    "momentum_rapidity",
    "outer",
    "partial_trace",
    "predictability_l",
    "purity",
    "rapidity_from_velocity",
    "reduced_density_matrix",
    "rotation_angle",
    "standard_boost",
    "wigner_angle",
    "wigner_oracle",
    "wigner_rotation",
]
