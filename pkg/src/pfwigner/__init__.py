"""Photon polarisation phase numerics with and without a distinguished frame."""

from .closed_form import (
    BoostScenario,
    DomainError,
    RotationScenario,
    boost_phase,
    boost_phase_asymptote,
    rotation_phase,
    rotation_phase_shift,
    rotation_shift_approx,
)
from .induction import (
    StabilityError,
    StandardPair,
    WignerAngle,
    alignment_angle,
    bench_pair,
    direction_in_pf,
    euclidean_element,
    pf_standard_element,
    pf_wigner,
    phase_difference,
    standard_wigner,
    transform_pair,
)
from .minkowski import (
    IDENTITY,
    METRIC,
    FourVector,
    FrameVelocity,
    LorentzTransform,
    PhotonKinematics,
    apply,
    boost_from_velocity,
    boost_to,
    compose,
    inverse,
    minkowski_dot,
    rotation_about,
    rotation_z_to,
    wrap_angle,
)
from .polarisation import (
    Absorbed,
    FrameMismatch,
    LinearPolState,
    Polariser,
    anomalous_malus_curve,
    apply_polariser,
    make_linear_state,
    malus_probability,
    monte_carlo_malus,
    transform_state,
)

__version__ = "0.1.0"
