"""Truncated-Fock simulations of nonlinear Mach-Zehnder interferometers
and Kerr cells, with exact entangled-coherent-state decompositions and a
weak-nonlinearity squeezing approximation."""

from .ecs import (
    CoherentSuperposition,
    RationalChi,
    TwoModeCoherentSuperposition,
    branch_overlaps,
    interferometer_output_analytic,
    sheared_state_analytic,
    single_cell_output_analytic,
    synthesize_fock,
    three_cell_output_analytic,
)
from .elements import (
    DelayParams,
    KerrParams,
    beamsplitter_apply,
    delay_apply,
    kerr_apply,
    reduced_two_mode_kerr_apply,
    two_mode_kerr_apply,
)
from .fock import (
    ModeState,
    TruncationWarning,
    TwoModeState,
    coherent_state,
    default_n_max,
    entanglement_entropy,
    fidelity,
    husimi_q,
    overlap,
    product_state,
    vacuum,
)
from .pipelines import (
    InterferometerConfig,
    PipelineKind,
    UnsupportedParametersError,
    list_reference_cases,
    reference_output,
    simulate_analytic,
    simulate_numeric,
)
from .squeezing import (
    ArmApproxParams,
    DomainError,
    ShearApproxParams,
    approx_interferometer_output,
    approx_sheared_state,
    arm_params,
    quadrature_variance,
    shear_equation_residuals,
    shear_params,
)

__all__ = [
    "ArmApproxParams",
    "CoherentSuperposition",
    "DelayParams",
    "DomainError",
    "InterferometerConfig",
    "KerrParams",
    "ModeState",
    "PipelineKind",
    "RationalChi",
    "ShearApproxParams",
    "TruncationWarning",
    "TwoModeCoherentSuperposition",
    "TwoModeState",
    "UnsupportedParametersError",
    "approx_interferometer_output",
    "approx_sheared_state",
    "arm_params",
    "beamsplitter_apply",
    "branch_overlaps",
    "coherent_state",
    "default_n_max",
    "delay_apply",
    "entanglement_entropy",
    "fidelity",
    "husimi_q",
    "interferometer_output_analytic",
    "kerr_apply",
    "list_reference_cases",
    "overlap",
    "product_state",
    "quadrature_variance",
    "reduced_two_mode_kerr_apply",
    "reference_output",
    "shear_equation_residuals",
    "shear_params",
    "sheared_state_analytic",
    "simulate_analytic",
    "simulate_numeric",
    "single_cell_output_analytic",
    "synthesize_fock",
    "three_cell_output_analytic",
    "two_mode_kerr_apply",
    "vacuum",
]

__version__ = "0.1.0"
