"""End-to-end circuits: nonlinear Mach-Zehnder, single Kerr cell, and
the shear-cancelled three-cell arrangement.

Every pipeline has an exact numeric path on the truncated Fock space;
the rational-nonlinearity cases additionally have an analytic path that
returns a finite coherent superposition. A set of closed-form reference
outputs pins the sign and port conventions.

Port convention: the recombining beamsplitter maps internal arms (1, 2)
to output ports (a', b') with B|u>|v> = |(u+iv)/sqrt2>|(v+iu)/sqrt2>,
fixed by the linear-interferometer output
    |alpha (1 - e^{i delta})/2>_a' |i alpha (1 + e^{i delta})/2>_b'.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import pi

import numpy as np

from . import ecs, elements, fock
from .ecs import (
    CoherentSuperposition,
    RationalChi,
    TwoModeCoherentSuperposition,
)


class UnsupportedParametersError(ValueError):
    """Raised when an analytic path is asked for parameters it cannot cover."""


class PipelineKind(enum.Enum):
    MACH_ZEHNDER = "mach_zehnder"
    SINGLE_CELL = "single_cell"
    THREE_CELL = "three_cell"


def _chi_value(chi: float | RationalChi) -> float:
    return chi.chi if isinstance(chi, RationalChi) else float(chi)


def _require_rational(chi: float | RationalChi, label: str) -> RationalChi:
    if not isinstance(chi, RationalChi):
        raise UnsupportedParametersError(
            f"{label} must be a RationalChi for the analytic path "
            "(irrational nonlinearities are covered by the numeric path only)"
        )
    return chi


@dataclass(frozen=True)
class InterferometerConfig:
    """Scenario parameters shared by all pipelines.

    chi1 is the arm-1 (or cell) nonlinearity, chi2 the arm-2 one;
    the cell pipelines use chi1 only. n_max defaults to the Poisson
    truncation rule on |alpha| + |beta|.
    """

    alpha: complex
    chi1: float | RationalChi = 0.0
    chi2: float | RationalChi = 0.0
    beta: complex = 0.0
    delta: float = 0.0
    tau: float = 0.0
    n_max: int | None = None

    def resolved_n_max(self) -> int:
        if self.n_max is not None:
            return self.n_max
        return fock.default_n_max(abs(self.alpha) + abs(self.beta))


def simulate_numeric(
    config: InterferometerConfig, kind: PipelineKind
) -> fock.TwoModeState:
    """Exact element-by-element evolution on the truncated Fock space."""
    n_max = config.resolved_n_max()
    psi = fock.product_state(
        fock.coherent_state(config.alpha, n_max),
        fock.coherent_state(config.beta, n_max),
    )
    chi1 = _chi_value(config.chi1)
    if kind is PipelineKind.SINGLE_CELL:
        return elements.two_mode_kerr_apply(
            elements.KerrParams(chi1, config.tau), psi
        )
    if kind is PipelineKind.THREE_CELL:
        return elements.reduced_two_mode_kerr_apply(chi1, psi)

    chi2 = _chi_value(config.chi2)
    psi = elements.beamsplitter_apply(psi)
    psi = elements.delay_apply(elements.DelayParams(config.delta), psi)
    phases1 = elements.kerr_phases(chi1, config.tau, n_max)
    phases2 = elements.kerr_phases(chi2, config.tau, n_max)
    psi = fock.TwoModeState(psi.amplitudes * np.outer(phases1, phases2))
    return elements.beamsplitter_apply(psi)


def simulate_analytic(
    config: InterferometerConfig, kind: PipelineKind
) -> TwoModeCoherentSuperposition:
    """Finite coherent-superposition output for rational nonlinearities."""
    if config.tau != 0.0:
        raise UnsupportedParametersError("analytic paths assume tau = 0")
    if kind is PipelineKind.MACH_ZEHNDER:
        if config.beta != 0:
            raise UnsupportedParametersError(
                "analytic Mach-Zehnder output requires vacuum at port b"
            )
        return ecs.interferometer_output_analytic(
            config.alpha,
            _require_rational(config.chi1, "chi1"),
            _require_rational(config.chi2, "chi2"),
            config.delta,
        )
    chi = _require_rational(config.chi1, "chi1")
    if kind is PipelineKind.SINGLE_CELL:
        return ecs.single_cell_output_analytic(config.alpha, config.beta, chi)
    return ecs.three_cell_output_analytic(config.alpha, config.beta, chi)


@dataclass(frozen=True)
class ReferenceCase:
    """A closed-form output with the parameters that reproduce it."""

    case_id: str
    description: str
    kind: PipelineKind
    config: InterferometerConfig
    build: object = field(repr=False)  # () -> TwoModeCoherentSuperposition

    def superposition(self) -> TwoModeCoherentSuperposition:
        return self.build()


def _case_linear(alpha: complex, delta: float) -> TwoModeCoherentSuperposition:
    return TwoModeCoherentSuperposition(
        (
            (
                1.0 + 0j,
                alpha * (1 - np.exp(1j * delta)) / 2.0,
                1j * alpha * (1 + np.exp(1j * delta)) / 2.0,
            ),
        )
    )


def _case_one_arm_half(alpha: complex, delta: float) -> TwoModeCoherentSuperposition:
    # chi1 = pi/2, chi2 = 0: two branches from the two-term cat in arm 1.
    c = 2**-0.5 * np.exp(-1j * pi / 4)
    e = np.exp(1j * delta)
    return TwoModeCoherentSuperposition(
        (
            (c, alpha * (1j - e) / 2.0, 1j * alpha * (1j + e) / 2.0),
            (1j * c, -alpha * (1j + e) / 2.0, -1j * alpha * (1j - e) / 2.0),
        )
    )


def _case_two_branch_ecs(alpha: complex) -> TwoModeCoherentSuperposition:
    # chi1 = pi/2, chi2 = 0, delta = pi/2. The bright-branch amplitude is
    # -alpha, which follows from evaluating the general one-arm form at
    # delta = pi/2 (and is confirmed by the numeric pipeline).
    c = 2**-0.5 * np.exp(-1j * pi / 4)
    return TwoModeCoherentSuperposition(
        ((c, 0.0, -alpha), (1j * c, -1j * alpha, 0.0))
    )


def _case_double_half(alpha: complex) -> TwoModeCoherentSuperposition:
    # chi1 = chi2 = pi/2, delta = 0: cat at a' with vacuum at b',
    # entangled with vacuum at a' and an odd cat at b'.
    return TwoModeCoherentSuperposition(
        (
            (0.5, 1j * alpha, 0.0),
            (0.5, -1j * alpha, 0.0),
            (0.5j, 0.0, alpha),
            (-0.5j, 0.0, -alpha),
        )
    )


def _case_three_cell_quarter(
    alpha: complex, beta: complex
) -> TwoModeCoherentSuperposition:
    # reduced cell at chi = pi/4:
    # (1/2)[|a>(|b> + |-b>) + |-a>(|b> - |-b>)]
    return TwoModeCoherentSuperposition(
        (
            (0.5, alpha, beta),
            (0.5, alpha, -beta),
            (0.5, -alpha, beta),
            (-0.5, -alpha, -beta),
        )
    )


def _case_single_cell_half(
    alpha: complex, beta: complex
) -> TwoModeCoherentSuperposition:
    # full cell at chi = pi/2 factorizes:
    # -(i/2)(|i a> + i|-i a>)(|i b> + i|-i b>)
    terms = []
    for ca, aa in ((1.0, 1j * alpha), (1j, -1j * alpha)):
        for cb, bb in ((1.0, 1j * beta), (1j, -1j * beta)):
            terms.append((-0.5j * ca * cb, aa, bb))
    return TwoModeCoherentSuperposition(tuple(terms))


def _case_single_cell_quarter(
    alpha: complex, beta: complex
) -> TwoModeCoherentSuperposition:
    # full cell at chi = pi/4: sixteen coefficients on the rotated
    # four-point grids, generated from the exact coefficient solve.
    return ecs.single_cell_output_analytic(alpha, beta, RationalChi(1, 8))


_REFERENCE_ALPHA = 2.0
_REFERENCE_BETA = 1.2


def _reference_cases() -> list[ReferenceCase]:
    a, b = _REFERENCE_ALPHA, _REFERENCE_BETA
    return [
        ReferenceCase(
            "linear",
            "linear interferometer: product output, delta = pi/2",
            PipelineKind.MACH_ZEHNDER,
            InterferometerConfig(
                alpha=a, chi1=RationalChi(0, 1), chi2=RationalChi(0, 1), delta=pi / 2
            ),
            lambda: _case_linear(a, pi / 2),
        ),
        ReferenceCase(
            "one_arm_half",
            "chi1 = pi/2 only: two-branch superposition at general delta",
            PipelineKind.MACH_ZEHNDER,
            InterferometerConfig(
                alpha=a, chi1=RationalChi(1, 4), chi2=RationalChi(0, 1), delta=0.9
            ),
            lambda: _case_one_arm_half(a, 0.9),
        ),
        ReferenceCase(
            "two_branch_ecs",
            "chi1 = pi/2, delta = pi/2: maximally separated two-branch "
            "entangled coherent state",
            PipelineKind.MACH_ZEHNDER,
            InterferometerConfig(
                alpha=a, chi1=RationalChi(1, 4), chi2=RationalChi(0, 1), delta=pi / 2
            ),
            lambda: _case_two_branch_ecs(a),
        ),
        ReferenceCase(
            "double_half",
            "chi1 = chi2 = pi/2, delta = 0: cat state entangled with vacuum",
            PipelineKind.MACH_ZEHNDER,
            InterferometerConfig(
                alpha=a, chi1=RationalChi(1, 4), chi2=RationalChi(1, 4), delta=0.0
            ),
            lambda: _case_double_half(a),
        ),
        ReferenceCase(
            "three_cell_quarter",
            "shear-cancelled cell at chi = pi/4: four-branch entangled state",
            PipelineKind.THREE_CELL,
            InterferometerConfig(alpha=a, beta=b, chi1=RationalChi(1, 8)),
            lambda: _case_three_cell_quarter(a, b),
        ),
        ReferenceCase(
            "single_cell_half",
            "single cell at chi = pi/2: product of two cat states",
            PipelineKind.SINGLE_CELL,
            InterferometerConfig(alpha=a, beta=b, chi1=RationalChi(1, 4)),
            lambda: _case_single_cell_half(a, b),
        ),
        ReferenceCase(
            "single_cell_quarter",
            "single cell at chi = pi/4: sixteen-branch entangled state",
            PipelineKind.SINGLE_CELL,
            InterferometerConfig(alpha=a, beta=b, chi1=RationalChi(1, 8)),
            lambda: _case_single_cell_quarter(a, b),
        ),
    ]


def list_reference_cases() -> list[ReferenceCase]:
    """All closed-form regression cases, in a stable order."""
    return _reference_cases()


def reference_output(case_id: str) -> TwoModeCoherentSuperposition:
    """Closed-form output for a named regression case."""
    for case in _reference_cases():
        if case.case_id == case_id:
            return case.superposition()
    known = ", ".join(c.case_id for c in _reference_cases())
    raise KeyError(f"unknown reference case {case_id!r}; known: {known}")
