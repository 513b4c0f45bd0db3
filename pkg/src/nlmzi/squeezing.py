"""Weak-nonlinearity (large-amplitude) squeezing approximation.

A Kerr cell acting on a bright coherent state |alpha> shears the phase-space
distribution; to quadratic order in the fluctuation operators the output is
a displaced doubly-squeezed vacuum,

    exp(-i Lambda) D(alpha + delta) S(epsilon) S(-e^{2 i sigma} epsilon) |0>,

with all parameters fixed by the closed-form solution of three simultaneous
equations in (epsilon, sigma, rho). The solution exists only for
|eta| = |chi alpha^2| > 1/2; at the boundary the inverse hyperbolic tangent
diverges and sigma vanishes.

For the interferometer the same construction applies per arm with
omega_1 = alpha/sqrt(2), omega_2 = i alpha/sqrt(2). With equal arm
nonlinearities the two squeeze parameters are anti-paired
(epsilon_2 = -epsilon_1), which lets the recombining beamsplitter commute
through the squeezes, so the approximate output is an exact product state
of the two ports.

Note on the port displacements: the closed-form expressions Gamma_1/Gamma_2
(kept in ArmApproxParams.big_gamma for reference) divide by
sinh^2|epsilon_1| and fail an operator-identity cross-check against direct
beamsplitter transport of the arm displacements. The gamma used to build
states is therefore the exact transport

    gamma_1 = [(omega_1+delta_1) + i(omega_2+delta_2)] / sqrt(2),
    gamma_2 = [(omega_2+delta_2) + i(omega_1+delta_1)] / sqrt(2),

which reproduces the numeric pipeline.
"""

from __future__ import annotations

from cmath import exp as cexp
from dataclasses import dataclass
from math import atanh, cosh, sin, sinh, sqrt

import numpy as np

from . import fock
from .fock import ModeState, TwoModeState


class DomainError(ValueError):
    """Shear-approximation parameters requested outside |eta| > 1/2."""


@dataclass(frozen=True)
class ShearApproxParams:
    """Closed-form parameters of the quadratic shear approximation."""

    eta: complex
    epsilon: complex
    sigma: float
    rho: complex
    delta: complex
    lam: float


def shear_params(alpha: complex, chi: float) -> ShearApproxParams:
    """Solve the quadratic-approximation equations for a single Kerr cell.

    Raises DomainError unless |eta| = |chi alpha^2| > 1/2.
    """
    alpha = complex(alpha)
    eta = chi * alpha**2
    abs_eta = abs(eta)
    if abs_eta <= 0.5:
        raise DomainError(
            f"|eta| = |chi * alpha**2| = {abs_eta:.6g} <= 1/2; the shear "
            "approximation requires |eta| > 1/2 (atanh argument < 1)"
        )
    epsilon = 0.5 * (eta.conjugate() / abs_eta) * atanh(1.0 / (2.0 * abs_eta))
    sigma = -4.0 * abs_eta**2 * sqrt(1.0 - 1.0 / (4.0 * abs_eta**2))
    ae = abs(epsilon)
    eps_dir = epsilon / ae
    rho = (2.0 * alpha.conjugate() * eta / sigma) * cosh(ae) - (
        2.0 * alpha * eta.conjugate() / sigma
    ) * eps_dir.conjugate() * sinh(ae)
    delta = cosh(ae) * rho * (1.0 - cexp(1j * sigma)) - eps_dir * sinh(
        ae
    ) * rho.conjugate() * (1.0 - cexp(-1j * sigma))
    lam = (
        chi * abs(alpha) ** 4
        + sigma * (sinh(ae) ** 2 + abs(alpha) ** 2)
        + abs(rho) ** 2 * sin(sigma)
        - (alpha * delta.conjugate()).imag
    )
    return ShearApproxParams(eta, epsilon, sigma, rho, delta, lam)


def shear_equation_residuals(
    alpha: complex, chi: float, params: ShearApproxParams | None = None
) -> tuple[float, float, float]:
    """Relative residuals of the three simultaneous equations.

    The equations read
        sigma cosh 2|eps|                                  = -4 |eta|^2
        sigma (eps/|eps|) sinh 2|eps|                      = -2 eta*
        sigma (-rho* cosh|eps| - rho (eps/|eps|) sinh|eps|) = -2 alpha eta*
    Each residual is |lhs - rhs| / max(|rhs|, 1).
    """
    p = params if params is not None else shear_params(alpha, chi)
    ae = abs(p.epsilon)
    eps_dir = p.epsilon / ae
    eta_c = p.eta.conjugate()
    pairs = (
        (p.sigma * cosh(2 * ae), -4.0 * abs(p.eta) ** 2),
        (p.sigma * eps_dir * sinh(2 * ae), -2.0 * eta_c),
        (
            p.sigma
            * (-p.rho.conjugate() * cosh(ae) - p.rho * eps_dir * sinh(ae)),
            -2.0 * complex(alpha) * eta_c,
        ),
    )
    return tuple(abs(lhs - rhs) / max(abs(rhs), 1.0) for lhs, rhs in pairs)


def _displaced_double_squeezed(
    displacement: complex,
    epsilon: complex,
    sigma: float,
    n_max: int,
) -> ModeState:
    psi = fock.vacuum(n_max)
    psi = fock.apply_squeeze(-cexp(2j * sigma) * epsilon, psi)
    psi = fock.apply_squeeze(epsilon, psi)
    return fock.apply_displacement(displacement, psi)


def approx_sheared_state(
    alpha: complex, chi: float, n_max: int | None = None
) -> ModeState:
    """Quadratic approximation to a Kerr cell acting on |alpha>."""
    if n_max is None:
        n_max = fock.default_n_max(abs(alpha))
    p = shear_params(alpha, chi)
    psi = _displaced_double_squeezed(alpha + p.delta, p.epsilon, p.sigma, n_max)
    return ModeState(np.exp(-1j * p.lam) * psi.amplitudes)


@dataclass(frozen=True)
class ArmApproxParams:
    """Per-arm approximation bundle for the interferometer.

    gamma is the output-port displacement from exact beamsplitter transport;
    big_gamma evaluates the printed closed-form intermediate, retained for
    reference (it fails the transport cross-check; see module docstring).
    """

    omega: complex
    shear: ShearApproxParams
    gamma: complex
    big_gamma: complex


def arm_params(
    alpha: complex, chi1: float, chi2: float
) -> tuple[ArmApproxParams, ArmApproxParams]:
    """Shear parameters for each interferometer arm after the first splitter."""
    alpha = complex(alpha)
    omega1 = alpha / sqrt(2.0)
    omega2 = 1j * alpha / sqrt(2.0)
    try:
        p1 = shear_params(omega1, chi1)
    except DomainError as exc:
        raise DomainError(f"arm 1: {exc}") from None
    try:
        p2 = shear_params(omega2, chi2)
    except DomainError as exc:
        raise DomainError(f"arm 2: {exc}") from None

    d1 = omega1 + p1.delta
    d2 = omega2 + p2.delta
    gamma1 = (d1 + 1j * d2) / sqrt(2.0)
    gamma2 = (d2 + 1j * d1) / sqrt(2.0)

    ae = abs(p1.epsilon)
    eps_dir = p1.epsilon / ae
    sh2 = sinh(ae) ** 2
    big1 = (
        cosh(ae) * d1
        + eps_dir * d1.conjugate()
        + 1j * (cosh(ae) * d2 + cexp(1j * p1.sigma) * eps_dir * d2.conjugate())
    ) / sh2
    big2 = (
        1j * (cosh(ae) * d1 + eps_dir * d1.conjugate())
        + cosh(ae) * d2
        + cexp(1j * p1.sigma) * eps_dir * d2.conjugate()
    ) / sh2

    arm1 = ArmApproxParams(omega1, p1, gamma1, big1)
    arm2 = ArmApproxParams(omega2, p2, gamma2, big2)
    return arm1, arm2


def approx_interferometer_output(
    alpha: complex, chi: float, n_max: int | None = None
) -> TwoModeState:
    """Product-state approximation to the equal-nonlinearity interferometer.

    Valid for chi1 = chi2 = chi; the anti-paired arm squeezes commute with
    the recombining beamsplitter, so each port carries an independent
    displaced doubly-squeezed vacuum.
    """
    if n_max is None:
        n_max = fock.default_n_max(abs(alpha))
    arm1, arm2 = arm_params(alpha, chi, chi)
    p1, p2 = arm1.shear, arm2.shear
    psi_a = _displaced_double_squeezed(arm1.gamma, p1.epsilon, p1.sigma, n_max)
    psi_b = _displaced_double_squeezed(arm2.gamma, p2.epsilon, p2.sigma, n_max)
    psi = fock.product_state(psi_a, psi_b)
    phase = np.exp(-1j * (p1.lam + p2.lam))
    return TwoModeState(phase * psi.amplitudes)


def quadrature_variance(psi: ModeState, theta: float) -> float:
    """Variance of x_theta = (a e^{-i theta} + a^dag e^{i theta}) / 2.

    Vacuum value is 1/4 in this convention.
    """
    amps = psi.amplitudes
    n = np.arange(amps.size)
    mean_n = float(np.sum(n * np.abs(amps) ** 2))
    root = np.sqrt(n[1:])
    a_mean = complex(np.sum(amps[:-1].conjugate() * root * amps[1:]))
    if amps.size > 2:
        a2_mean = complex(
            np.sum(amps[:-2].conjugate() * root[:-1] * root[1:] * amps[2:])
        )
    else:
        a2_mean = 0.0
    phase = cexp(-2j * theta)
    return (
        0.25
        + 0.5 * (mean_n - abs(a_mean) ** 2)
        + 0.5 * (phase * (a2_mean - a_mean**2)).real
    )


def port_quadrature_variance(psi: TwoModeState, mode: int, theta: float) -> float:
    """Quadrature variance of one output port of a two-mode state."""
    a_mean, a2_mean, mean_n = fock.mode_moments(psi, mode)
    phase = cexp(-2j * theta)
    return (
        0.25
        + 0.5 * (mean_n - abs(a_mean) ** 2)
        + 0.5 * (phase * (a2_mean - a_mean**2)).real
    )


def minimum_quadrature_variance(
    psi: ModeState | TwoModeState, mode: int = 0, points: int = 360
) -> tuple[float, float]:
    """Scan theta over a uniform grid; return (theta_min, variance_min)."""
    thetas = np.linspace(0.0, np.pi, points, endpoint=False)
    if isinstance(psi, TwoModeState):
        values = [port_quadrature_variance(psi, mode, t) for t in thetas]
    else:
        values = [quadrature_variance(psi, t) for t in thetas]
    i = int(np.argmin(values))
    return float(thetas[i]), float(values[i])
