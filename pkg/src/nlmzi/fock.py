"""Truncated Fock-space representation of pure one- and two-mode states.

States are plain complex amplitude arrays indexed by photon number,
wrapped in small immutable value types. All operations are pure
functions returning new states; nothing here mutates its inputs.

Conventions:
    |alpha> = D(alpha)|0>,  D(alpha) = exp(alpha a† - alpha* a)
    S(eps)  = exp[(eps* a² - eps a†²)/2]
    R(sig)  = exp(i sig a†a)
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

#: Declared truncation tolerance: states produced by construction or
#: evolution keep squared norm within [1 - TAIL_TOL, 1].
TAIL_TOL = 1e-10

#: Largest squeeze magnitude for which the truncated exponential is
#: guaranteed to converge at the default truncation sizes.
MAX_SQUEEZE = 5.0


class TruncationWarning(UserWarning):
    """Norm has leaked past the truncation boundary beyond tolerance."""


def default_n_max(amplitude: complex) -> int:
    """Truncation bound for coherent amplitudes up to ``|amplitude|``.

    Poisson-tail rule with a wide safety margin: n_max >= |a|^2 + 8|a| + 10.
    """
    a = abs(amplitude)
    return int(np.ceil(a * a + 8.0 * a + 10.0))


def _check_finite(amps: np.ndarray) -> None:
    if not np.all(np.isfinite(amps.view(float))):
        raise ValueError("state amplitudes must be finite (no NaN/inf)")


@dataclass(frozen=True)
class ModeState:
    """Single-mode pure state: amplitudes[n] = <n|psi>, n = 0..n_max."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.ndim != 1 or amps.size == 0:
            raise ValueError("ModeState needs a 1-D amplitude vector")
        _check_finite(amps)
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_max(self) -> int:
        return self.amplitudes.size - 1

    def squared_norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


@dataclass(frozen=True)
class TwoModeState:
    """Two-mode pure state: amplitudes[m, n] = <m, n|psi>, shared n_max."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.ndim != 2 or amps.shape[0] != amps.shape[1] or amps.size == 0:
            raise ValueError("TwoModeState needs a square amplitude grid")
        _check_finite(amps)
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_max(self) -> int:
        return self.amplitudes.shape[0] - 1

    def squared_norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def _warn_truncation(sq_norm: float, tol: float, what: str) -> None:
    if sq_norm < 1.0 - tol:
        warnings.warn(
            f"{what}: norm deficit {1.0 - sq_norm:.3e} exceeds {tol:.1e}; "
            "increase n_max",
            TruncationWarning,
            stacklevel=3,
        )


def coherent_amplitudes(alpha: complex, n_max: int) -> np.ndarray:
    """Fock expansion of D(alpha)|0>: exp(-|a|²/2) a^n / sqrt(n!)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    amps = np.zeros(n_max + 1, dtype=complex)
    amps[0] = 1.0
    for n in range(1, n_max + 1):
        amps[n] = amps[n - 1] * alpha / np.sqrt(n)
    return np.exp(-abs(alpha) ** 2 / 2.0) * amps


def vacuum(n_max: int) -> ModeState:
    amps = np.zeros(n_max + 1, dtype=complex)
    amps[0] = 1.0
    return ModeState(amps)


def coherent_state(alpha: complex, n_max: int) -> ModeState:
    """Coherent state |alpha> truncated at n_max.

    Warns (does not fail) when the truncated tail exceeds TAIL_TOL.
    """
    amps = coherent_amplitudes(alpha, n_max)
    _warn_truncation(float(np.sum(np.abs(amps) ** 2)), TAIL_TOL, "coherent_state")
    return ModeState(amps)


def product_state(psi_a: ModeState, psi_b: ModeState) -> TwoModeState:
    if psi_a.n_max != psi_b.n_max:
        raise ValueError("product_state needs matching n_max")
    return TwoModeState(np.outer(psi_a.amplitudes, psi_b.amplitudes))


def _ladder(n_max: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1.0, n_max + 1)), 1)


def displacement_matrix(alpha: complex, n_max: int) -> np.ndarray:
    """Truncated D(alpha) = expm(alpha a† - alpha* a). Unitary by construction."""
    a = _ladder(n_max)
    return expm(alpha * a.conj().T - np.conj(alpha) * a)


def squeeze_matrix(epsilon: complex, n_max: int) -> np.ndarray:
    """Truncated S(eps) = expm[(eps* a² - eps a†²)/2]."""
    if abs(epsilon) > MAX_SQUEEZE:
        raise ValueError(
            f"|epsilon| = {abs(epsilon):.3g} exceeds supported maximum "
            f"{MAX_SQUEEZE}; the truncated exponential would not converge"
        )
    a = _ladder(n_max)
    aa = a @ a
    return expm((np.conj(epsilon) * aa - epsilon * aa.conj().T) / 2.0)


def apply_displacement(alpha: complex, psi: ModeState) -> ModeState:
    out = displacement_matrix(alpha, psi.n_max) @ psi.amplitudes
    _warn_truncation(
        float(np.sum(np.abs(out) ** 2)) / max(psi.squared_norm(), TAIL_TOL),
        10 * TAIL_TOL,
        "apply_displacement",
    )
    return ModeState(out)


def apply_squeeze(epsilon: complex, psi: ModeState) -> ModeState:
    out = squeeze_matrix(epsilon, psi.n_max) @ psi.amplitudes
    _warn_truncation(
        float(np.sum(np.abs(out) ** 2)) / max(psi.squared_norm(), TAIL_TOL),
        10 * TAIL_TOL,
        "apply_squeeze",
    )
    return ModeState(out)


def apply_rotation(sigma: float, psi: ModeState) -> ModeState:
    """R(sigma)|psi>: multiply amplitudes[n] by exp(i sigma n)."""
    n = np.arange(psi.n_max + 1)
    return ModeState(psi.amplitudes * np.exp(1j * sigma * n))


def overlap(psi, phi) -> complex:
    """Inner product <psi|phi>; phase-sensitive."""
    if psi.amplitudes.shape != phi.amplitudes.shape:
        raise ValueError("overlap needs matching n_max")
    return complex(np.vdot(psi.amplitudes, phi.amplitudes))


def fidelity(psi, phi) -> float:
    """|<psi|phi>|²; invariant under global phases of either argument."""
    return abs(overlap(psi, phi)) ** 2


def photon_number_distribution(psi: ModeState) -> np.ndarray:
    return np.abs(psi.amplitudes) ** 2


def mode_marginal_distribution(psi: TwoModeState, mode: int) -> np.ndarray:
    """Photon number distribution of one mode (0 or 1) of a two-mode state."""
    p = np.abs(psi.amplitudes) ** 2
    return p.sum(axis=1 - mode)


def entanglement_entropy(psi: TwoModeState) -> float:
    """Von Neumann entropy (nats) of either reduced state of a pure state.

    Computed from the singular values of the amplitude grid (Schmidt
    coefficients); 0 for product states.
    """
    s = np.linalg.svd(psi.amplitudes, compute_uv=False)
    p = s**2
    p = p[p > 1e-18]
    p = p / p.sum()
    return float(-np.sum(p * np.log(p)))


def husimi_q(psi: ModeState, beta: complex) -> float:
    """Q(beta) = |<beta|psi>|² / pi for a pure single-mode state."""
    amp = np.vdot(coherent_amplitudes(beta, psi.n_max), psi.amplitudes)
    return float(abs(amp) ** 2 / np.pi)


def port_husimi_q(psi: TwoModeState, mode: int, beta: complex) -> float:
    """Q function of one port of a two-mode state: <beta|rho_mode|beta>/pi."""
    grid = psi.amplitudes if mode == 0 else psi.amplitudes.T
    v = coherent_amplitudes(beta, psi.n_max).conj() @ grid
    return float(np.sum(np.abs(v) ** 2) / np.pi)


def mode_moments(psi: TwoModeState, mode: int) -> tuple[complex, complex, float]:
    """First and second ladder moments of one port: (<a>, <a²>, <a†a>)."""
    grid = psi.amplitudes if mode == 0 else psi.amplitudes.T
    n = np.arange(psi.n_max + 1)
    m1 = complex(np.vdot(grid[:-1, :], grid[1:, :] * np.sqrt(n[1:])[:, None]))
    m2 = complex(
        np.vdot(grid[:-2, :], grid[2:, :] * np.sqrt(n[2:] * (n[2:] - 1))[:, None])
    )
    nbar = float(np.sum(n[:, None] * np.abs(grid) ** 2))
    return m1, m2, nbar
