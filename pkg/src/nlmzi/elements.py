"""Unitary optical elements on truncated Fock states.

Four elements: the 50/50 beamsplitter, the inter-arm delay, the
single-mode Kerr cell, and the two-mode Kerr cell (full and reduced
forms). All are pure functions; diagonal phases use argument reduction
modulo 2 pi.

Conventions:
    B = exp(i pi [a†b + ab†]/4),  B |alpha>|beta> = |(alpha+i beta)/sqrt2>
                                                    |(beta+i alpha)/sqrt2>
    Kerr(chi, tau) = exp(-i tau n - i chi n(n-1))        (normal ordering)
    Delay(delta)   = exp(i delta b†b)
    TwoModeKerr(chi, tau) = exp(-i tau (m+n)
                                - i chi [m(m-1) + n(n-1) + 4 m n])
    ReducedTwoModeKerr(chi) = exp(-4 i chi m n)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .fock import ModeState, TwoModeState

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class KerrParams:
    """Kerr cell parameters: nonlinear phase chi and linear phase tau."""

    chi: float
    tau: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.chi) and np.isfinite(self.tau)):
            raise ValueError("KerrParams must be finite")


@dataclass(frozen=True)
class DelayParams:
    delta: float

    def __post_init__(self):
        if not np.isfinite(self.delta):
            raise ValueError("DelayParams must be finite")


def _diag_phase(values: np.ndarray) -> np.ndarray:
    """exp(-i values) with arguments reduced mod 2 pi first."""
    return np.exp(-1j * np.mod(values, TWO_PI))


# Beamsplitter blocks per (n_max, total photon number K). The generator
# a†b + ab† conserves K; each block is a real symmetric tridiagonal
# matrix exponentiated exactly through its eigendecomposition.
_BS_BLOCKS: dict[tuple[int, int], np.ndarray] = {}


def _bs_block(n_max: int, total: int) -> np.ndarray:
    key = (n_max, total)
    block = _BS_BLOCKS.get(key)
    if block is None:
        lo, hi = max(0, total - n_max), min(total, n_max)
        m = np.arange(lo, hi + 1)
        off = np.sqrt((m[:-1] + 1.0) * (total - m[:-1]))
        if len(m) == 1:
            block = np.array([[1.0 + 0j]])
        else:
            w, v = eigh_tridiagonal(np.zeros(len(m)), off)
            block = (v * np.exp(1j * np.pi * w / 4.0)) @ v.T
        _BS_BLOCKS[key] = block
    return block


def beamsplitter_apply(psi: TwoModeState) -> TwoModeState:
    """50/50 beamsplitter, block-diagonal over total photon number."""
    n_max = psi.n_max
    out = np.zeros_like(psi.amplitudes)
    for total in range(2 * n_max + 1):
        lo, hi = max(0, total - n_max), min(total, n_max)
        m = np.arange(lo, hi + 1)
        out[m, total - m] = _bs_block(n_max, total) @ psi.amplitudes[m, total - m]
    return TwoModeState(out)


def delay_apply(params: DelayParams, psi: TwoModeState) -> TwoModeState:
    n = np.arange(psi.n_max + 1)
    phases = np.exp(1j * np.mod(params.delta * n, TWO_PI))
    return TwoModeState(psi.amplitudes * phases[None, :])


def kerr_phases(chi: float, tau: float, n_max: int) -> np.ndarray:
    n = np.arange(n_max + 1, dtype=float)
    return _diag_phase(tau * n + chi * n * (n - 1.0))


def kerr_apply(params: KerrParams, psi: ModeState) -> ModeState:
    """Single-mode Kerr cell; leaves the photon distribution unchanged."""
    return ModeState(psi.amplitudes * kerr_phases(params.chi, params.tau, psi.n_max))


def two_mode_kerr_apply(params: KerrParams, psi: TwoModeState) -> TwoModeState:
    """Full two-mode Kerr cell, including the cross-phase 4 chi m n.

    Diagonal in both photon numbers, so both marginal distributions are
    preserved (the QND property of the cross interaction).
    """
    n = np.arange(psi.n_max + 1, dtype=float)
    shear = params.tau * n + params.chi * n * (n - 1.0)
    arg = shear[:, None] + shear[None, :] + 4.0 * params.chi * np.outer(n, n)
    return TwoModeState(psi.amplitudes * _diag_phase(arg))


def reduced_two_mode_kerr_apply(chi: float, psi: TwoModeState) -> TwoModeState:
    """Cross-phase interaction only: exp(-4 i chi m n).

    Equals the full two-mode cell with the single-mode shears cancelled
    by inverse-shear phases exp(+i chi k(k-1)) on each mode.
    """
    n = np.arange(psi.n_max + 1, dtype=float)
    return TwoModeState(psi.amplitudes * _diag_phase(4.0 * chi * np.outer(n, n)))
