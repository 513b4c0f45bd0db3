"""Finite coherent-state decompositions for rational Kerr strengths.

A Kerr cell with chi = 2 pi r/s turns a coherent state into a finite
superposition of coherent states. The machinery here finds the minimal
grid size N, solves for the superposition coefficients by discrete
Fourier transform, and synthesizes Fock-space states from the resulting
term lists so they can be compared against direct numeric evolution.

Coefficient conventions (pinned to the Fock-evolution oracle):
    Kerr(chi, tau=0)|a> has amplitudes  coh(a)_k * e^{i chi k} e^{-i chi k²}.
    The rotation e^{i chi k} is folded into the branch amplitudes, so the
    residual phase e^{-i chi k²} is expanded on the full-circle grid
    theta_n = 2 pi n / N:
        e^{-i chi k²} = sum_n c_n e^{i theta_n k},
        c_n = (1/N) sum_k e^{-i chi k²} e^{-i theta_n k},
    giving  Kerr|a> = sum_n c_n |a e^{i chi} e^{i theta_n}>.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import pi

import numpy as np

from .fock import ModeState, TwoModeState, coherent_amplitudes

#: Superposition terms with |coefficient| below this are dropped.
COEFF_PRUNE_TOL = 1e-14


@dataclass(frozen=True)
class RationalChi:
    """Exact rational nonlinearity chi = 2 pi r/s, in lowest terms."""

    r: int
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("denominator s must be positive")
        frac = Fraction(self.r, self.s)
        # chi only matters mod 2 pi for the diagonal phases
        object.__setattr__(self, "r", frac.numerator % frac.denominator)
        object.__setattr__(self, "s", frac.denominator)

    @property
    def chi(self) -> float:
        return 2.0 * pi * self.r / self.s

    @property
    def period(self) -> int:
        return minimal_period(self)


def minimal_period(chi: RationalChi) -> int:
    """Smallest N >= 1 with (r/s)(n+N)² = (r/s)n² mod 1 for all n.

    Equivalent integer conditions: s | 2rN and s | rN². Found by scan;
    N = s always works, so the scan terminates within s steps.
    """
    r, s = chi.r, chi.s
    for n in range(1, s + 1):
        if (2 * r * n) % s == 0 and (r * n * n) % s == 0:
            return n
    return s  # unreachable


def reduced_period(chi: RationalChi) -> int:
    """Minimal N with s | 4rN: period of the cross phase e^{-4 i chi k l}."""
    r, s = chi.r, chi.s
    for n in range(1, s + 1):
        if (4 * r * n) % s == 0:
            return n
    return s  # unreachable


@dataclass(frozen=True)
class CoherentSuperposition:
    """Finite weighted sum of single-mode coherent states."""

    terms: tuple[tuple[complex, complex], ...]  # (coefficient, amplitude)

    def to_jsonable(self) -> list:
        return [
            {"coeff": [c.real, c.imag], "alpha": [a.real, a.imag]}
            for c, a in self.terms
        ]


@dataclass(frozen=True)
class TwoModeCoherentSuperposition:
    """Finite weighted sum of product coherent states."""

    terms: tuple[tuple[complex, complex, complex], ...]  # (coeff, amp_a, amp_b)

    def to_jsonable(self) -> list:
        return [
            {
                "coeff": [c.real, c.imag],
                "alpha": [a.real, a.imag],
                "beta": [b.real, b.imag],
            }
            for c, a, b in self.terms
        ]


def _exact_phase_grid(r: int, s: int, exponents: np.ndarray) -> np.ndarray:
    """exp(-2 pi i (r * exponents mod s) / s) with integer reduction."""
    red = np.mod(r * exponents, s)
    return np.exp(-2j * pi * red / s)


def shear_coefficients(chi: RationalChi) -> np.ndarray:
    """Grid coefficients c_n, n = 0..N-1, for the single-mode shear.

    Synthesizing sum_n c_n |a e^{i chi} e^{2 pi i n/N}> reproduces the
    tau=0 Kerr evolution of |a> exactly.
    """
    n_period = minimal_period(chi)
    k = np.arange(n_period)
    target = _exact_phase_grid(chi.r, chi.s, k * k)
    # c = (1/N) sum_k target_k e^{-2 pi i k n / N}  ==  FFT
    return np.fft.fft(target) / n_period


def sheared_state_analytic(alpha: complex, chi: RationalChi) -> CoherentSuperposition:
    """Kerr(chi, tau=0)|alpha> as a finite coherent superposition."""
    coeffs = shear_coefficients(chi)
    n_period = len(coeffs)
    rot = np.exp(1j * (chi.chi + 2.0 * pi * np.arange(n_period) / n_period))
    terms = tuple(
        (complex(c), complex(alpha * w))
        for c, w in zip(coeffs, rot)
        if abs(c) > COEFF_PRUNE_TOL
    )
    return CoherentSuperposition(terms)


def interferometer_output_analytic(
    alpha: complex, chi1: RationalChi, chi2: RationalChi, delta: float
) -> TwoModeCoherentSuperposition:
    """Finite-superposition output of the nonlinear Mach-Zehnder for
    input |alpha>|0>.

    Each arm's shear contributes one phase grid; the recombining
    beamsplitter maps grid phases (theta_m, phi_n) to branch amplitudes
        a' = alpha (e^{i theta_m} - e^{i(delta + phi_n)}) / 2,
        b' = i alpha (e^{i theta_m} + e^{i(delta + phi_n)}) / 2.
    """
    c1 = shear_coefficients(chi1)
    c2 = shear_coefficients(chi2)
    th = chi1.chi + 2.0 * pi * np.arange(len(c1)) / len(c1)
    ph = chi2.chi + 2.0 * pi * np.arange(len(c2)) / len(c2) + delta
    terms = []
    for cm, t in zip(c1, th):
        for cn, p in zip(c2, ph):
            coeff = cm * cn
            if abs(coeff) <= COEFF_PRUNE_TOL:
                continue
            amp_a = alpha * (np.exp(1j * t) - np.exp(1j * p)) / 2.0
            amp_b = 1j * alpha * (np.exp(1j * t) + np.exp(1j * p)) / 2.0
            terms.append((complex(coeff), complex(amp_a), complex(amp_b)))
    return TwoModeCoherentSuperposition(tuple(terms))


def two_mode_coefficients(chi: RationalChi, kind: str) -> np.ndarray:
    """Coefficient matrix c_mn for the two-mode Kerr decompositions.

    kind="reduced": cross phase only, branches (a e^{2 pi i m/N},
    b e^{2 pi i n/N}) with N = reduced_period(chi).

    kind="full": full cell at tau=0, branches carry the extra rotation
    e^{i chi} per mode and N = minimal_period(chi).
    """
    if kind == "reduced":
        n_period = reduced_period(chi)
        k = np.arange(n_period)
        target = _exact_phase_grid(chi.r, chi.s, 4 * np.outer(k, k))
    elif kind == "full":
        n_period = minimal_period(chi)
        k = np.arange(n_period)
        target = _exact_phase_grid(
            chi.r,
            chi.s,
            np.add.outer(k * k, k * k) + 4 * np.outer(k, k),
        )
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return np.fft.fft2(target) / n_period**2


def _two_mode_superposition(
    alpha: complex, beta: complex, coeffs: np.ndarray, rotation: complex
) -> TwoModeCoherentSuperposition:
    n_period = coeffs.shape[0]
    grid = rotation * np.exp(2j * pi * np.arange(n_period) / n_period)
    terms = tuple(
        (complex(coeffs[m, n]), complex(alpha * grid[m]), complex(beta * grid[n]))
        for m in range(n_period)
        for n in range(n_period)
        if abs(coeffs[m, n]) > COEFF_PRUNE_TOL
    )
    return TwoModeCoherentSuperposition(terms)


def three_cell_output_analytic(
    alpha: complex, beta: complex, chi: RationalChi
) -> TwoModeCoherentSuperposition:
    """Output of the shear-cancelled (three-cell) interaction on |a>|b>."""
    return _two_mode_superposition(
        alpha, beta, two_mode_coefficients(chi, "reduced"), 1.0
    )


def single_cell_output_analytic(
    alpha: complex, beta: complex, chi: RationalChi
) -> TwoModeCoherentSuperposition:
    """Output of a single two-mode Kerr cell (tau=0) on |a>|b>."""
    return _two_mode_superposition(
        alpha, beta, two_mode_coefficients(chi, "full"), np.exp(1j * chi.chi)
    )


def synthesize_fock(
    sup: CoherentSuperposition | TwoModeCoherentSuperposition, n_max: int
) -> ModeState | TwoModeState:
    """Turn a coherent superposition into a truncated Fock-space state."""
    if isinstance(sup, CoherentSuperposition):
        amps = np.zeros(n_max + 1, dtype=complex)
        for c, a in sup.terms:
            amps += c * coherent_amplitudes(a, n_max)
        return ModeState(amps)
    grid = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    for c, a, b in sup.terms:
        grid += c * np.outer(coherent_amplitudes(a, n_max), coherent_amplitudes(b, n_max))
    return TwoModeState(grid)


def coherent_overlap_magnitude(a: complex, b: complex) -> float:
    """|<a|b>| = exp(-|a-b|²/2) in closed form."""
    return float(np.exp(-abs(a - b) ** 2 / 2.0))


def branch_overlaps(sup: TwoModeCoherentSuperposition | CoherentSuperposition):
    """Pairwise coherent-branch overlap magnitudes, per mode.

    For two-mode superpositions returns a list of
    (i, j, |<a_i|a_j>|, |<b_i|b_j>|) over all unordered term pairs;
    single-mode superpositions drop the last entry. Small overlaps in
    both modes mark the superposition as a genuinely entangled one.
    """
    if len(sup.terms) < 2:
        raise ValueError("branch_overlaps needs at least 2 terms")
    out = []
    for i in range(len(sup.terms)):
        for j in range(i + 1, len(sup.terms)):
            ti, tj = sup.terms[i], sup.terms[j]
            row = (i, j) + tuple(
                coherent_overlap_magnitude(x, y) for x, y in zip(ti[1:], tj[1:])
            )
            out.append(row)
    return out
