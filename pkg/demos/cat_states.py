"""Kerr-cell cat states: drive a coherent state through a nonlinear cell
at rational nonlinearity and watch it split into a finite superposition
of coherent states.

Run:  python3 demos/cat_states.py
"""

import numpy as np

from nlmzi import (
    KerrParams,
    RationalChi,
    coherent_state,
    default_n_max,
    fidelity,
    husimi_q,
    kerr_apply,
    sheared_state_analytic,
    synthesize_fock,
)

ALPHA = 2.0


def show(chi: RationalChi) -> None:
    n_max = default_n_max(ALPHA)
    exact = kerr_apply(KerrParams(chi.chi), coherent_state(ALPHA, n_max))
    sup = sheared_state_analytic(ALPHA, chi)
    fid = fidelity(synthesize_fock(sup, n_max), exact)
    print(f"chi = 2*pi*{chi.r}/{chi.s}: {len(sup.terms)} coherent branches, "
          f"analytic/numeric fidelity {fid:.15f}")
    for c, a in sup.terms:
        print(f"    coeff {c:+.4f}   branch amplitude {a:+.4f}")


def main() -> None:
    print(f"input: coherent state, alpha = {ALPHA}\n")
    for r, s in ((1, 4), (1, 8), (1, 3), (3, 8)):
        show(RationalChi(r, s))
        print()

    # the two-branch cat sits on opposite sides of phase space: sample
    # the Husimi Q function along the imaginary axis
    n_max = default_n_max(ALPHA)
    cat = kerr_apply(KerrParams(RationalChi(1, 4).chi), coherent_state(ALPHA, n_max))
    print("Husimi Q of the chi = pi/2 cat along the imaginary axis:")
    for y in np.linspace(-3, 3, 13):
        q = husimi_q(cat, 1j * y)
        print(f"    beta = {y:+.1f}i   Q = {q:.4f}   " + "#" * int(120 * q))


if __name__ == "__main__":
    main()
