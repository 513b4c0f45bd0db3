"""Weak nonlinearity, bright input: the interferometer output squeezes.

The closed-form quadratic ("shear") approximation reproduces the squeezed
second moments of the exact output, but its displacement parameters put the
mean field at the wrong phase-space angle, so its state fidelity against
the exact cell is poor. Both facts are shown below.

Run:  python3 demos/squeezing_limit.py
"""

from nlmzi import (
    InterferometerConfig,
    KerrParams,
    PipelineKind,
    coherent_state,
    default_n_max,
    fidelity,
    kerr_apply,
    shear_equation_residuals,
    shear_params,
    simulate_numeric,
)
from nlmzi.squeezing import approx_sheared_state, minimum_quadrature_variance

ETA = 1.0


def main() -> None:
    print(f"fixed eta = chi * alpha^2 = {ETA}\n")
    p = shear_params(8.0, ETA / 64)
    print(f"shear parameters at alpha = 8: epsilon = {p.epsilon:.5f}, "
          f"sigma = {p.sigma:.5f}")
    print(f"simultaneous-equation residuals: "
          f"{max(shear_equation_residuals(8.0, ETA / 64)):.2e}\n")

    header = (f"  {'alpha':>6s} {'exact min var':>14s} {'approx min var':>15s} "
              f"{'state fidelity':>15s}")
    print("single Kerr cell, exact vs quadratic approximation:")
    print(header)
    for alpha in (4.0, 6.0, 8.0):
        chi = ETA / alpha**2
        n_max = default_n_max(alpha)
        exact = kerr_apply(KerrParams(chi), coherent_state(alpha, n_max))
        approx = approx_sheared_state(alpha, chi, n_max)
        _, v_exact = minimum_quadrature_variance(exact)
        _, v_approx = minimum_quadrature_variance(approx)
        print(f"  {alpha:6.1f} {v_exact:14.5f} {v_approx:15.5f} "
              f"{fidelity(approx, exact):15.3e}")
    print("  (vacuum variance is 0.25; values below it mean squeezing)\n")

    print("exact interferometer output (chi1 = chi2, delta = 0), port a':")
    print(f"  {'alpha':>6s} {'theta_min':>10s} {'min variance':>13s}")
    for alpha in (4.0, 6.0, 8.0):
        chi = ETA / alpha**2
        out = simulate_numeric(
            InterferometerConfig(alpha=alpha, chi1=chi, chi2=chi),
            PipelineKind.MACH_ZEHNDER,
        )
        theta, v = minimum_quadrature_variance(out, 0)
        print(f"  {alpha:6.1f} {theta:10.4f} {v:13.5f}")


if __name__ == "__main__":
    main()
