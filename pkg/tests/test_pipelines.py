import numpy as np
import pytest
from math import pi

from nlmzi import ecs, fock, pipelines
from nlmzi.ecs import RationalChi
from nlmzi.pipelines import (
    InterferometerConfig,
    PipelineKind,
    UnsupportedParametersError,
)


@pytest.mark.parametrize("case", pipelines.list_reference_cases(),
                         ids=lambda c: c.case_id)
def test_reference_cases_match_numeric(case):
    numeric = pipelines.simulate_numeric(case.config, case.kind)
    n_max = case.config.resolved_n_max()
    closed_form = ecs.synthesize_fock(case.superposition(), n_max)
    assert fock.fidelity(closed_form, numeric) > 1 - 1e-10


@pytest.mark.parametrize("case", pipelines.list_reference_cases(),
                         ids=lambda c: c.case_id)
def test_reference_cases_match_analytic_path(case):
    analytic = pipelines.simulate_analytic(case.config, case.kind)
    n_max = case.config.resolved_n_max()
    syn = ecs.synthesize_fock(analytic, n_max)
    closed_form = ecs.synthesize_fock(case.superposition(), n_max)
    assert fock.fidelity(syn, closed_form) > 1 - 1e-10


def test_numeric_norm_preserved():
    cfg = InterferometerConfig(alpha=2.0, chi1=0.37, chi2=0.11, delta=0.5, tau=0.2)
    out = pipelines.simulate_numeric(cfg, PipelineKind.MACH_ZEHNDER)
    assert abs(np.linalg.norm(out.amplitudes) - 1.0) < 1e-10


def test_linear_interferometer_interference():
    # delta = 0 routes everything to port b'; delta = pi to port a'
    cfg = InterferometerConfig(alpha=1.5, delta=0.0)
    out = pipelines.simulate_numeric(cfg, PipelineKind.MACH_ZEHNDER)
    expected = fock.product_state(
        fock.vacuum(cfg.resolved_n_max()),
        fock.coherent_state(1.5j, cfg.resolved_n_max()),
    )
    assert fock.fidelity(out, expected) > 1 - 1e-11


def test_analytic_requires_rational_chi():
    cfg = InterferometerConfig(alpha=1.0, chi1=0.37)
    with pytest.raises(UnsupportedParametersError):
        pipelines.simulate_analytic(cfg, PipelineKind.MACH_ZEHNDER)


def test_analytic_mz_requires_vacuum_second_input():
    cfg = InterferometerConfig(
        alpha=1.0, beta=0.5, chi1=RationalChi(1, 4), chi2=RationalChi(0, 1)
    )
    with pytest.raises(UnsupportedParametersError):
        pipelines.simulate_analytic(cfg, PipelineKind.MACH_ZEHNDER)


def test_analytic_rejects_nonzero_tau():
    cfg = InterferometerConfig(alpha=1.0, chi1=RationalChi(1, 4), tau=0.3)
    with pytest.raises(UnsupportedParametersError):
        pipelines.simulate_analytic(cfg, PipelineKind.MACH_ZEHNDER)


def test_resolved_n_max_uses_both_inputs():
    cfg = InterferometerConfig(alpha=2.0, beta=1.0)
    assert cfg.resolved_n_max() == fock.default_n_max(3.0)
    cfg2 = InterferometerConfig(alpha=2.0, beta=1.0, n_max=25)
    assert cfg2.resolved_n_max() == 25


def test_unknown_reference_case():
    with pytest.raises(KeyError):
        pipelines.reference_output("no_such_case")


def test_reference_list_stable_and_named():
    ids1 = [c.case_id for c in pipelines.list_reference_cases()]
    ids2 = [c.case_id for c in pipelines.list_reference_cases()]
    assert ids1 == ids2
    assert len(set(ids1)) == len(ids1) >= 6


def test_periodicity_in_both_arms():
    # adding pi to both nonlinearities leaves the output invariant
    base = InterferometerConfig(alpha=1.5, chi1=0.7, chi2=0.3)
    shifted = InterferometerConfig(alpha=1.5, chi1=0.7 + pi, chi2=0.3 + pi)
    out1 = pipelines.simulate_numeric(base, PipelineKind.MACH_ZEHNDER)
    out2 = pipelines.simulate_numeric(shifted, PipelineKind.MACH_ZEHNDER)
    assert fock.fidelity(out1, out2) > 1 - 1e-10


def test_three_cell_passes_vacuum_through():
    cfg = InterferometerConfig(alpha=1.5, chi1=RationalChi(2, 7))
    out = pipelines.simulate_numeric(cfg, PipelineKind.THREE_CELL)
    n_max = cfg.resolved_n_max()
    inp = fock.product_state(fock.coherent_state(1.5, n_max), fock.vacuum(n_max))
    assert fock.fidelity(out, inp) > 1 - 1e-12
