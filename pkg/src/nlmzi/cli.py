"""Command-line front end: scenario batches, reference-case listing, and
squeezing-approximation checks.

Subcommands:
    run <config.json> [--out DIR]   execute a scenario file, write report.json
                                    plus per-scenario CSVs into DIR
    cases                           list the built-in closed-form reference
                                    cases as scenario-compatible JSON
    squeeze-check --alpha A [A ..] --eta E [--nmax N] [--out DIR]
                                    CSV of approximation fidelities and
                                    minimum quadrature variances

The default output directory is taken from $NLMZI_OUT (falling back to
'./nlmzi-out'). Exit codes: 0 success, 1 scenario failure, 2 usage or
config error. Reports are deterministic: scenarios are ordered by name and
floats use shortest round-trip decimals.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from math import pi
from pathlib import Path

import numpy as np

from . import ecs, elements, fock, pipelines, squeezing
from .ecs import RationalChi
from .pipelines import InterferometerConfig, PipelineKind, UnsupportedParametersError

DEFAULT_OUT_ENV = "NLMZI_OUT"

OUTPUT_KINDS = (
    "fidelity_report",
    "photon_dist",
    "qfunc_grid",
    "coefficients",
    "entropy",
    "quadrature_scan",
)


class ConfigError(ValueError):
    """Malformed scenario file."""


def _parse_complex(value, where: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(v, (int, float)) for v in value)
    ):
        return complex(value[0], value[1])
    raise ConfigError(f"{where}: expected a number or [re, im] pair, got {value!r}")


def _parse_chi(value, where: str):
    if value is None:
        return 0.0
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, dict) and set(value) == {"r", "s"}:
        try:
            return RationalChi(int(value["r"]), int(value["s"]))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{where}: {exc}") from None
    raise ConfigError(f"{where}: expected a number or {{r, s}}, got {value!r}")


def _parse_scenario(raw: dict, index: int) -> dict:
    where = f"scenarios[{index}]"
    if not isinstance(raw, dict):
        raise ConfigError(f"{where}: expected an object")
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        raise ConfigError(f"{where}: missing or empty 'name'")
    try:
        kind = PipelineKind(raw.get("pipeline"))
    except ValueError:
        valid = ", ".join(k.value for k in PipelineKind)
        raise ConfigError(
            f"{where} ({name}): 'pipeline' must be one of {valid}"
        ) from None
    config = InterferometerConfig(
        alpha=_parse_complex(raw.get("alpha", 0.0), f"{where}.alpha"),
        beta=_parse_complex(raw.get("beta", 0.0), f"{where}.beta"),
        chi1=_parse_chi(raw.get("chi1"), f"{where}.chi1"),
        chi2=_parse_chi(raw.get("chi2"), f"{where}.chi2"),
        delta=float(raw.get("delta", 0.0)),
        tau=float(raw.get("tau", 0.0)),
        n_max=int(raw["n_max"]) if raw.get("n_max") is not None else None,
    )
    outputs = raw.get("outputs")
    if not isinstance(outputs, list) or not outputs:
        raise ConfigError(f"{where} ({name}): 'outputs' must be a non-empty list")
    parsed_outputs = []
    for j, out in enumerate(outputs):
        if not isinstance(out, dict) or out.get("kind") not in OUTPUT_KINDS:
            valid = ", ".join(OUTPUT_KINDS)
            raise ConfigError(
                f"{where} ({name}).outputs[{j}]: 'kind' must be one of {valid}"
            )
        params = out.get("params", {})
        if not isinstance(params, dict):
            raise ConfigError(
                f"{where} ({name}).outputs[{j}]: 'params' must be an object"
            )
        parsed_outputs.append((out["kind"], params))
    return {"name": name, "kind": kind, "config": config, "outputs": parsed_outputs}


def parse_scenario_file(path: str | Path) -> list[dict]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")
    if not isinstance(doc, dict) or not isinstance(doc.get("scenarios"), list):
        raise ConfigError(f"{path}: top level must be {{'scenarios': [...]}}")
    if not doc["scenarios"]:
        raise ConfigError(f"{path}: scenario list is empty")
    scenarios = [_parse_scenario(raw, i) for i, raw in enumerate(doc["scenarios"])]
    names = [s["name"] for s in scenarios]
    if len(set(names)) != len(names):
        raise ConfigError(f"{path}: scenario names must be unique")
    return scenarios


def _fmt(x: float) -> str:
    return repr(float(x))


def _write_csv(path: Path, header: list[str], rows) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row])


def _run_output(
    kind: str,
    params: dict,
    scenario: dict,
    numeric: fock.TwoModeState,
    out_dir: Path,
) -> dict:
    name = scenario["name"]
    if kind == "fidelity_report":
        analytic = pipelines.simulate_analytic(scenario["config"], scenario["kind"])
        n_max = scenario["config"].resolved_n_max()
        synthesized = ecs.synthesize_fock(analytic, n_max)
        return {
            "fidelity": fock.fidelity(synthesized, numeric),
            "n_terms": len(analytic.terms),
            "entropy_numeric": fock.entanglement_entropy(numeric),
        }
    if kind == "entropy":
        return {"entanglement_entropy": fock.entanglement_entropy(numeric)}
    if kind == "coefficients":
        analytic = pipelines.simulate_analytic(scenario["config"], scenario["kind"])
        return {"terms": analytic.to_jsonable()}
    if kind == "photon_dist":
        pa = fock.mode_marginal_distribution(numeric, 0)
        pb = fock.mode_marginal_distribution(numeric, 1)
        path = out_dir / f"{name}_photon_dist.csv"
        _write_csv(
            path,
            ["n", "p_a", "p_b"],
            ((n, float(pa[n]), float(pb[n])) for n in range(len(pa))),
        )
        return {"csv": path.name}
    if kind == "quadrature_scan":
        points = int(params.get("points", 360))
        thetas = np.linspace(0.0, pi, points, endpoint=False)
        path = out_dir / f"{name}_quadrature_scan.csv"
        _write_csv(
            path,
            ["theta", "var_a", "var_b"],
            (
                (
                    float(t),
                    squeezing.port_quadrature_variance(numeric, 0, t),
                    squeezing.port_quadrature_variance(numeric, 1, t),
                )
                for t in thetas
            ),
        )
        return {"csv": path.name}
    # qfunc_grid
    center = _parse_complex(params.get("center", 0.0), f"{name}.qfunc_grid.center")
    half_width = float(params.get("half_width", 4.0))
    resolution = int(params.get("resolution", 41))
    axis = np.linspace(-half_width, half_width, resolution)
    path = out_dir / f"{name}_qfunc_grid.csv"

    def rows():
        for y in axis:
            for x in axis:
                beta = center + complex(x, y)
                yield (
                    float(beta.real),
                    float(beta.imag),
                    fock.port_husimi_q(numeric, 0, beta),
                    fock.port_husimi_q(numeric, 1, beta),
                )

    _write_csv(path, ["re", "im", "q_a", "q_b"], rows())
    return {"csv": path.name}


def _config_jsonable(config: InterferometerConfig, kind: PipelineKind) -> dict:
    def chi_json(chi):
        if isinstance(chi, RationalChi):
            return {"r": chi.r, "s": chi.s}
        return chi

    return {
        "pipeline": kind.value,
        "alpha": [config.alpha.real, config.alpha.imag],
        "beta": [complex(config.beta).real, complex(config.beta).imag],
        "chi1": chi_json(config.chi1),
        "chi2": chi_json(config.chi2),
        "delta": config.delta,
        "tau": config.tau,
        "n_max": config.n_max,
    }


def run_scenarios(scenarios: list[dict], out_dir: Path) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    report = {"scenarios": []}
    status = 0
    for scenario in sorted(scenarios, key=lambda s: s["name"]):
        entry = {
            "name": scenario["name"],
            "config": _config_jsonable(scenario["config"], scenario["kind"]),
            "outputs": [],
        }
        try:
            numeric = pipelines.simulate_numeric(scenario["config"], scenario["kind"])
            for kind, params in scenario["outputs"]:
                result = _run_output(kind, params, scenario, numeric, out_dir)
                entry["outputs"].append({"kind": kind, **result})
        except (
            UnsupportedParametersError,
            squeezing.DomainError,
            ConfigError,
            ValueError,
        ) as exc:
            entry["error"] = f"{type(exc).__name__}: {exc}"
            status = 1
        report["scenarios"].append(entry)
    report_path = out_dir / "report.json"
    report_path.write_text(json.dumps(report, indent=2) + "\n")
    print(report_path)
    return status


def cases_jsonable() -> list[dict]:
    out = []
    for case in pipelines.list_reference_cases():
        entry = {
            "name": case.case_id,
            "description": case.description,
            **_config_jsonable(case.config, case.kind),
            "outputs": [{"kind": "fidelity_report"}],
        }
        out.append(entry)
    return out


def run_squeeze_check(
    alphas: list[float], eta: float, n_max: int | None, out_dir: Path
) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    for alpha in alphas:
        chi = eta / alpha**2
        nm = n_max if n_max is not None else fock.default_n_max(alpha)
        exact = elements.kerr_apply(
            elements.KerrParams(chi), fock.coherent_state(alpha, nm)
        )
        approx = squeezing.approx_sheared_state(alpha, chi, nm)
        fidelity = fock.fidelity(approx, exact)
        theta_min, var_min = squeezing.minimum_quadrature_variance(exact)
        rows.append((float(alpha), chi, fidelity, theta_min, var_min))
    path = out_dir / "squeeze_check.csv"
    _write_csv(
        path, ["alpha", "chi", "fidelity", "theta_min", "min_variance"], rows
    )
    print(path)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlmzi", description="Nonlinear interferometer simulations"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a scenario config file")
    p_run.add_argument("config", help="path to a JSON scenario file")
    p_run.add_argument("--out", default=None, help="output directory")

    sub.add_parser("cases", help="list built-in reference cases as JSON")

    p_sq = sub.add_parser(
        "squeeze-check", help="squeezing-approximation fidelity table"
    )
    p_sq.add_argument(
        "--alpha", type=float, nargs="+", required=True, help="input amplitudes"
    )
    p_sq.add_argument(
        "--eta", type=float, required=True, help="fixed eta = chi * alpha**2"
    )
    p_sq.add_argument("--nmax", type=int, default=None, help="Fock truncation")
    p_sq.add_argument("--out", default=None, help="output directory")
    return parser


def _out_dir(arg_value: str | None) -> Path:
    if arg_value is not None:
        return Path(arg_value)
    return Path(os.environ.get(DEFAULT_OUT_ENV, "nlmzi-out"))


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    if args.command == "cases":
        print(json.dumps(cases_jsonable(), indent=2))
        return 0
    if args.command == "squeeze-check":
        try:
            return run_squeeze_check(
                args.alpha, args.eta, args.nmax, _out_dir(args.out)
            )
        except squeezing.DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        scenarios = parse_scenario_file(args.config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run_scenarios(scenarios, _out_dir(args.out))


if __name__ == "__main__":
    sys.exit(main())
