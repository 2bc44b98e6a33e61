"""Command-line front end: strict flag parsing, experiment dispatch, CSV/JSON output.

Every subcommand takes ``--key value`` pairs validated against a declared
parameter table (unknown or missing keys are usage errors, exit 1); an
optional ``--config file.json`` supplies defaults that explicit flags
override.  Numeric CSV output uses one header row, %.12e formatting, LF
line endings and UTF-8; JSON output has sorted keys.  Exit codes: 0 success,
1 usage/configuration error, 2 numerical or I/O failure.
"""

from __future__ import annotations

import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import experiments, metrics, schemes
from .lindblad import NumericalError, evolve, liouvillian, spectrum, steady_state
from .operators import DensityMatrix, Operator, pure_density

__all__ = ["run", "main", "write_csv", "write_json", "UsageError"]

THREADS_ENV = "SYNTHSQUEEZE_THREADS"


class UsageError(Exception):
    """Malformed invocation: unknown/missing keys, bad values, bad subcommand."""


@dataclass(frozen=True)
class Param:
    typ: str                 # float | int | bool | str | floats (comma list)
    required: bool = False
    default: object = None
    help: str = ""
    choices: tuple = ()


def _parse_value(key: str, param: Param, raw):
    if isinstance(raw, str):
        text = raw.strip()
    else:
        text = raw
    try:
        if param.typ == "float":
            return float(text)
        if param.typ == "int":
            return int(text)
        if param.typ == "bool":
            if isinstance(text, bool):
                return text
            if str(text).lower() in ("true", "1", "yes"):
                return True
            if str(text).lower() in ("false", "0", "no"):
                return False
            raise ValueError(f"expected true/false, got {text!r}")
        if param.typ == "floats":
            if isinstance(text, (list, tuple)):
                return [float(x) for x in text]
            return [float(x) for x in str(text).split(",") if x.strip() != ""]
        if param.typ == "str":
            value = str(text)
            if param.choices and value not in param.choices:
                raise ValueError(f"expected one of {param.choices}, got {value!r}")
            return value
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad value for --{key.replace('_', '-')}: {exc}") from exc
    raise UsageError(f"internal: unknown parameter type {param.typ!r}")


COMMON_PARAMS = {
    "out": Param("str", default="-", help="output path ('-' = stdout)"),
    "config": Param("str", default=None, help="JSON config file; flags override it"),
    "threads": Param("int", default=None,
                     help=f"worker threads for sweeps (env {THREADS_ENV})"),
}

SCHEME_PARAMS = {
    "single-qubit-squeezed": {
        "r": Param("float", required=True, help="squeezing parameter (dimensionless)"),
        "gamma": Param("float", default=1.0, help="decay rate (reference-rate units)"),
    },
    "ideal-tms": {
        "r": Param("float", required=True, help="squeezing parameter (dimensionless)"),
        "gamma1": Param("float", default=1.0, help="channel-a rate (reference-rate units)"),
        "gamma2": Param("float", default=1.0, help="channel-b rate (reference-rate units)"),
    },
    "synthetic-reduced": {
        "alpha_minus": Param("float", required=True, help="red-sideband amplitude, mode a"),
        "alpha_plus": Param("float", required=True, help="blue-sideband amplitude, mode a"),
        "beta_minus": Param("float", required=True, help="red-sideband amplitude, mode b"),
        "beta_plus": Param("float", required=True, help="blue-sideband amplitude, mode b"),
        "g_bar": Param("float", default=1.0, help="bare coupling (reference-rate units)"),
        "kappa": Param("float", default=1.0, help="mode decay rate (reference-rate units)"),
        "flipped": Param("bool", default=False, help="flip qubit-2 raising/lowering"),
    },
    "balanced": {
        "m_bar": Param("float", default=1.0, help="common squared modulation amplitude"),
        "g_bar": Param("float", default=1.0, help="bare coupling (reference-rate units)"),
        "kappa": Param("float", default=1.0, help="mode decay rate (reference-rate units)"),
    },
    "thermal-tms": {
        "r": Param("float", required=True, help="squeezing parameter (dimensionless)"),
        "gamma": Param("float", default=1.0, help="pair rate (reference-rate units)"),
        "n_th": Param("float", default=0.0, help="thermal occupation of the modes"),
    },
    "qubit-cavity": {
        "alpha_plus": Param("float", required=True, help="blue-sideband amplitude"),
        "alpha_minus": Param("float", required=True, help="red-sideband amplitude"),
        "kappa": Param("float", required=True, help="cavity decay (units of g_bar)"),
        "g_bar": Param("float", default=1.0, help="bare coupling (reference rate)"),
        "n_fock": Param("int", default=10, help="cavity truncation levels"),
    },
    "collective-loss": {
        "frame": Param("str", default="lab", choices=("lab", "transformed", "rwa"),
                       help="reference frame"),
        "r0": Param("float", required=True, help="target squeezing (dimensionless)"),
        "mu": Param("float", required=True, help="drive gap (units of Gamma)"),
        "eta": Param("float", default=1.0, help="coupling asymmetry"),
        "gamma": Param("float", default=1.0, help="collective loss rate (reference rate)"),
    },
    "tl-model": {
        "r": Param("float", required=True, help="squeezing parameter (dimensionless)"),
        "dl_over_lambda1": Param("float", default=0.0,
                                 help="spacing error as a fraction of wavelength 1"),
        "k1": Param("float", default=2.0 * math.pi, help="wavevector at qubit-1 frequency"),
        "k2": Param("float", default=None, help="wavevector at qubit-2 frequency (default 1.5 k1)"),
        "include_hamiltonian": Param("bool", default=True, help="include the pairing Hamiltonian"),
    },
}

def build_scheme(name: str, params: dict):
    """Construct the LindbladModel for a scheme name from its parameter dict."""
    if name == "single-qubit-squeezed":
        return schemes.single_qubit_squeezed(params["gamma"], params["r"])
    if name == "ideal-tms":
        return schemes.ideal_tms(params["r"], params["gamma1"], params["gamma2"])
    if name == "synthetic-reduced":
        p = schemes.SqueezeParams(r=0.0, g_bar=params["g_bar"], kappa=params["kappa"])
        amps = (params["alpha_minus"], params["alpha_plus"],
                params["beta_minus"], params["beta_plus"])
        return schemes.synthetic_reduced(p, amps, params["flipped"])
    if name == "balanced":
        return schemes.balanced(params["m_bar"], params["g_bar"], params["kappa"])
    if name == "thermal-tms":
        return schemes.thermal_tms(params["r"], params["gamma"], params["n_th"])
    if name == "qubit-cavity":
        p = schemes.SqueezeParams(r=0.0, g_bar=params["g_bar"], kappa=params["kappa"])
        return schemes.qubit_cavity_full(p, params["alpha_plus"], params["alpha_minus"],
                                         params["n_fock"])
    if name == "collective-loss":
        if params["eta"] == 1.0:
            d = schemes.DriveParams.symmetric(params["r0"], params["mu"])
        else:
            d = schemes.solve_asymmetric_drive(params["r0"], params["mu"], params["eta"])
        return schemes.collective_loss(params["frame"], d, params["gamma"])
    if name == "tl-model":
        k1 = params["k1"]
        k2 = 1.5 * k1 if params["k2"] is None else params["k2"]
        dl = params["dl_over_lambda1"] * 2.0 * math.pi / k1
        p = schemes.TLParams(r=params["r"], k1=k1, k2=k2, dl=dl)
        return schemes.tl_model(p, params["include_hamiltonian"])
    raise UsageError(f"unknown scheme {name!r}; expected one of {sorted(SCHEME_PARAMS)}")


def _initial_state(name: str, dims) -> DensityMatrix:
    if len(dims) == 2 and dims[0] == 2 and dims[1] != 2:
        n = dims[1]
        if name == "ground":
            v = np.zeros(2 * n)
            v[n] = 1.0  # |g> (x) |vacuum>
            return pure_density(v, dims)
        if name == "excited":
            v = np.zeros(2 * n)
            v[0] = 1.0
            return pure_density(v, dims)
        raise UsageError(f"unknown --init {name!r} for dims {dims}; expected ground/excited")
    if dims == (2,):
        table = {"g": [0.0, 1.0], "e": [1.0, 0.0], "plus": [1.0, 1.0]}
        if name in table:
            return pure_density(np.array(table[name]), dims)
        if name == "mixed":
            return DensityMatrix(Operator(0.5 * np.eye(2), dims))
        raise UsageError(f"unknown --init {name!r} for a single qubit")
    if dims == (2, 2):
        kets = {
            "gg": schemes.ket("00"), "ge": schemes.ket("01"),
            "eg": schemes.ket("10"), "ee": schemes.ket("11"),
            "singlet": (schemes.ket("01") - schemes.ket("10")) / math.sqrt(2),
            "phi-minus": (schemes.ket("00") - schemes.ket("11")) / math.sqrt(2),
            "phi-plus": (schemes.ket("00") + schemes.ket("11")) / math.sqrt(2),
        }
        if name in kets:
            return pure_density(kets[name], dims)
        if name == "mixed":
            return DensityMatrix(Operator(0.25 * np.eye(4), dims))
        raise UsageError(f"unknown --init {name!r} for two qubits")
    raise UsageError(f"no named initial states for dims {dims}")


def write_csv(records, path: str, schema=None) -> None:
    """Records to CSV: one header row, %.12e numbers, LF endings, UTF-8."""
    if schema is None:
        schema = tuple(records[0].keys()) if records else ()
    lines = [",".join(schema)]
    for rec in records:
        if tuple(rec.keys()) != tuple(schema):
            raise ValueError(
                f"record schema {tuple(rec.keys())} does not match {tuple(schema)}"
            )
        lines.append(",".join("%.12e" % rec[col] for col in schema))
    payload = "\n".join(lines) + "\n"
    _write_text(payload, path)


def write_json(value, path: str) -> None:
    """JSON with sorted keys."""
    _write_text(json.dumps(value, sort_keys=True, indent=2) + "\n", path)


def _write_text(payload: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(payload)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(payload)


def _metrics_payload(model, result) -> dict:
    rho = result.steady_states[0]
    payload = {"degeneracy": result.degeneracy, "purity": metrics.purity(rho)}
    if model.dims == (2, 2):
        payload["concurrence"] = metrics.concurrence(rho)
    return payload


def _cmd_steady(params: dict) -> None:
    model = build_scheme(params["scheme"], params)
    result = steady_state(liouvillian(model))
    write_json(_metrics_payload(model, result), params["out"])


def _cmd_gap(params: dict) -> None:
    model = build_scheme(params["scheme"], params)
    result = spectrum(liouvillian(model))
    write_json({"gap": result.gap, "degeneracy": result.degeneracy}, params["out"])


def _cmd_spectrum(params: dict) -> None:
    model = build_scheme(params["scheme"], params)
    result = spectrum(liouvillian(model))
    write_json({
        "eigenvalues": [[ev.real, ev.imag] for ev in result.eigenvalues],
        "gap": result.gap,
        "degeneracy": result.degeneracy,
    }, params["out"])


def _cmd_evolve(params: dict) -> None:
    model = build_scheme(params["scheme"], params)
    rho0 = _initial_state(params["init"], model.dims)
    samples = evolve(model, rho0, params["t_final"], dt=params["dt"],
                     sample_stride=params["stride"])
    two_qubit = model.dims == (2, 2)
    schema = ["t", "purity"] + (["concurrence"] if two_qubit else [])
    schema += [f"pop_{i}" for i in range(model.dim)]
    records = []
    for t, rho in samples:
        rec = {"t": t, "purity": metrics.purity(rho)}
        if two_qubit:
            rec["concurrence"] = metrics.concurrence(rho)
        for i in range(model.dim):
            rec[f"pop_{i}"] = rho.matrix[i, i].real
        records.append(rec)
    write_csv(records, params["out"], schema)


def _records_out(records, schema, params) -> None:
    if params["format"] == "json":
        write_json(records, params["out"])
    else:
        write_csv(records, params["out"], schema)


def _cmd_sweep_temp(params: dict) -> None:
    grid = np.arange(0.0, params["t_max"] + 1e-12, params["t_step"])
    recs = experiments.sweep_temperature(
        params["r"], params["gamma"], params["freq_ghz"], grid, threads=params["threads"])
    _records_out(recs, experiments.EXPERIMENT_SCHEMAS["sweep_temperature"], params)


def _cmd_sweep_gap(params: dict) -> None:
    n_dec = math.log10(params["mu_max"] / params["mu_min"])
    n_pts = max(2, int(round(n_dec * params["points_per_decade"])) + 1)
    grid = np.logspace(math.log10(params["mu_min"]), math.log10(params["mu_max"]), n_pts)
    recs = experiments.sweep_gap_vs_mu(
        params["r_list"], grid, eta=params["eta"], threads=params["threads"])
    _records_out(recs, experiments.EXPERIMENT_SCHEMAS["sweep_gap_vs_mu"], params)


def _cmd_sweep_spacing(params: dict) -> None:
    grid = np.arange(0.0, params["dl_max"] + 1e-12, params["dl_step"])
    recs = experiments.sweep_spacing(
        grid, r_bounds=(params["r_lo"], params["r_hi"]), threads=params["threads"])
    _records_out(recs, experiments.EXPERIMENT_SCHEMAS["sweep_spacing"], params)


def _cmd_gap_vs_r(params: dict) -> None:
    grid = np.arange(params["r_min"], params["r_max"] + 1e-12, params["r_step"])
    recs = experiments.gap_vs_r(grid, threads=params["threads"])
    _records_out(recs, experiments.EXPERIMENT_SCHEMAS["gap_vs_r"], params)


def _cmd_validate_elim(params: dict) -> None:
    recs = experiments.validate_elimination(
        params["ratios"], r=params["r"],
        t_final_over_gamma=params["t_final_over_gamma"],
        n_fock=params["n_fock"], threads=params["threads"])
    _records_out(recs, experiments.EXPERIMENT_SCHEMAS["validate_elimination"], params)


def _cmd_solve_drive(params: dict) -> None:
    d = schemes.solve_asymmetric_drive(params["r"], params["mu"], params["eta"])
    write_json({
        "delta": d.delta, "lambda": d.lam, "epsilon": d.epsilon,
        "beta_minus": d.beta_minus, "beta_plus": d.beta_plus,
        "mu": d.mu, "eta": d.eta, "r": d.r0,
    }, params["out"])


_SCHEME_PARAM = {
    "scheme": Param("str", required=True, choices=tuple(sorted(SCHEME_PARAMS)),
                    help="model family (see list below)"),
}
_FMT = {"format": Param("str", default="csv", choices=("csv", "json"),
                        help="output format")}
_FMT_JSON = {"format": Param("str", default="json", choices=("json",),
                             help="output format")}

COMMANDS = {
    "steady": {
        "help": "steady-state metrics of a scheme as JSON",
        "params": {**_SCHEME_PARAM, **_FMT_JSON},
        "scheme_params": True,
        "run": _cmd_steady,
    },
    "gap": {
        "help": "dissipative gap of a scheme as JSON",
        "params": {**_SCHEME_PARAM, **_FMT_JSON},
        "scheme_params": True,
        "run": _cmd_gap,
    },
    "spectrum": {
        "help": "full Liouvillian eigenvalue list as JSON (Hilbert dim <= 8)",
        "params": {**_SCHEME_PARAM, **_FMT_JSON},
        "scheme_params": True,
        "run": _cmd_spectrum,
    },
    "evolve": {
        "help": "integrate a scheme from a named initial state; trajectory CSV",
        "params": {
            **_SCHEME_PARAM,
            "init": Param("str", required=True,
                          help="initial state: gg/ge/eg/ee/mixed/singlet/phi-minus/"
                               "phi-plus (two qubits), g/e/mixed/plus (one qubit), "
                               "ground/excited (qubit-cavity)"),
            "t_final": Param("float", required=True, help="final time (reference-rate units)"),
            "dt": Param("float", default=None, help="RK4 step (default from operator norms)"),
            "stride": Param("int", default=1, help="sample every N steps"),
            **_FMT,
        },
        "scheme_params": True,
        "run": _cmd_evolve,
    },
    "sweep-temp": {
        "help": "thermal sweep: T_K, n_th, concurrence, purity (CSV)",
        "params": {
            "r": Param("float", default=1.0, help="squeezing parameter"),
            "gamma": Param("float", default=1.0, help="pair rate (reference units)"),
            "freq_ghz": Param("float", default=6.0, help="qubit frequency in GHz"),
            "t_max": Param("float", default=0.15, help="maximum temperature in K"),
            "t_step": Param("float", default=0.0025, help="temperature step in K"),
            **_FMT,
        },
        "run": _cmd_sweep_temp,
    },
    "sweep-gap": {
        "help": "gap of the driven collective-loss model vs mu/Gamma (CSV)",
        "params": {
            "r_list": Param("floats", default=[0.5, 1.0, 1.5], help="squeezing values"),
            "mu_min": Param("float", default=1e-3, help="smallest mu/Gamma"),
            "mu_max": Param("float", default=1e2, help="largest mu/Gamma"),
            "points_per_decade": Param("int", default=11, help="log grid density"),
            "eta": Param("float", default=1.0, help="coupling asymmetry"),
            **_FMT,
        },
        "run": _cmd_sweep_gap,
    },
    "sweep-spacing": {
        "help": "transmission-line spacing sweep, concurrence optimized over r (CSV)",
        "params": {
            "dl_max": Param("float", default=0.02, help="largest dl/lambda1"),
            "dl_step": Param("float", default=5e-4, help="dl/lambda1 step"),
            "r_lo": Param("float", default=0.05, help="lower squeezing bound"),
            "r_hi": Param("float", default=4.0, help="upper squeezing bound"),
            **_FMT,
        },
        "run": _cmd_sweep_spacing,
    },
    "gap-vs-r": {
        "help": "pair-model gap vs its large-r law (CSV)",
        "params": {
            "r_min": Param("float", default=0.5, help="smallest r"),
            "r_max": Param("float", default=3.0, help="largest r"),
            "r_step": Param("float", default=0.125, help="r step"),
            **_FMT,
        },
        "run": _cmd_gap_vs_r,
    },
    "validate-elim": {
        "help": "adiabatic-elimination error vs kappa ratio (CSV)",
        "params": {
            "ratios": Param("floats", default=[5.0, 10.0, 20.0, 50.0],
                            help="kappa / (g_bar max|alpha|) values"),
            "r": Param("float", default=1.0, help="squeezing parameter"),
            "t_final_over_gamma": Param("float", default=5.0, help="horizon in 1/gamma"),
            "n_fock": Param("int", default=10, help="cavity truncation levels"),
            **_FMT,
        },
        "run": _cmd_validate_elim,
    },
    "solve-drive": {
        "help": "drive calibration (delta, lambda, epsilon, beta_pm) as JSON",
        "params": {
            "r": Param("float", required=True, help="target squeezing"),
            "mu": Param("float", required=True, help="drive gap (units of Gamma)"),
            "eta": Param("float", default=1.0, help="coupling asymmetry"),
            **_FMT_JSON,
        },
        "run": _cmd_solve_drive,
    },
}


def _param_table(command: str) -> dict:
    table = dict(COMMON_PARAMS)
    table.update(COMMANDS[command]["params"])
    return table


def _scheme_table(scheme: str) -> dict:
    try:
        return SCHEME_PARAMS[scheme]
    except KeyError:
        raise UsageError(
            f"unknown scheme {scheme!r}; expected one of {sorted(SCHEME_PARAMS)}"
        ) from None


def _help_text(command: str | None = None) -> str:
    if command is None:
        lines = ["usage: synthsqueeze <subcommand> [--key value ...]", "", "subcommands:"]
        for name, spec in COMMANDS.items():
            lines.append(f"  {name:15s} {spec['help']}")
        lines.append("")
        lines.append("run 'synthsqueeze <subcommand> --help' for the key table")
        return "\n".join(lines) + "\n"
    spec = COMMANDS[command]
    lines = [f"usage: synthsqueeze {command} [--key value ...]", "", spec["help"], "", "keys:"]

    def fmt(table):
        out = []
        for key, p in table.items():
            flag = "--" + key.replace("_", "-")
            req = "required" if p.required else f"default {p.default!r}"
            choice = f" ({'/'.join(p.choices)})" if p.choices else ""
            out.append(f"  {flag:25s} {p.typ:7s} {req:18s} {p.help}{choice}")
        return out

    lines += fmt(_param_table(command))
    if spec.get("scheme_params"):
        lines.append("")
        lines.append("scheme keys (with --scheme NAME):")
        for scheme, table in SCHEME_PARAMS.items():
            lines.append(f"  {scheme}:")
            lines += ["  " + row for row in fmt(table)]
    return "\n".join(lines) + "\n"


def _collect_tokens(tokens) -> dict:
    raw = {}
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if not tok.startswith("--"):
            raise UsageError(f"expected --key, got {tok!r}")
        key = tok[2:].replace("-", "_")
        if i + 1 >= len(tokens):
            raise UsageError(f"missing value for --{tok[2:]}")
        raw[key] = tokens[i + 1]
        i += 2
    return raw


def _resolve(command: str, raw: dict) -> dict:
    table = _param_table(command)
    scheme_table = {}
    if COMMANDS[command].get("scheme_params"):
        scheme_name = raw.get("scheme")
        if scheme_name is None and raw.get("config"):
            try:
                with open(raw["config"], "r", encoding="utf-8") as fh:
                    scheme_name = json.load(fh).get("scheme")
            except OSError as exc:
                raise UsageError(f"cannot read config file: {exc}") from exc
        if scheme_name is not None:
            scheme_table = _scheme_table(str(scheme_name))
    full = {**table, **scheme_table}

    merged = {}
    if raw.get("config"):
        try:
            with open(raw["config"], "r", encoding="utf-8") as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
        if not isinstance(cfg, dict):
            raise UsageError("config file must hold a JSON object")
        for key, value in cfg.items():
            norm = str(key).replace("-", "_")
            if norm not in full:
                raise UsageError(f"unknown key '{key}' in config for subcommand '{command}'")
            merged[norm] = value
    for key, value in raw.items():
        if key not in full:
            raise UsageError(f"unknown key '--{key.replace('_', '-')}' for subcommand '{command}'")
        merged[key] = value

    params = {}
    for key, p in full.items():
        if key in merged:
            params[key] = _parse_value(key, p, merged[key])
        elif p.required:
            raise UsageError(f"missing required key '--{key.replace('_', '-')}' "
                             f"for subcommand '{command}'")
        else:
            params[key] = p.default
    if params.get("threads") is None:
        params["threads"] = int(os.environ.get(THREADS_ENV, "1"))
    return params


def run(argv) -> int:
    argv = list(argv)
    if not argv or argv[0] in ("-h", "--help", "help"):
        sys.stdout.write(_help_text())
        return 0
    command = argv[0]
    if command not in COMMANDS:
        sys.stderr.write(f"unknown subcommand {command!r}\n\n{_help_text()}")
        return 1
    rest = argv[1:]
    if "--help" in rest or "-h" in rest:
        sys.stdout.write(_help_text(command))
        return 0
    try:
        raw = _collect_tokens(rest)
        params = _resolve(command, raw)
        COMMANDS[command]["run"](params)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (NumericalError, OSError) as exc:
        sys.stderr.write(f"numerical/io failure: {exc}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
