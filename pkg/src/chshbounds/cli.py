"""Command-line front end for verification runs, maximization, and sweeps.

Subcommands:

  verify    evaluate one track (or all) at a measurement configuration and
            compare against the matching bound, emitting a machine-readable
            report
  optimize  run a maximizer and serialize the best point found
  sweep     tabulate the coplanar quantum family between the two bounds

Run parameters come from flags or a YAML config file; flags win.  The config
file accepts::

    track: all                 # classical | quantum | ga | all
    configuration: canonical   # or explicit vectors / in-plane angles:
    #   a: [1.0, 0.0, 0.0]
    #   a_prime: [0.0, 1.0, 0.0]
    #   b: [-0.70710678118654757, -0.70710678118654757, 0.0]
    #   b_prime: [-0.70710678118654757, 0.70710678118654757, 0.0]
    # or:
    #   angles_deg: [0, 90, 225, 135]
    lhv_model:                 # classical track; omit to use the
      states:                  # deterministic maximum
        - weight: 0.5
          responses: [1, 1, 1, 1]
        - weight: 0.5
          responses: [1, -1, 1, -1]
    coefficients: [1, 1, 1, 1] # vector-track response magnitudes
    seed: 0
    samples: 0                 # Monte Carlo cross-check when >= 1
    output_path: report.json
    output_format: json        # json | csv

Explicit vectors must be unit within 1e-9; they are renormalized to full
precision before use and echoed back verbatim in the report.  Exit codes:
0 success, 2 malformed configuration or usage, 3 a bound was violated beyond
tolerance (the report is still written).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

import yaml

from ._version import __version__
from .geometry import (
    Configuration,
    canonical_configuration,
    magnitude,
    normalized,
    unit_deviation,
)
from .lhv import (
    CLASSICAL_BOUND,
    LhvModel,
    all_deterministic_strategies,
    chsh_classical_value,
    classical_correlations,
    monte_carlo_correlations,
)
from .optimize import (
    DEFAULT_RESTARTS,
    maximize_classical,
    maximize_ga,
    maximize_quantum,
    sweep_coplanar_family,
)
from .quantum import (
    TSIRELSON_BOUND,
    chsh_operator,
    chsh_quantum_value,
    chsh_squared_identity_deviation,
    cross_commutator_residual,
    operator_norm,
)
from .reporting import (
    ATTAINMENT_TOLERANCE,
    MARGIN_TOLERANCE,
    BoundReport,
    canonical_json,
    reports_to_csv,
    reports_to_json,
    sweep_to_csv,
    sweep_to_json,
    violation_exit_code,
)
from .vector_values import (
    ResponseCoefficients,
    chsh_vector_value,
    vector_bound_expression,
)

__all__ = ["ConfigError", "main"]

# Explicit input vectors may be off unit by this much; anything tighter is
# renormalized silently, anything looser is rejected.
UNIT_GATE_TOLERANCE = 1e-9

_CONFIG_KEYS = frozenset(
    {
        "track",
        "configuration",
        "lhv_model",
        "coefficients",
        "seed",
        "samples",
        "output_path",
        "output_format",
    }
)

_VERIFY_TRACKS = ("classical", "quantum", "ga", "all")

# What each report instantiates, for --paper output.  The statements cite
# the standard literature for the inequalities being checked.
_REFERENCE_LINES = {
    "classical": (
        "CHSH inequality for local hidden-variable models: "
        "|E(a,b) + E(a,b') + E(a',b) - E(a',b')| <= 2 "
        "(Bell 1964; Clauser, Horne, Shimony & Holt 1969)."
    ),
    "quantum": (
        "singlet-state CHSH expectation against the Tsirelson ceiling "
        "|<B>| <= 2*sqrt(2) (Cirel'son 1980)."
    ),
    "quantum_norm": (
        "operator-norm Tsirelson bound ||B|| <= 2*sqrt(2), via "
        "B^2 = 4*I - [A,A'] (x) [B,B'] with commutator norm at most 4 "
        "(Landau 1987)."
    ),
    "ga": (
        "vector-response CHSH combination |P(a,b) + P(a,b')| + "
        "|P(a',b) - P(a',b')| <= 2*sqrt(2) for factorized pair responses "
        "P(x,y) = alpha*beta*(x.y) with |alpha|, |beta| <= 1."
    ),
    "ga_bound": (
        "parallelogram-law cap |alpha*b + beta*b'| + |alpha*b - beta*b'| "
        "<= |b + b'| + |b - b'| <= 2*sqrt(2) for unit b, b'."
    ),
}


class ConfigError(ValueError):
    """Malformed run configuration; maps to exit code 2."""


def _require_number(value: object, label: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{label} must be a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise ConfigError(f"{label} must be finite, got {value!r}")
    return v


def _require_int(value: object, label: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{label} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ConfigError(f"{label} must be >= {minimum}, got {value}")
    return value


def _require_numbers(value: object, count: int, label: str) -> list[float]:
    if not isinstance(value, (list, tuple)) or len(value) != count:
        raise ConfigError(f"{label} must be a list of {count} numbers")
    return [_require_number(x, f"{label}[{i}]") for i, x in enumerate(value)]


def _load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"config file {path} is not valid YAML: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a mapping at top level")
    unknown = sorted(set(data) - _CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    return data


def _parse_configuration(spec: object) -> tuple[Configuration, object]:
    """Build a Configuration and the echo of how it was specified."""
    if spec is None or spec == "canonical":
        return canonical_configuration(), "canonical"
    if isinstance(spec, dict) and set(spec) == {"angles_deg"}:
        angles = _require_numbers(spec["angles_deg"], 4, "configuration.angles_deg")
        cfg = Configuration.coplanar(*(math.radians(x) for x in angles))
        return cfg, {"angles_deg": angles}
    vector_keys = ("a", "a_prime", "b", "b_prime")
    if isinstance(spec, dict) and set(spec) == set(vector_keys):
        echo: dict[str, object] = {}
        vectors = []
        for key in vector_keys:
            raw = _require_numbers(spec[key], 3, f"configuration.{key}")
            if unit_deviation(raw) > UNIT_GATE_TOLERANCE:
                raise ConfigError(
                    f"configuration.{key} must be unit within 1e-9, "
                    f"got length {magnitude(raw)}"
                )
            echo[key] = raw
            vectors.append(normalized(raw))
        return Configuration.from_vectors(*vectors), echo
    raise ConfigError(
        "configuration must be 'canonical', a mapping with keys "
        "a, a_prime, b, b_prime, or a mapping with key angles_deg"
    )


def _parse_model(spec: object) -> tuple[LhvModel, object]:
    if not isinstance(spec, dict) or set(spec) != {"states"}:
        raise ConfigError("lhv_model must be a mapping with a 'states' list")
    raw_states = spec["states"]
    if not isinstance(raw_states, list) or not raw_states:
        raise ConfigError("lhv_model.states must be a non-empty list")
    pairs = []
    echo_states = []
    for i, entry in enumerate(raw_states):
        label = f"lhv_model.states[{i}]"
        if not isinstance(entry, dict) or set(entry) != {"weight", "responses"}:
            raise ConfigError(f"{label} must map 'weight' and 'responses'")
        weight = _require_number(entry["weight"], f"{label}.weight")
        responses = _require_numbers(entry["responses"], 4, f"{label}.responses")
        pairs.append((weight, responses))
        echo_states.append({"weight": weight, "responses": responses})
    try:
        model = LhvModel.from_pairs(pairs)
    except ValueError as exc:
        raise ConfigError(f"invalid lhv_model: {exc}") from exc
    return model, {"states": echo_states}


def _parse_coefficients(spec: object) -> ResponseCoefficients:
    if spec is None:
        return ResponseCoefficients.ones()
    values = _require_numbers(spec, 4, "coefficients")
    try:
        return ResponseCoefficients(*values)
    except ValueError as exc:
        raise ConfigError(f"invalid coefficients: {exc}") from exc


def _pick(flag_value, config: dict, key: str, default):
    if flag_value is not None:
        return flag_value
    if key in config:
        return config[key]
    return default


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _classical_reports(
    model: LhvModel | None, model_echo: object, samples: int, seed: int
) -> list[BoundReport]:
    details: dict[str, object] = {}
    if model is None:
        # No model supplied: brute-force the deterministic strategies and
        # report the maximum (every mixture is a convex combination of them).
        best_value = -math.inf
        best_strategy = None
        for strategy in all_deterministic_strategies():
            candidate = LhvModel.deterministic(*strategy)
            value = chsh_classical_value(classical_correlations(candidate))
            if value > best_value:
                best_value = value
                best_strategy = strategy
        model = LhvModel.deterministic(*best_strategy)
        model_echo = "deterministic-maximum"
        details["maximizing_responses"] = list(best_strategy)
    correlations = classical_correlations(model)
    value = chsh_classical_value(correlations)
    details["correlations"] = list(correlations.as_tuple())
    if samples >= 1:
        estimate = monte_carlo_correlations(model, samples, seed)
        details["monte_carlo"] = {
            "samples": estimate.samples,
            "correlations": list(estimate.correlations.as_tuple()),
            "std_errors": list(estimate.std_errors),
            "chsh_value": chsh_classical_value(estimate.correlations),
        }
    inputs = {"lhv_model": model_echo, "samples": samples}
    return [
        BoundReport(
            track="classical",
            value=value,
            bound=CLASSICAL_BOUND,
            inputs=inputs,
            seed=seed,
            details=details,
        )
    ]


def _quantum_reports(cfg: Configuration, cfg_echo: object, seed: int) -> list[BoundReport]:
    value = chsh_quantum_value(cfg)
    norm = operator_norm(chsh_operator(cfg))
    inputs = {"configuration": cfg_echo}
    return [
        BoundReport(
            track="quantum",
            value=value,
            bound=TSIRELSON_BOUND,
            inputs=inputs,
            seed=seed,
            details={
                "squared_identity_deviation": chsh_squared_identity_deviation(cfg),
                "cross_commutator_residual": cross_commutator_residual(cfg),
            },
        ),
        BoundReport(
            track="quantum_norm",
            value=norm,
            bound=TSIRELSON_BOUND,
            inputs=inputs,
            seed=seed,
        ),
    ]


def _ga_reports(
    cfg: Configuration, cfg_echo: object, co: ResponseCoefficients, seed: int
) -> list[BoundReport]:
    inputs = {"configuration": cfg_echo, "coefficients": list(co.as_tuple())}
    return [
        BoundReport(
            track="ga",
            value=chsh_vector_value(cfg, co),
            bound=TSIRELSON_BOUND,
            inputs=inputs,
            seed=seed,
        ),
        BoundReport(
            track="ga_bound",
            value=vector_bound_expression(cfg.b, cfg.b_prime, co.alpha_b, co.alpha_b_prime),
            bound=TSIRELSON_BOUND,
            inputs=inputs,
            seed=seed,
        ),
    ]


def _run_verify(args: argparse.Namespace) -> int:
    config = _load_config_file(args.config) if args.config else {}
    track = args.track if args.track is not None else config.get("track")
    if track is None:
        raise ConfigError("verify needs --track or a 'track' entry in the config file")
    if track not in _VERIFY_TRACKS:
        raise ConfigError(f"track must be one of {', '.join(_VERIFY_TRACKS)}, got {track!r}")
    seed = _require_int(_pick(args.seed, config, "seed", 0), "seed")
    samples = _require_int(_pick(args.samples, config, "samples", 0), "samples", minimum=0)
    out_path = _pick(args.out, config, "output_path", None)
    out_format = _pick(args.format, config, "output_format", "json")
    if out_format not in ("json", "csv"):
        raise ConfigError(f"output_format must be json or csv, got {out_format!r}")

    configuration_spec = "canonical" if args.canonical else config.get("configuration")
    cfg, cfg_echo = _parse_configuration(configuration_spec)
    model = None
    model_echo: object = None
    if config.get("lhv_model") is not None:
        model, model_echo = _parse_model(config["lhv_model"])
    coefficients = _parse_coefficients(config.get("coefficients"))

    reports: list[BoundReport] = []
    if track in ("classical", "all"):
        reports.extend(_classical_reports(model, model_echo, samples, seed))
    if track in ("quantum", "all"):
        reports.extend(_quantum_reports(cfg, cfg_echo, seed))
    if track in ("ga", "all"):
        reports.extend(_ga_reports(cfg, cfg_echo, coefficients, seed))

    text = reports_to_json(reports) if out_format == "json" else reports_to_csv(reports)
    _emit(text, out_path)
    if args.paper:
        for report in reports:
            print(f"{report.track}: {_REFERENCE_LINES[report.track]}", file=sys.stderr)
    return violation_exit_code(reports)


def _configuration_mapping(cfg: Configuration) -> dict[str, list[float]]:
    return {
        "a": list(cfg.a),
        "a_prime": list(cfg.a_prime),
        "b": list(cfg.b),
        "b_prime": list(cfg.b_prime),
    }


def _optimization_mapping(result) -> dict[str, object]:
    margin = result.bound - result.best_value
    out: dict[str, object] = {
        "track": result.track,
        "best_value": result.best_value,
        "bound": result.bound,
        "margin": margin,
        "attained": margin <= ATTAINMENT_TOLERANCE,
        "iterations": result.iterations,
        "improvements": [[index, value] for index, value in result.history],
        "version": __version__,
    }
    if result.restarts is not None:
        out["restarts"] = result.restarts
    if result.seed is not None:
        out["seed"] = result.seed
    if result.best_configuration is not None:
        out["best_configuration"] = _configuration_mapping(result.best_configuration)
    if result.best_coefficients is not None:
        out["best_coefficients"] = list(result.best_coefficients.as_tuple())
    if result.best_strategy is not None:
        out["best_strategy"] = list(result.best_strategy)
    if result.maximizer_count is not None:
        out["maximizer_count"] = result.maximizer_count
    if result.distinct_maximizing_correlations is not None:
        out["distinct_maximizing_correlations"] = result.distinct_maximizing_correlations
    if result.note is not None:
        out["note"] = result.note
    return out


def _run_optimize(args: argparse.Namespace) -> int:
    if args.restarts < 1:
        raise ConfigError(f"restarts must be >= 1, got {args.restarts}")
    if args.track == "classical":
        result = maximize_classical()
    elif args.track == "quantum":
        result = maximize_quantum(restarts=args.restarts, seed=args.seed)
    else:
        result = maximize_ga(restarts=args.restarts, seed=args.seed)
    _emit(canonical_json(_optimization_mapping(result)), args.out)
    return 3 if (result.bound - result.best_value) < MARGIN_TOLERANCE else 0


def _run_sweep(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise ConfigError(f"steps must be >= 2, got {args.steps}")
    points = sweep_coplanar_family(args.steps)
    if args.format == "json":
        text = sweep_to_json(points, CLASSICAL_BOUND, TSIRELSON_BOUND)
    else:
        text = sweep_to_csv(points, CLASSICAL_BOUND, TSIRELSON_BOUND)
    _emit(text, args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chshbounds",
        description=(
            "Verify, maximize, and tabulate CHSH-type bounds across the "
            "classical, quantum, and vector-response tracks."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify",
        help="evaluate tracks at a configuration and compare against their bounds",
        description=(
            "Evaluate the selected track(s) and emit bound reports. Without "
            "--canonical or a config-file configuration, the canonical "
            "maximizing configuration is used."
        ),
    )
    verify.add_argument(
        "--track",
        choices=_VERIFY_TRACKS,
        help="track to verify (required here or in the config file)",
    )
    verify.add_argument("--config", metavar="FILE", help="YAML run configuration")
    verify.add_argument(
        "--canonical",
        action="store_true",
        help="use the canonical maximizing configuration (overrides the config file)",
    )
    verify.add_argument("--seed", type=int, help="sampling seed (default 0)")
    verify.add_argument(
        "--samples",
        type=int,
        help="Monte Carlo sample count for the classical track (default 0 = skip)",
    )
    verify.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    verify.add_argument("--format", choices=("json", "csv"), help="report format (default json)")
    verify.add_argument(
        "--paper",
        action="store_true",
        help="print the inequality each report instantiates, with citations, to stderr",
    )

    optimize = sub.add_parser(
        "optimize",
        help="maximize a track's objective and report the best point found",
    )
    optimize.add_argument("--track", choices=("classical", "quantum", "ga"), required=True)
    optimize.add_argument(
        "--restarts",
        type=int,
        default=DEFAULT_RESTARTS,
        help=f"random restarts for the continuous tracks (default {DEFAULT_RESTARTS})",
    )
    optimize.add_argument("--seed", type=int, default=0, help="restart-stream seed (default 0)")
    optimize.add_argument("--out", metavar="FILE", help="write the result here instead of stdout")

    sweep = sub.add_parser(
        "sweep",
        help="tabulate the coplanar quantum family against both bounds",
    )
    sweep.add_argument("--steps", type=int, required=True, help="grid points over [0, pi] (>= 2)")
    sweep.add_argument("--out", metavar="FILE", help="write the table here instead of stdout")
    sweep.add_argument("--format", choices=("json", "csv"), default="json", help="table format")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "optimize":
            return _run_optimize(args)
        return _run_sweep(args)
    except ConfigError as exc:
        print(f"chshbounds: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"chshbounds: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
