"""Command-line interface.

Subcommands: numbers, spectrum, rep-check, calculus-check, hopf-solve,
hopf-check, sweep.  Parameters come from `--config FILE` (line-based
`key = value`, `#` comments) and/or flags; flags win.  Reports go to
stdout or `--out` as JSON (default) or CSV.

Exit codes: 0 all checks pass, 1 at least one check failed (reports are
still emitted), 2 invalid parameters or config, 3 internal numeric
failure (overflow, undefined gamma); the message names the error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from itertools import product
from typing import Optional

from . import fock, hopf, spectrum as spectrum_mod
from .calculus import check_realization
from .params import DeformationParams, ParameterError, validate
from .report import CheckReport
from .structure import ExponentOverflowError, f_general

_PARAM_KEYS = ("p", "q", "alpha", "beta", "l")
_FLOAT_KEYS = _PARAM_KEYS + ("beta1", "beta2", "tol")
_INT_KEYS = ("dim", "n_max")
_STR_KEYS = ("mode", "format")
_ALL_KEYS = _FLOAT_KEYS + _INT_KEYS + _STR_KEYS

_DEFAULTS = {
    "alpha": 1.0,
    "beta": 0.0,
    "l": 1.0,
    "dim": 16,
    "n_max": 20,
    "tol": 1e-10,
    "mode": "grading",
    "format": "json",
}

_CALCULUS_EXPONENTS = [-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0, 4.0, 5.0]


class ConfigError(ValueError):
    """Unreadable or inconsistent configuration."""


@dataclass
class Config:
    params: DeformationParams
    beta1: Optional[float]
    beta2: Optional[float]
    dim: int
    n_max: int
    tol: float
    mode: str
    fmt: str


def _parse_value(key: str, raw: str, line_no: int, allow_lists: bool):
    if key in _STR_KEYS:
        return raw
    try:
        if "," in raw and allow_lists and key in _PARAM_KEYS:
            return tuple(float(part.strip()) for part in raw.split(","))
        if key in _INT_KEYS:
            return int(raw)
        return float(raw)
    except ValueError:
        raise ConfigError(f"line {line_no}: cannot parse value {raw!r} for key {key!r}") from None


def read_pairs(source: str, allow_lists: bool = False) -> dict:
    """Parse `key = value` lines into a dict; `#` starts a comment."""
    out: dict = {}
    for line_no, line in enumerate(source.splitlines(), start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise ConfigError(f"line {line_no}: expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in text.split("=", 1))
        if key not in _ALL_KEYS:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
        if not raw:
            raise ConfigError(f"line {line_no}: empty value for key {key!r}")
        out[key] = _parse_value(key, raw, line_no, allow_lists)
    return out


def build_config(values: dict) -> Config:
    """Fill defaults, validate, and produce a Config."""
    merged = dict(_DEFAULTS)
    merged.update({k: v for k, v in values.items() if v is not None})
    for key in ("p", "q"):
        if key not in merged:
            raise ConfigError(f"missing required parameter {key!r}")
    if merged["mode"] not in ("grading", "literal"):
        raise ConfigError(f"mode must be 'grading' or 'literal', got {merged['mode']!r}")
    if merged["format"] not in ("json", "csv"):
        raise ConfigError(f"format must be 'json' or 'csv', got {merged['format']!r}")
    if merged["tol"] <= 0:
        raise ConfigError(f"tol must be positive, got {merged['tol']}")
    params = validate(merged["p"], merged["q"], merged["alpha"], merged["beta"], merged["l"])
    return Config(
        params=params,
        beta1=merged.get("beta1"),
        beta2=merged.get("beta2"),
        dim=int(merged["dim"]),
        n_max=int(merged["n_max"]),
        tol=float(merged["tol"]),
        mode=merged["mode"],
        fmt=merged["format"],
    )


def parse_config(source: str) -> Config:
    """Config from text alone (flags absent); unknown keys are errors."""
    return build_config(read_pairs(source))


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------


def _report_results(report: CheckReport) -> list[dict]:
    return [
        {"label": e.label, "residual": e.residual, "tol": e.tol, "pass": e.passed}
        for e in report.entries
    ]


def _emit(payload: dict, cfg_fmt: str, out_path: Optional[str], csv_rows) -> None:
    if cfg_fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        header, rows = csv_rows
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _results_csv(payload: dict):
    rows = [
        (r["label"], repr(r["residual"]), repr(r["tol"]), str(r["pass"]).lower())
        for r in payload.get("results", [])
    ]
    return ("label", "residual", "tol", "pass"), rows


def _exit_from_results(payload: dict) -> int:
    return 0 if all(r["pass"] for r in payload.get("results", [])) else 1


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_numbers(cfg: Config, payload: dict):
    table = [{"n": n, "f": f_general(n, cfg.params)} for n in range(cfg.n_max + 1)]
    payload["table"] = table
    csv_rows = (("n", "f"), [(row["n"], repr(row["f"])) for row in table])
    return payload, csv_rows, 0


def _cmd_spectrum(cfg: Config, payload: dict):
    table = spectrum_mod.spectrum_table(cfg.params, cfg.n_max)
    duality = spectrum_mod.check_pq_inversion(cfg.params, cfg.n_max, cfg.tol)
    payload["results"] = [
        {
            "label": "three-form agreement",
            "residual": table.max_form_spread(),
            "tol": cfg.tol,
            "pass": table.max_form_spread() <= cfg.tol,
        }
    ] + _report_results(duality)
    payload["table"] = [
        {"n": n, "lambda": main, "form32": fq, "form34": fp} for n, main, fq, fp in table.rows
    ]
    csv_rows = (
        ("n", "lambda", "form32", "form34"),
        [(n, repr(main), repr(fq), repr(fp)) for n, main, fq, fp in table.rows],
    )
    return payload, csv_rows, _exit_from_results(payload)


def _cmd_rep_check(cfg: Config, payload: dict):
    if cfg.dim < 4:
        raise ConfigError(f"rep-check needs dim >= 4, got {cfg.dim}")
    rep = fock.build(cfg.params, cfg.dim)
    maxweight = float(max(abs(w) for w in rep.weights))
    report = fock.check_relations(rep, cfg.mode, cfg.tol * maxweight)
    payload["results"] = _report_results(report)
    payload["metadata"] = report.metadata
    return payload, _results_csv(payload), _exit_from_results(payload)


def _cmd_calculus_check(cfg: Config, payload: dict):
    report = check_realization(cfg.params, _CALCULUS_EXPONENTS, cfg.tol)
    payload["results"] = _report_results(report)
    payload["metadata"] = report.metadata
    return payload, _results_csv(payload), _exit_from_results(payload)


def _require_hopf(cfg: Config) -> hopf.HopfParams:
    if cfg.beta1 is None or cfg.beta2 is None:
        raise ConfigError("hopf commands need beta1 and beta2")
    return hopf.validate_hopf(
        cfg.params.p, cfg.params.q, cfg.params.alpha, cfg.params.l, cfg.beta1, cfg.beta2
    )


def _cmd_hopf_solve(cfg: Config, payload: dict):
    hp = _require_hopf(cfg)
    hc = hopf.solve_coefficients(hp)
    constraints = hopf.check_constraints(hc, hp, min(cfg.tol, 1e-12))
    payload["coefficients"] = hc.as_dict()
    payload["results"] = _report_results(constraints)
    rows = [("coefficient:" + k, repr(v), "", "") for k, v in hc.as_dict().items()]
    rows += _results_csv(payload)[1]
    return payload, (("label", "residual", "tol", "pass"), rows), _exit_from_results(payload)


def _cmd_hopf_check(cfg: Config, payload: dict):
    if not (4 <= cfg.dim <= 16):
        raise ConfigError(f"hopf-check needs 4 <= dim <= 16, got {cfg.dim}")
    hp = _require_hopf(cfg)
    hc = hopf.solve_coefficients(hp)
    rep = fock.build(hp.base_params(), cfg.dim, x0=0.0)

    reports = [
        hopf.check_constraints(hc, hp, min(cfg.tol, 1e-12)),
        hopf.check_coassociativity(rep, hc, cfg.tol),
        hopf.check_counit(hc, rep, cfg.tol),
        hopf.check_antipode(hc, rep, cfg.tol),
    ]
    if abs((hp.beta1 - hp.beta2) - hp.l) <= 1e-12:
        reports.append(hopf.check_homomorphism(rep, hc, hp, cfg.tol))
    else:
        payload["homomorphism"] = "skipped: beta1 - beta2 != l"

    payload["coefficients"] = hc.as_dict()
    payload["results"] = [r for rep_ in reports for r in _report_results(rep_)]
    payload["diagnostics"] = reports[3].metadata["axiom_closure"]
    return payload, _results_csv(payload), _exit_from_results(payload)


def _cmd_sweep(cfg_values: dict, payload: dict):
    if int(cfg_values["dim"]) < 4:
        raise ConfigError(f"sweep needs dim >= 4, got {cfg_values['dim']}")
    grid_keys = [k for k in _PARAM_KEYS if isinstance(cfg_values.get(k), tuple)]
    axes = [cfg_values[k] for k in grid_keys]
    points = []
    any_fail = False
    for combo in product(*axes) if grid_keys else [()]:
        values = dict(cfg_values)
        values.update(dict(zip(grid_keys, combo)))
        point = {k: values.get(k) for k in _PARAM_KEYS}
        try:
            cfg = build_config(values)
            rep = fock.build(cfg.params, cfg.dim)
            maxweight = float(max(abs(w) for w in rep.weights))
            report = fock.check_relations(rep, cfg.mode, cfg.tol * maxweight)
            point["results"] = _report_results(report)
            if not report.passed:
                any_fail = True
        except (ParameterError, fock.FockError, ConfigError, ExponentOverflowError) as exc:
            point["error"] = f"{type(exc).__name__}: {exc}"
            any_fail = True
        points.append(point)
    payload["points"] = points

    header = ("p", "q", "alpha", "beta", "l", "label", "residual", "tol", "pass")
    rows = []
    for point in points:
        base = tuple(repr(point.get(k)) for k in _PARAM_KEYS)
        if "error" in point:
            rows.append(base + (point["error"], "", "", "false"))
        else:
            for r in point["results"]:
                rows.append(
                    base
                    + (r["label"], repr(r["residual"]), repr(r["tol"]), str(r["pass"]).lower())
                )
    return payload, (header, rows), (1 if any_fail else 0)


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key = value parameter file")
    for key in ("p", "q", "alpha", "beta", "l", "beta1", "beta2", "tol"):
        common.add_argument(f"--{key}", type=float)
    common.add_argument("--dim", type=int)
    common.add_argument("--n-max", dest="n_max", type=int)
    common.add_argument("--mode", choices=("grading", "literal"))
    common.add_argument("--format", dest="fmt", choices=("json", "csv"))
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")

    parser = argparse.ArgumentParser(
        prog="osc", description="Deformed-oscillator verification toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("numbers", "table of the structure function f(n), n = 0..n_max"),
        ("spectrum", "closed-form spectrum with all three forms and the duality residual"),
        ("rep-check", "defining relations on a truncated matrix representation"),
        ("calculus-check", "difference-operator realization on monomials"),
        ("hopf-solve", "solve the coproduct coefficient system"),
        ("hopf-check", "coassociativity, counit, antipode, and relation transport"),
        ("sweep", "rep-check over a parameter grid from a config file"),
    ):
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def run(argv: list[str]) -> int:
    """Execute one CLI invocation and return the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return code

    try:
        file_values = {}
        if args.config:
            with open(args.config, "r", encoding="utf-8") as handle:
                source = handle.read()
            file_values = read_pairs(source, allow_lists=(args.command == "sweep"))
        flag_values = {
            key: getattr(args, "fmt" if key == "format" else key.replace("-", "_"), None)
            for key in _ALL_KEYS
        }
        values = dict(file_values)
        values.update({k: v for k, v in flag_values.items() if v is not None})

        payload = {"command": args.command}
        if args.command == "sweep":
            for key in ("p", "q"):
                if key not in values:
                    raise ConfigError(f"missing required parameter {key!r}")
            merged = dict(_DEFAULTS)
            merged.update(values)
            fmt = merged["format"]
            payload["grid"] = {
                k: list(v) for k, v in merged.items() if isinstance(v, tuple)
            }
            payload, csv_rows, code = _cmd_sweep(merged, payload)
        else:
            cfg = build_config(values)
            payload["params"] = cfg.params.as_dict()
            if cfg.beta1 is not None:
                payload["params"]["beta1"] = cfg.beta1
            if cfg.beta2 is not None:
                payload["params"]["beta2"] = cfg.beta2
            payload["options"] = {
                "dim": cfg.dim,
                "n_max": cfg.n_max,
                "tol": cfg.tol,
                "mode": cfg.mode,
            }
            fmt = cfg.fmt
            handler = {
                "numbers": _cmd_numbers,
                "spectrum": _cmd_spectrum,
                "rep-check": _cmd_rep_check,
                "calculus-check": _cmd_calculus_check,
                "hopf-solve": _cmd_hopf_solve,
                "hopf-check": _cmd_hopf_check,
            }[args.command]
            payload, csv_rows, code = handler(cfg, payload)

        if not args.no_timestamp:
            payload["timestamp"] = datetime.now(timezone.utc).isoformat()
        _emit(payload, fmt, args.out, csv_rows)
        return code
    except (ConfigError, ParameterError, fock.FockError, fock.DimensionMismatchError,
            hopf.Beta1Beta2MismatchError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ExponentOverflowError, hopf.GammaUndefinedError, hopf.ADegenerateError,
            ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
