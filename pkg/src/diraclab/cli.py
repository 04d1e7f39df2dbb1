"""Command-line front end.

Subcommands: verify (run check suites, write the JSON report), zbw (export a
position-trajectory CSV), lattice (export a convergence table), constants
(print the effective constants).  Exit codes: 0 all checks pass, 1 at least
one check failed (report still written), 2 bad flags or config, 3 I/O
failure on an output path.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .config import SUITE_NAMES, resolve_run_config
from .dynamics import (
    MomentumState,
    eigenspinor,
    fitted_zbw_frequency,
    max_mixing_state,
    write_trajectory_csv,
    zbw_trajectory,
)
from .errors import ConfigError, DomainError
from .lattice import PRESET_NAMES, convergence_study, make_preset
from .report import render_json, report_json, text_summary
from .spinors import as_spinor, spinor_norm
from .suites import run_suite


def _add_shared_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="PATH", help="key = value config file")
    sub.add_argument("--hbar", type=float, help="override hbar")
    sub.add_argument("--c", type=float, help="override the speed constant")
    sub.add_argument("--mass", type=float, help="override the mass")
    sub.add_argument("--charge", type=float, help="override the elementary charge")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diraclab",
        description="deterministic numerical checks for the matrix-model identity catalogue",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run check suites and write the JSON report")
    _add_shared_flags(p_verify)
    p_verify.add_argument("--suite", action="append", choices=SUITE_NAMES,
                          help="run only this suite (repeatable)")
    p_verify.add_argument("--seed", type=int, help="seed for randomized checks")
    p_verify.add_argument("--out", default="report.json", metavar="PATH",
                          help="report path (default report.json)")
    for name in SUITE_NAMES:
        p_verify.add_argument(f"--tol-{name}", type=float, dest=f"tol_{name}",
                              help=f"override the {name} suite tolerance")
    p_verify.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)

    p_zbw = sub.add_parser("zbw", help="export a position-trajectory CSV")
    _add_shared_flags(p_zbw)
    p_zbw.add_argument("--p", required=True, metavar="X,Y,Z", help="momentum components")
    p_zbw.add_argument("--state", default="mix",
                       help="plus | minus | mix | JSON state spec (default mix)")
    p_zbw.add_argument("--t0", type=float, default=0.0, help="first sample time")
    p_zbw.add_argument("--t1", type=float, required=True, help="last sample time")
    p_zbw.add_argument("--steps", type=int, required=True, help="number of samples")
    p_zbw.add_argument("--out", required=True, metavar="PATH", help="CSV path")

    p_lat = sub.add_parser("lattice", help="export a convergence table")
    _add_shared_flags(p_lat)
    p_lat.add_argument("--preset", required=True, help="|".join(PRESET_NAMES))
    p_lat.add_argument("--h", required=True, metavar="H1,H2,...",
                       help="grid spacings, each half the previous, at least 3")
    p_lat.add_argument("--out", required=True, metavar="PATH", help="JSON path")

    p_const = sub.add_parser("constants", help="print the effective constants")
    _add_shared_flags(p_const)
    return parser


def _resolve(args, with_verify_flags: bool = False):
    flags = {
        "hbar": args.hbar,
        "c": args.c,
        "mass": args.mass,
        "charge": args.charge,
    }
    if with_verify_flags:
        flags["seed"] = args.seed
        for name in SUITE_NAMES:
            flags[f"tol.{name}"] = getattr(args, f"tol_{name}")
        flags["suites"] = args.suite
        flags["tamper"] = args.tamper
    return resolve_run_config(flags, args.config)


def _fail_config(problems) -> int:
    for prob in problems:
        print(f"error: {prob}", file=sys.stderr)
    return 2


def cmd_verify(args) -> int:
    try:
        config = _resolve(args, with_verify_flags=True)
    except ConfigError as exc:
        return _fail_config(exc.problems)
    report = run_suite(config)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(report_json(report))
    except OSError as exc:
        print(f"error: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return 3
    print(text_summary(report))
    return 0 if report.all_passed() else 1


def _parse_momentum(text: str):
    parts = text.split(",")
    try:
        vals = [float(s) for s in parts]
    except ValueError:
        raise ConfigError([f"--p must be three comma-separated numbers, got {text!r}"])
    if len(vals) != 3:
        raise ConfigError([f"--p must have exactly 3 components, got {len(vals)}"])
    return np.array(vals)


def _state_from_term(term: dict, state: MomentumState) -> np.ndarray:
    sign = term.get("energy_sign", 1)
    if sign not in (1, -1):
        raise ConfigError([f"--state: energy_sign must be 1 or -1, got {sign!r}"])
    spin = term.get("spin", "up")
    if spin not in ("up", "down"):
        raise ConfigError([f"--state: spin must be 'up' or 'down', got {spin!r}"])
    axis = term.get("spin_axis", (0.0, 0.0))
    try:
        theta, phi = (float(v) for v in axis)
    except (TypeError, ValueError):
        raise ConfigError([f"--state: spin_axis must be [theta, phi], got {axis!r}"])
    return eigenspinor(state, int(sign), spin, (theta, phi))


def _parse_state(spec: str, state: MomentumState) -> np.ndarray:
    if spec == "plus":
        return eigenspinor(state, 1, "up")
    if spec == "minus":
        return eigenspinor(state, -1, "up")
    if spec == "mix":
        return max_mixing_state(state)
    try:
        data = json.loads(spec)
    except json.JSONDecodeError:
        raise ConfigError(
            [f"--state must be plus, minus, mix, or a JSON object, got {spec!r}"])
    if not isinstance(data, dict):
        raise ConfigError([f"--state JSON must be an object, got {type(data).__name__}"])
    if "superposition" in data:
        terms = data["superposition"]
        if not isinstance(terms, list) or not terms:
            raise ConfigError(["--state: superposition must be a non-empty list"])
        psi = np.zeros(4, dtype=complex)
        for term in terms:
            if not isinstance(term, dict):
                raise ConfigError([f"--state: superposition term must be an object, got {term!r}"])
            w = term.get("weight", 1.0)
            if isinstance(w, list):
                if len(w) != 2:
                    raise ConfigError([f"--state: weight must be a number or [re, im], got {w!r}"])
                w = complex(float(w[0]), float(w[1]))
            elif isinstance(w, (int, float)):
                w = complex(w)
            else:
                raise ConfigError([f"--state: weight must be a number or [re, im], got {w!r}"])
            psi = psi + w * _state_from_term(term, state)
        norm = spinor_norm(psi)
        if norm < 1e-12:
            raise ConfigError(["--state: superposition terms cancel to zero"])
        return as_spinor(psi / norm)
    return _state_from_term(data, state)


def cmd_zbw(args) -> int:
    try:
        config = _resolve(args)
        p = _parse_momentum(args.p)
        if args.steps < 2:
            raise ConfigError([f"--steps must be at least 2, got {args.steps}"])
        if not args.t1 > args.t0:
            raise ConfigError([f"--t1 must exceed --t0, got t0={args.t0} t1={args.t1}"])
        state = MomentumState(p=p, constants=config.constants)
        psi = _parse_state(args.state, state)
    except ConfigError as exc:
        return _fail_config(exc.problems)
    except DomainError as exc:
        return _fail_config([str(exc)])
    times = np.linspace(args.t0, args.t1, args.steps)
    samples = zbw_trajectory(state, psi, times)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_trajectory_csv(samples, fh)
    except OSError as exc:
        print(f"error: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return 3
    fitted = fitted_zbw_frequency(state, psi)
    reference = 2.0 * state.energy / config.constants.hbar
    print(f"wrote {len(samples)} rows to {args.out}")
    print(f"fitted zbw angular frequency {fitted:.10g} vs 2 E_p / hbar = {reference:.10g}")
    return 0


def cmd_lattice(args) -> int:
    try:
        config = _resolve(args)
        if args.preset not in PRESET_NAMES:
            raise ConfigError(
                [f"unknown preset {args.preset!r}; choose from {list(PRESET_NAMES)}"])
        parts = args.h.split(",")
        try:
            spacings = [float(s) for s in parts]
        except ValueError:
            raise ConfigError([f"--h must be comma-separated numbers, got {args.h!r}"])
        if len(spacings) < 3:
            raise ConfigError([f"--h needs at least 3 spacings, got {len(spacings)}"])
        study = convergence_study(make_preset(args.preset), spacings, config.constants)
    except ConfigError as exc:
        return _fail_config(exc.problems)
    except DomainError as exc:
        return _fail_config([str(exc)])
    payload = {"preset": args.preset}
    payload.update(study.to_dict())
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(render_json(payload) + "\n")
    except OSError as exc:
        print(f"error: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return 3
    if isinstance(study.order, float):
        print(f"estimated convergence order {study.order:.3f}")
    else:
        print(f"convergence verdict: {study.order}")
    return 0


def cmd_constants(args) -> int:
    try:
        config = _resolve(args)
    except ConfigError as exc:
        return _fail_config(exc.problems)
    for key, val in config.constants.to_dict().items():
        print(f"{key} = {val!r}")
    return 0


_COMMANDS = {
    "verify": cmd_verify,
    "zbw": cmd_zbw,
    "lattice": cmd_lattice,
    "constants": cmd_constants,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
