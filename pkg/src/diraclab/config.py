"""Run configuration: constants, seed, suite selection, tolerance overrides.

Precedence is command-line flag over config file over built-in default.
The config file is plain "key = value" lines; '#' starts a comment.
Recognized keys:

    hbar, c, mass, charge   positive floats
    seed                    non-negative integer
    tol.algebra, tol.states, tol.dynamics, tol.fields, tol.lattice
                            positive floats, per-suite base tolerances

Every problem in a file is reported, not just the first.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

from .constants import PhysicalConstants
from .errors import ConfigError

DEFAULT_SEED = 137
SUITE_NAMES = ("algebra", "states", "dynamics", "fields", "lattice")
ENV_CONFIG = "DIRACLAB_CONFIG"

_CONSTANT_KEYS = ("hbar", "c", "mass", "charge")
_TOL_KEYS = tuple(f"tol.{name}" for name in SUITE_NAMES)
KNOWN_KEYS = _CONSTANT_KEYS + ("seed",) + _TOL_KEYS


def read_config_file(path: str) -> dict:
    """Parse a key = value file into {key: parsed value}.

    Raises ConfigError listing every malformed line, unknown key,
    duplicate, or out-of-range value.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError([f"cannot read config file {path!r}: {exc}"])
    problems = []
    values: dict = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            problems.append(f"line {lineno}: expected 'key = value', got {line!r}")
            continue
        key, _, text = line.partition("=")
        key = key.strip()
        text = text.strip()
        if key not in KNOWN_KEYS:
            problems.append(f"line {lineno}: unknown key {key!r}")
            continue
        if key in values:
            problems.append(f"line {lineno}: duplicate key {key!r}")
            continue
        if key == "seed":
            try:
                seed = int(text)
            except ValueError:
                problems.append(f"line {lineno}: seed must be an integer, got {text!r}")
                continue
            if seed < 0:
                problems.append(f"line {lineno}: seed must be >= 0, got {seed}")
                continue
            values[key] = seed
        else:
            try:
                num = float(text)
            except ValueError:
                problems.append(f"line {lineno}: {key} must be a number, got {text!r}")
                continue
            if not (math.isfinite(num) and num > 0):
                problems.append(f"line {lineno}: {key} must be finite and > 0, got {text!r}")
                continue
            values[key] = num
    if problems:
        raise ConfigError(problems)
    return values


@dataclass(frozen=True)
class RunConfig:
    """Everything a verification run depends on."""

    constants: PhysicalConstants = field(default_factory=PhysicalConstants)
    seed: int = DEFAULT_SEED
    suites: tuple = SUITE_NAMES
    tol_overrides: dict = field(default_factory=dict)
    tamper: bool = False

    def __post_init__(self):
        problems = []
        if not (isinstance(self.seed, int) and not isinstance(self.seed, bool) and self.seed >= 0):
            problems.append(f"seed must be a non-negative integer, got {self.seed!r}")
        unknown = [s for s in self.suites if s not in SUITE_NAMES]
        if unknown:
            problems.append(f"unknown suites {unknown}; choose from {list(SUITE_NAMES)}")
        if len(set(self.suites)) != len(self.suites):
            problems.append(f"duplicate suites in {list(self.suites)}")
        for key, val in self.tol_overrides.items():
            if key not in SUITE_NAMES:
                problems.append(f"unknown tolerance key {key!r}")
            elif not (isinstance(val, (int, float)) and math.isfinite(val) and val > 0):
                problems.append(f"tolerance {key} must be finite and > 0, got {val!r}")
        if problems:
            raise ConfigError(problems)
        # keep suite order canonical regardless of how they were requested
        ordered = tuple(s for s in SUITE_NAMES if s in self.suites)
        object.__setattr__(self, "suites", ordered)

    def tol(self, suite: str, fallback: float) -> float:
        return float(self.tol_overrides.get(suite, fallback))


def resolve_run_config(flag_values: dict, config_path: str | None = None,
                       env: dict | None = None) -> RunConfig:
    """Merge flags, config file, and defaults into a RunConfig.

    flag_values may carry: hbar, c, mass, charge, seed, tol.* (None means
    not given), suites (list or None), tamper (bool).
    """
    env = os.environ if env is None else env
    path = config_path or env.get(ENV_CONFIG)
    file_values = read_config_file(path) if path else {}

    def pick(key):
        flag = flag_values.get(key)
        if flag is not None:
            return flag
        return file_values.get(key)

    const_kwargs = {}
    for key in _CONSTANT_KEYS:
        val = pick(key)
        if val is not None:
            const_kwargs[key] = float(val)
    try:
        constants = PhysicalConstants(**const_kwargs)
    except ValueError as exc:
        raise ConfigError([str(exc)])

    seed = pick("seed")
    seed = DEFAULT_SEED if seed is None else int(seed)

    tol_overrides = {}
    for key in _TOL_KEYS:
        val = pick(key)
        if val is not None:
            tol_overrides[key.split(".", 1)[1]] = float(val)

    suites = flag_values.get("suites")
    suites = tuple(suites) if suites else SUITE_NAMES
    tamper = bool(flag_values.get("tamper", False))
    return RunConfig(constants=constants, seed=seed, suites=suites,
                     tol_overrides=tol_overrides, tamper=tamper)
