"""Run configuration: a single JSON document with unit-suffixed keys.

Schema (every key optional; omitted keys take the baseline defaults)::

    {
      "model":  {"omega_mev": [2, 2, 2],         # exciton energies, meV (scalar or 3 values)
                 "omega_field_mev": [0, 0, 0],   # dipole-field energies, meV; a cycle replaces
                                                 # them with its hot/cold values
                 "jz_mev": 2.5,                  # dipolar coupling, meV
                 "lambda_mev": 0.0,              # Forster coupling, meV (ignored by sweeps)
                 "jz_convention": "literal"},    # "literal" (ordered pairs) or "per-pair"
      "cycle":  {"omega_field_hot_mev": 5.0, "omega_field_cold_mev": 1.0,
                 "t_hot_k": 40.0, "t_cold_k": 1.0},
      "sweep":  {"vary": "lambda", "grid_mev": [0, 10, 0.05],
                 "measure_entanglement": false, "entanglement_at": "cold"},
      "output": {"format": "csv", "path": null}
    }

Unknown keys are rejected.
"""

from __future__ import annotations

import copy
import json
import math
from dataclasses import dataclass
from typing import Any

from .entanglement import StateTag
from .errors import ConfigError, ParameterError
from .model import ModelParams
from .otto import CycleSpec
from .sweep import DEFAULT_GRID, SweepSpec, figure_preset

JZ_CONVENTIONS = {"literal": True, "per-pair": False}
ENTANGLE_AT = {"cold": StateTag.COLD_END, "hot": StateTag.HOT_END}
FORMATS = ("csv", "json")

DEFAULTS: dict[str, dict[str, Any]] = {
    "model": {
        "omega_mev": [2.0, 2.0, 2.0],
        "omega_field_mev": [0.0, 0.0, 0.0],
        "jz_mev": 2.5,
        "lambda_mev": 0.0,
        "jz_convention": "literal",
    },
    "cycle": {
        "omega_field_hot_mev": 5.0,
        "omega_field_cold_mev": 1.0,
        "t_hot_k": 40.0,
        "t_cold_k": 1.0,
    },
    "sweep": {
        "vary": "lambda",
        "grid_mev": list(DEFAULT_GRID),
        "measure_entanglement": False,
        "entanglement_at": "cold",
    },
    "output": {"format": "csv", "path": None},
}


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ConfigError(f"{where}: expected a finite number, got {value!r}")
    return float(value)


def _triple(value, where: str) -> list[float]:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        value = [value] * 3
    if not isinstance(value, list) or len(value) != 3:
        raise ConfigError(f"{where}: expected a number or a list of 3 numbers, got {value!r}")
    return [_number(v, f"{where}[{i}]") for i, v in enumerate(value)]


def _choice(value, options, where: str):
    if value not in options:
        raise ConfigError(f"{where}: expected one of {sorted(options)}, got {value!r}")
    return value


def _normalize(raw: dict) -> dict:
    """Type-check every field and fill defaults; returns a fresh nested dict."""
    if not isinstance(raw, dict):
        raise ConfigError(f"config must be a JSON object, got {type(raw).__name__}")
    out = copy.deepcopy(DEFAULTS)
    for section, values in raw.items():
        if section not in DEFAULTS:
            raise ConfigError(f"unknown config section {section!r}")
        if not isinstance(values, dict):
            raise ConfigError(f"{section}: expected an object, got {values!r}")
        for key, val in values.items():
            if key not in DEFAULTS[section]:
                raise ConfigError(f"unknown config key {section}.{key}")
            out[section][key] = val

    m, c, s, o = out["model"], out["cycle"], out["sweep"], out["output"]
    m["omega_mev"] = _triple(m["omega_mev"], "model.omega_mev")
    m["omega_field_mev"] = _triple(m["omega_field_mev"], "model.omega_field_mev")
    for key in ("jz_mev", "lambda_mev"):
        m[key] = _number(m[key], f"model.{key}")
    _choice(m["jz_convention"], JZ_CONVENTIONS, "model.jz_convention")
    for key in c:
        c[key] = _number(c[key], f"cycle.{key}")
    if not isinstance(s["vary"], str):
        raise ConfigError(f"sweep.vary: expected a string, got {s['vary']!r}")
    grid = s["grid_mev"]
    if not isinstance(grid, list) or len(grid) != 3:
        raise ConfigError(f"sweep.grid_mev: expected [start, stop, step], got {grid!r}")
    s["grid_mev"] = [_number(v, f"sweep.grid_mev[{i}]") for i, v in enumerate(grid)]
    if not isinstance(s["measure_entanglement"], bool):
        raise ConfigError(f"sweep.measure_entanglement: expected true or false, got {s['measure_entanglement']!r}")
    _choice(s["entanglement_at"], ENTANGLE_AT, "sweep.entanglement_at")
    _choice(o["format"], FORMATS, "output.format")
    if o["path"] is not None and not isinstance(o["path"], str):
        raise ConfigError(f"output.path: expected a string or null, got {o['path']!r}")
    return out


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc


def load_raw(path: str):
    """Parsed but unvalidated contents of a JSON config file."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc.strerror}") from exc
    return _loads(text)


@dataclass(frozen=True)
class RunConfig:
    """Validated configuration. ``data`` is the fully resolved JSON-ready dict."""

    data: dict

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        cfg = cls(_normalize(raw))
        cfg.sweep_spec()  # builds and validates every physical object
        return cfg

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        return cls.from_dict(_loads(text))

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        return cls.from_dict(load_raw(path))

    def to_dict(self) -> dict:
        return copy.deepcopy(self.data)

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, sort_keys=True)

    def merged(self, overrides: dict) -> "RunConfig":
        """New config with ``overrides`` (same nested layout) applied on top."""
        data = self.to_dict()
        if not isinstance(overrides, dict):
            raise ConfigError(f"config must be a JSON object, got {type(overrides).__name__}")
        for section, values in overrides.items():
            if section not in data:
                raise ConfigError(f"unknown config section {section!r}")
            if not isinstance(values, dict):
                raise ConfigError(f"{section}: expected an object, got {values!r}")
            data[section].update(values)
        return RunConfig.from_dict(data)

    def model_params(self) -> ModelParams:
        m = self.data["model"]
        try:
            return ModelParams(
                omega=tuple(m["omega_mev"]),
                omega_field=tuple(m["omega_field_mev"]),
                jz=m["jz_mev"],
                lambda_forster=m["lambda_mev"],
                jz_double_count=JZ_CONVENTIONS[m["jz_convention"]],
            )
        except ParameterError as exc:
            raise ConfigError(f"model: {exc}") from exc

    def cycle_spec(self) -> CycleSpec:
        c = self.data["cycle"]
        if not c["t_cold_k"] > 0:
            raise ConfigError(f"cycle.t_cold_k: must be positive, got {c['t_cold_k']}")
        if not c["t_cold_k"] < c["t_hot_k"]:
            raise ConfigError(
                f"cycle.t_cold_k: must be below cycle.t_hot_k ({c['t_cold_k']} >= {c['t_hot_k']})"
            )
        try:
            return CycleSpec(
                self.model_params(),
                omega_field_hot=c["omega_field_hot_mev"],
                omega_field_cold=c["omega_field_cold_mev"],
                t_hot=c["t_hot_k"],
                t_cold=c["t_cold_k"],
            )
        except ParameterError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"cycle: {exc}") from exc

    def sweep_spec(self) -> SweepSpec:
        s = self.data["sweep"]
        try:
            return SweepSpec(
                base=self.cycle_spec(),
                grid=tuple(s["grid_mev"]),
                vary=s["vary"],
                measure_entanglement=s["measure_entanglement"],
                entanglement_at=ENTANGLE_AT[s["entanglement_at"]],
            )
        except ParameterError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"sweep: {exc}") from exc

    @property
    def output_format(self) -> str:
        return self.data["output"]["format"]

    @property
    def output_path(self) -> str | None:
        return self.data["output"]["path"]

    @property
    def entanglement_at(self) -> StateTag:
        return ENTANGLE_AT[self.data["sweep"]["entanglement_at"]]


def sweep_spec_to_dict(spec: SweepSpec) -> dict:
    """Config sections (model, cycle, sweep) describing ``spec``."""
    cs = spec.base
    p = cs.base
    at = {v: k for k, v in ENTANGLE_AT.items()}[spec.entanglement_at]
    return {
        "model": {
            "omega_mev": list(p.omega),
            "omega_field_mev": list(p.omega_field),
            "jz_mev": p.jz,
            "lambda_mev": p.lambda_forster,
            "jz_convention": "literal" if p.jz_double_count else "per-pair",
        },
        "cycle": {
            "omega_field_hot_mev": cs.omega_field_hot,
            "omega_field_cold_mev": cs.omega_field_cold,
            "t_hot_k": cs.t_hot,
            "t_cold_k": cs.t_cold,
        },
        "sweep": {
            "vary": spec.vary,
            "grid_mev": list(spec.grid),
            "measure_entanglement": spec.measure_entanglement,
            "entanglement_at": at,
        },
    }


def preset_config(name: str) -> RunConfig:
    return RunConfig.from_dict(sweep_spec_to_dict(figure_preset(name)))
