"""Command-line front end.

Subcommands: ``cycle``, ``sweep``, ``figure NAME`` and ``entangle``.
Configuration is resolved as baseline defaults, then ``--preset``, then the
``--config`` file, then the remaining flags. Exit codes: 0 success,
2 configuration error, 3 numerical error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__
from .config import ENTANGLE_AT, FORMATS, JZ_CONVENTIONS, RunConfig, load_raw, preset_config
from .entanglement import EntanglementReport, report_for_cycle
from .errors import ConfigError, NumericalError, ParameterError
from .otto import CycleResult, run_cycle
from .sweep import (
    DEFAULT_GRID,
    ENTANGLEMENT_COLUMNS,
    PRESET_NAMES,
    SIGNED_COLUMNS,
    SweepRow,
    find_critical_lambdas,
    run_sweep,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

SWEEP_COLUMNS = (
    "lambda_mev",
    "w_mev",
    "q_hot_mev",
    "q_cold_mev",
    "efficiency",
    "mode",
    "c12",
    "c13",
    "c23",
    "tau3",
)
CYCLE_COLUMNS = ("w_mev", "q_hot_mev", "q_cold_mev", "efficiency", "mode")
ENTANGLE_COLUMNS = ("c12", "c13", "c23", "tau3", "state_tag")
CRITICAL_COLUMNS = ("column", "lambda_mev", "direction")


def format_value(v) -> str:
    """CSV cell: 9 significant digits for numbers, empty for missing values."""
    if v is None:
        return ""
    if isinstance(v, float):
        s = format(v, ".9g")
        return "0" if s == "-0" else s
    return str(v)


def _json_value(v):
    if v is None or isinstance(v, (int, float)):
        return v
    return str(v)


def cycle_record(cr: CycleResult) -> dict:
    return {
        "w_mev": cr.w,
        "q_hot_mev": cr.q_hot,
        "q_cold_mev": cr.q_cold,
        "efficiency": cr.efficiency,
        "mode": cr.mode.value,
    }


def sweep_record(row: SweepRow) -> dict:
    rec = {name: getattr(row, name) for name in SWEEP_COLUMNS}
    rec["mode"] = row.mode.value
    return rec


def entangle_record(rep: EntanglementReport) -> dict:
    return {"c12": rep.c12, "c13": rep.c13, "c23": rep.c23, "tau3": rep.tau3, "state_tag": rep.state_tag.value}


def render_csv(columns: Sequence[str], records: list[dict], criticals: list[dict] | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow([format_value(rec[c]) for c in columns])
    if criticals is not None:
        writer.writerow([])
        writer.writerow(CRITICAL_COLUMNS)
        for crit in criticals:
            writer.writerow([format_value(crit[c]) for c in CRITICAL_COLUMNS])
    return buf.getvalue()


def render_json(command: str, cfg: RunConfig, records: list[dict], criticals: list[dict] | None = None) -> str:
    doc = {
        "metadata": {
            "artifact": "qdot_otto",
            "version": __version__,
            "command": command,
            "config": cfg.to_dict(),
        },
        "rows": [{k: _json_value(v) for k, v in rec.items()} for rec in records],
    }
    if criticals is not None:
        doc["criticals"] = criticals
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _add_common(p: argparse.ArgumentParser, with_preset: bool = True):
    p.add_argument("--config", metavar="PATH", help="JSON run configuration")
    if with_preset:
        p.add_argument("--preset", metavar="NAME", help=f"start from a figure preset ({', '.join(PRESET_NAMES)})")
    p.add_argument("--format", choices=FORMATS, help="output format (default csv)")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of standard output")
    p.add_argument("--grid", metavar="START,STOP,STEP", help="lambda grid in meV")
    p.add_argument("--criticals", metavar="COLUMN", help="append critical lambdas of COLUMN")
    p.add_argument("--entangle-at", choices=sorted(ENTANGLE_AT), help="cycle state used for entanglement")
    p.add_argument("--jz-convention", choices=sorted(JZ_CONVENTIONS), help="J_z pair-sum convention")
    p.add_argument("--print-config", action="store_true", help="print the resolved configuration and exit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdot-otto",
        description="Three-quantum-dot Otto engine: cycles, Forster-coupling sweeps and entanglement.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_common(sub.add_parser("cycle", help="evaluate one Otto cycle"))
    _add_common(sub.add_parser("sweep", help="sweep the Forster coupling"))
    fig = sub.add_parser("figure", help="sweep a figure preset on the default grid")
    fig.add_argument("name", help="preset name")
    _add_common(fig, with_preset=False)
    _add_common(sub.add_parser("entangle", help="entanglement of a cycle's thermal state"))
    return parser


def _parse_grid(text: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise ConfigError(f"--grid: expected START,STOP,STEP, got {text!r}") from None
    if len(vals) != 3:
        raise ConfigError(f"--grid: expected START,STOP,STEP, got {text!r}")
    return vals


def resolve_config(args: argparse.Namespace) -> RunConfig:
    preset = getattr(args, "name", None) or getattr(args, "preset", None)
    cfg = preset_config(preset) if preset else RunConfig.from_dict({})
    if args.command == "figure":
        cfg = cfg.merged({"sweep": {"grid_mev": list(DEFAULT_GRID)}})
    if args.config:
        cfg = cfg.merged(load_raw(args.config))
    overrides: dict[str, dict] = {}
    if args.grid:
        overrides.setdefault("sweep", {})["grid_mev"] = _parse_grid(args.grid)
    if args.entangle_at:
        overrides.setdefault("sweep", {})["entanglement_at"] = args.entangle_at
    if args.jz_convention:
        overrides.setdefault("model", {})["jz_convention"] = args.jz_convention
    if args.format:
        overrides.setdefault("output", {})["format"] = args.format
    if args.out:
        overrides.setdefault("output", {})["path"] = args.out
    return cfg.merged(overrides) if overrides else cfg


def _emit(text: str, cfg: RunConfig):
    path = cfg.output_path
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write output {path!r}: {exc.strerror}") from exc


def cmd_cycle(cfg: RunConfig) -> str:
    rec = cycle_record(run_cycle(cfg.cycle_spec()))
    if cfg.output_format == "json":
        return render_json("cycle", cfg, [rec])
    return render_csv(CYCLE_COLUMNS, [rec])


def cmd_entangle(cfg: RunConfig) -> str:
    rec = entangle_record(report_for_cycle(cfg.cycle_spec(), cfg.entanglement_at))
    if cfg.output_format == "json":
        return render_json("entangle", cfg, [rec])
    return render_csv(ENTANGLE_COLUMNS, [rec])


def cmd_sweep(cfg: RunConfig, criticals_column: str | None = None, command: str = "sweep") -> str:
    spec = cfg.sweep_spec()
    if criticals_column is not None:
        if criticals_column not in SIGNED_COLUMNS + ENTANGLEMENT_COLUMNS:
            raise ConfigError(
                f"--criticals: unknown column {criticals_column!r}; "
                f"choose from {', '.join(SIGNED_COLUMNS + ENTANGLEMENT_COLUMNS)}"
            )
        if criticals_column in ENTANGLEMENT_COLUMNS and not spec.measure_entanglement:
            raise ConfigError(f"--criticals {criticals_column}: entanglement is not measured in this sweep")
    rows = run_sweep(spec)
    records = [sweep_record(r) for r in rows]
    crits = None
    if criticals_column is not None:
        crits = [
            {"column": criticals_column, "lambda_mev": lam, "direction": d}
            for lam, d in find_critical_lambdas(rows, criticals_column)
        ]
    if cfg.output_format == "json":
        return render_json(command, cfg, records, crits)
    return render_csv(SWEEP_COLUMNS, records, crits)


def cmd_figure(cfg: RunConfig, criticals_column: str | None = None) -> str:
    return cmd_sweep(cfg, criticals_column, command="figure")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        if args.print_config:
            sys.stdout.write(cfg.to_json() + "\n")
            return EXIT_OK
        if args.command == "cycle":
            text = cmd_cycle(cfg)
        elif args.command == "entangle":
            text = cmd_entangle(cfg)
        elif args.command == "figure":
            text = cmd_figure(cfg, args.criticals)
        else:
            text = cmd_sweep(cfg, args.criticals)
        _emit(text, cfg)
    except ParameterError as exc:
        print(f"qdot-otto: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalError as exc:
        print(f"qdot-otto: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
