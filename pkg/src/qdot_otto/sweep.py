"""One-dimensional sweeps over the Forster coupling, figure presets, and root finding."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .entanglement import StateTag, report_for_cycle
from .errors import ParameterError, QdotOttoError, UnknownPreset
from .model import ModelParams
from .otto import CycleSpec, Mode, run_cycle

ONSET_THRESHOLD = 1e-6
ENTANGLEMENT_COLUMNS = ("c12", "c13", "c23", "tau3")
SIGNED_COLUMNS = ("w_mev", "q_hot_mev", "q_cold_mev")
DEFAULT_GRID = (0.0, 10.0, 0.05)
SUPPORTED_VARY = ("lambda",)


@dataclass(frozen=True)
class SweepSpec:
    base: CycleSpec
    grid: tuple[float, float, float] = DEFAULT_GRID
    vary: str = "lambda"
    measure_entanglement: bool = False
    entanglement_at: StateTag = StateTag.COLD_END

    def __post_init__(self):
        start, stop, step = (float(x) for x in self.grid)
        object.__setattr__(self, "grid", (start, stop, step))
        object.__setattr__(self, "entanglement_at", StateTag(self.entanglement_at))
        if self.vary not in SUPPORTED_VARY:
            raise ParameterError(f"cannot sweep {self.vary!r}; supported: {', '.join(SUPPORTED_VARY)}")
        if not all(math.isfinite(x) for x in self.grid):
            raise ParameterError(f"grid values must be finite, got {self.grid}")
        if not step > 0:
            raise ParameterError(f"grid step must be positive, got {step}")
        if start > stop:
            raise ParameterError(f"grid start {start} exceeds stop {stop}")
        if len(self.values()) < 2:
            raise ParameterError(f"grid {self.grid} yields fewer than 2 points")

    def values(self) -> np.ndarray:
        return grid_values(*self.grid)


@dataclass(frozen=True)
class SweepRow:
    lambda_mev: float
    w_mev: float
    q_hot_mev: float
    q_cold_mev: float
    efficiency: Optional[float]
    mode: Mode
    c12: Optional[float] = None
    c13: Optional[float] = None
    c23: Optional[float] = None
    tau3: Optional[float] = None


def grid_values(start: float, stop: float, step: float) -> np.ndarray:
    """Inclusive grid; the point count is rounded so (0, 8, 0.1) gives 81 points ending at 8."""
    n = int(math.floor((stop - start) / step + 0.5)) + 1
    vals = start + step * np.arange(n)
    # land decimal grids such as (0, 8, 0.1) exactly on their nominal values
    return np.round(vals, 12)


def _row(spec: SweepSpec, lam: float) -> SweepRow:
    cs = spec.base.with_lambda(lam)
    try:
        cr = run_cycle(cs)
        ent = report_for_cycle(cs, spec.entanglement_at) if spec.measure_entanglement else None
    except QdotOttoError as exc:
        raise type(exc)(f"at lambda = {lam:g} meV: {exc}") from exc
    row = SweepRow(float(lam), cr.w, cr.q_hot, cr.q_cold, cr.efficiency, cr.mode)
    if ent is not None:
        row = replace(row, c12=ent.c12, c13=ent.c13, c23=ent.c23, tau3=ent.tau3)
    return row


def run_sweep(spec: SweepSpec, workers: int | None = None) -> list[SweepRow]:
    """Evaluate every grid point; rows come back in ascending lambda.

    With ``workers > 1`` points are evaluated on a thread pool; the output is
    identical to the serial run.
    """
    lams = spec.values()
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda lam: _row(spec, lam), lams))
    return [_row(spec, lam) for lam in lams]


def column_values(rows: Sequence[SweepRow], column: str) -> np.ndarray:
    vals = [getattr(r, column) for r in rows]
    if any(v is None for v in vals):
        raise ValueError(f"column {column!r} has missing values; was entanglement measured?")
    return np.asarray(vals, dtype=float)


def find_critical_lambdas(rows: Sequence[SweepRow], column: str) -> list[tuple[float, str]]:
    """Linear-interpolated crossings of ``column`` between neighbouring rows.

    Signed columns (work and heats) report sign changes; the nonnegative
    entanglement columns report crossings of ``ONSET_THRESHOLD``. Returns
    ``(lambda_mev, "rising" | "falling")`` pairs in ascending lambda.
    """
    if column not in SIGNED_COLUMNS + ENTANGLEMENT_COLUMNS:
        raise ValueError(f"no critical points defined for column {column!r}")
    if len(rows) < 2:
        raise ValueError("need at least two rows")
    level = ONSET_THRESHOLD if column in ENTANGLEMENT_COLUMNS else 0.0
    lam = np.array([r.lambda_mev for r in rows], dtype=float)
    f = column_values(rows, column) - level

    out = []
    for i in range(len(rows) - 1):
        a, b = f[i], f[i + 1]
        if a <= 0 < b:
            direction = "rising"
        elif a > 0 >= b:
            direction = "falling"
        else:
            continue
        root = lam[i] + (lam[i + 1] - lam[i]) * (-a) / (b - a)
        out.append((float(root), direction))
    return out


BASELINE = dict(omega=2.0, jz=2.5, omega_field_hot=5.0, omega_field_cold=1.0, t_hot=40.0, t_cold=1.0)

# name -> (omega triple, measure_entanglement)
_PRESETS = {
    "work_heat_baseline": ((2.0, 2.0, 2.0), False),
    "work_vs_omega_equal": ((4.0, 4.0, 4.0), False),
    "work_vs_omega_mixed": ((2.0, 2.0, 4.0), False),
    "ent_sym_2mev": ((2.0, 2.0, 2.0), True),
    "ent_sym_4mev": ((4.0, 4.0, 4.0), True),
    "ent_asym_2_2_4": ((2.0, 2.0, 4.0), True),
    "ent_asym_4_4_6": ((4.0, 4.0, 6.0), True),
}
PRESET_NAMES = tuple(_PRESETS)


def baseline_cycle(omega=(2.0, 2.0, 2.0), jz_double_count: bool = True, lambda_forster: float = 0.0) -> CycleSpec:
    """Baseline cycle: J_z = 2.5 meV, field 5 -> 1 meV, baths at 40 K and 1 K."""
    base = ModelParams(
        omega=omega, jz=BASELINE["jz"], lambda_forster=lambda_forster, jz_double_count=jz_double_count
    )
    return CycleSpec(
        base,
        omega_field_hot=BASELINE["omega_field_hot"],
        omega_field_cold=BASELINE["omega_field_cold"],
        t_hot=BASELINE["t_hot"],
        t_cold=BASELINE["t_cold"],
    )


def figure_preset(name: str) -> SweepSpec:
    """Sweep definition for a named figure.

    The entanglement presets inherit J_z, the field energies and the bath
    temperatures from the work/heat baseline and differ only in the exciton
    energies.
    """
    try:
        omega, ent = _PRESETS[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; known presets: {', '.join(PRESET_NAMES)}") from None
    return SweepSpec(
        base=baseline_cycle(omega),
        grid=DEFAULT_GRID,
        measure_entanglement=ent,
        entanglement_at=StateTag.COLD_END,
    )
