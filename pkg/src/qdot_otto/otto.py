"""Quantum Otto cycle in the ideal adiabatic limit.

The working medium is thermalised at ``(Omega_H, T_H)`` and ``(Omega_C, T_C)``.
The adiabatic strokes carry each eigenlevel's population to its partner
level on the other Hamiltonian; partners are found from eigenvector overlap.
Sign convention: ``w > 0`` is work delivered by the engine and
``w = q_hot + q_cold``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

import numpy as np

from .errors import AmbiguousPairing, NonPositiveTemperature, ParameterError
from .linalg import EigenDecomposition, eig_hermitian
from .model import ModelParams, build_hamiltonian
from .thermo import ThermalState, gibbs_state

MODE_TOL = 1e-12
DEGENERACY_TOL = 1e-8  # meV
MIN_OVERLAP = 0.5


class Mode(str, enum.Enum):
    ENGINE = "Engine"
    REFRIGERATOR = "Refrigerator"
    ACCELERATOR = "Accelerator"
    HEATER = "Heater"
    UNCLASSIFIED = "Unclassified"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CycleSpec:
    """One Otto cycle: fixed couplings in ``base``, field energies in meV, baths in K.

    ``base.omega_field`` is ignored; each stroke applies the uniform field
    ``omega_field_hot`` or ``omega_field_cold``. ``Omega_H > Omega_C`` is the
    usual setting but is not required.
    """

    base: ModelParams
    omega_field_hot: float
    omega_field_cold: float
    t_hot: float
    t_cold: float

    def __post_init__(self):
        for name in ("omega_field_hot", "omega_field_cold", "t_hot", "t_cold"):
            val = float(getattr(self, name))
            if not math.isfinite(val):
                raise ParameterError(f"{name} must be finite, got {val}")
            object.__setattr__(self, name, val)
        if not self.t_cold > 0:
            raise NonPositiveTemperature(f"t_cold must be positive, got {self.t_cold}")
        if not self.t_hot > self.t_cold:
            raise ParameterError(f"t_hot ({self.t_hot}) must exceed t_cold ({self.t_cold})")

    @property
    def hot_params(self) -> ModelParams:
        return self.base.with_field(self.omega_field_hot)

    @property
    def cold_params(self) -> ModelParams:
        return self.base.with_field(self.omega_field_cold)

    def with_lambda(self, lambda_forster: float) -> "CycleSpec":
        return replace(self, base=self.base.with_lambda(lambda_forster))


@dataclass(frozen=True)
class CycleResult:
    w: float
    q_hot: float
    q_cold: float
    efficiency: Optional[float]
    mode: Mode
    level_pairing: tuple[int, ...]


class LevelPairing(NamedTuple):
    """``perm[n]`` is the cold level reached from hot level ``n``."""

    perm: tuple[int, ...]
    overlaps: tuple[float, ...]


def _clusters(energies: np.ndarray, tol: float) -> list[list[int]]:
    groups = [[0]]
    for m in range(1, len(energies)):
        if energies[m] - energies[groups[-1][-1]] <= tol:
            groups[-1].append(m)
        else:
            groups.append([m])
    return groups


def match_levels(spec_hot: EigenDecomposition, spec_cold: EigenDecomposition) -> LevelPairing:
    """Pair every hot eigenlevel with a cold eigenlevel.

    Overlaps are measured against whole degenerate clusters of the cold
    spectrum, because the basis inside a degenerate subspace is arbitrary
    and all its levels share one energy and one population. Pairs are taken
    greedily by descending overlap, each cold level used once; inside a
    cluster cold levels are handed out in ascending order.

    Raises
    ------
    AmbiguousPairing
        If any matched overlap is below 1/2.
    """
    if spec_hot.dim != spec_cold.dim:
        raise ValueError("hot and cold spectra have different dimensions")
    n = spec_hot.dim
    overlap = np.abs(spec_hot.eigenvectors.conj().T @ spec_cold.eigenvectors) ** 2
    groups = _clusters(spec_cold.eigenvalues, DEGENERACY_TOL)
    cluster_overlap = np.stack([overlap[:, g].sum(axis=1) for g in groups], axis=1)

    # quantize so rounding noise cannot reorder ties; ties fall back to index order
    key = np.round(cluster_overlap, 9)
    candidates = sorted((-key[h, k], h, k) for h in range(n) for k in range(len(groups)))
    free = [list(g) for g in groups]
    perm = [-1] * n
    got = [0.0] * n
    for _, h, k in candidates:
        if perm[h] >= 0 or not free[k]:
            continue
        perm[h] = free[k].pop(0)
        got[h] = float(cluster_overlap[h, k])
    worst = min(got)
    if worst < MIN_OVERLAP:
        raise AmbiguousPairing(
            f"hot level {got.index(worst)} has best available overlap {worst:.3g} < {MIN_OVERLAP}"
        )
    return LevelPairing(tuple(perm), tuple(float(g) for g in got))


def classify_mode(w: float, q_hot: float, q_cold: float) -> Mode:
    eps = MODE_TOL
    if q_hot >= -eps and q_cold <= eps and w > eps:
        return Mode.ENGINE
    if q_hot <= eps and q_cold >= -eps and w <= eps:
        return Mode.REFRIGERATOR
    if q_hot >= -eps and q_cold <= eps and w < -eps:
        return Mode.ACCELERATOR
    if q_hot <= eps and q_cold <= eps and w <= eps:
        return Mode.HEATER
    return Mode.UNCLASSIFIED


def efficiency_of(cr: CycleResult, cs: CycleSpec | None = None) -> Optional[float]:
    """``W / Q_H`` in engine mode, ``None`` otherwise."""
    if cr.mode is not Mode.ENGINE:
        return None
    return cr.w / cr.q_hot


def thermal_endpoints(cs: CycleSpec) -> tuple[ThermalState, ThermalState]:
    """Hot-end and cold-end Gibbs states of the cycle."""
    hot = gibbs_state(eig_hermitian(build_hamiltonian(cs.hot_params)), cs.t_hot)
    cold = gibbs_state(eig_hermitian(build_hamiltonian(cs.cold_params)), cs.t_cold)
    return hot, cold


def cycle_from_states(hot: ThermalState, cold: ThermalState) -> CycleResult:
    """Heats and work of the cycle through two already thermalised endpoints.

    No ordering of the bath temperatures is assumed, which makes this the
    entry point for second-law checks with a single bath.
    """
    pairing = match_levels(hot.spectrum, cold.spectrum)
    perm = np.array(pairing.perm)

    e_hot, p_hot = hot.energies, hot.probs
    e_cold, p_cold = cold.energies[perm], cold.probs[perm]

    dp = p_hot - p_cold
    q_hot = float(np.sum(e_hot * dp))
    q_cold = -float(np.sum(e_cold * dp))
    # summed from the level shifts so identical endpoints give exactly zero work
    w = float(np.sum((e_hot - e_cold) * dp))
    mode = classify_mode(w, q_hot, q_cold)
    result = CycleResult(w, q_hot, q_cold, None, mode, pairing.perm)
    return replace(result, efficiency=efficiency_of(result))


def run_cycle(cs: CycleSpec) -> CycleResult:
    return cycle_from_states(*thermal_endpoints(cs))
