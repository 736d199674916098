"""Gibbs states and thermal expectation values."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveTemperature
from .linalg import EigenDecomposition, eig_hermitian

K_B = 8.617333262e-2
"""Boltzmann constant in meV/K."""


def beta(t: float) -> float:
    """Inverse temperature in 1/meV."""
    if not t > 0 or not math.isfinite(t):
        raise NonPositiveTemperature(f"temperature must be a positive finite number of kelvin, got {t}")
    return 1.0 / (K_B * t)


def boltzmann_weights(energies: np.ndarray, t: float) -> tuple[np.ndarray, float]:
    """Occupation probabilities and the ground-shifted partition function.

    Energies are shifted by their minimum before exponentiating, which keeps
    ``exp`` finite at 1 K for meV-scale spectra and leaves the probabilities
    unchanged.
    """
    b = beta(t)
    e = np.asarray(energies, dtype=float)
    w = np.exp(-b * (e - e.min()))
    z = float(w.sum())
    return w / z, z


@dataclass(frozen=True)
class ThermalState:
    """Equilibrium state of a Hamiltonian at temperature ``temperature`` (K).

    ``z`` is the partition function with energies measured from the ground
    level; multiply by ``exp(-E_min / (k_B T))`` for the absolute value.
    ``probs[n]`` pairs with ``spectrum.eigenvalues[n]``.
    """

    rho: np.ndarray
    z: float
    probs: np.ndarray
    temperature: float
    spectrum: EigenDecomposition

    @property
    def energies(self) -> np.ndarray:
        return self.spectrum.eigenvalues

    @property
    def hamiltonian(self) -> np.ndarray:
        return self.spectrum.reconstruct()

    @property
    def unshifted_z(self) -> float:
        return self.z * math.exp(-beta(self.temperature) * self.energies[0])


def gibbs_state(h, t: float) -> ThermalState:
    spec = h if isinstance(h, EigenDecomposition) else eig_hermitian(h)
    probs, z = boltzmann_weights(spec.eigenvalues, t)
    v = spec.eigenvectors
    rho = (v * probs) @ v.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    probs.setflags(write=False)
    rho.setflags(write=False)
    return ThermalState(rho=rho, z=z, probs=probs, temperature=float(t), spectrum=spec)


def internal_energy(ts: ThermalState) -> float:
    """Mean energy ``sum_n P_n E_n`` in meV."""
    return float(np.dot(ts.probs, ts.energies))


def mean_value(ts: ThermalState, op: np.ndarray) -> float:
    """``Tr(rho op)`` for a Hermitian observable."""
    return float(np.trace(ts.rho @ op).real)


def purity(rho: np.ndarray) -> float:
    return float(np.trace(rho @ rho).real)
