"""Pairwise concurrence and the three-qubit concurrence lower bound.

Every spin-flip spectrum is evaluated through the Hermitian matrix
``sqrt(rho) rho_tilde sqrt(rho)``, which has the same nonzero eigenvalues
as ``rho rho_tilde``, so no non-Hermitian eigensolver is needed. That
matrix factors as ``A A^dagger`` with ``A = sqrt(rho) F sqrt(rho)*``, so the
square roots of its eigenvalues are taken directly as the singular values
of ``A``; this avoids the ``sqrt`` blow-up of rounding noise on low-rank
states.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDensityMatrix, NotPositiveSemidefinite, RankViolation
from .linalg import (
    HERMITIAN_TOL,
    PSD_CLAMP,
    hermiticity_error,
    kron,
    partial_trace,
    permute_qubits,
    sqrt_psd,
)
from .otto import CycleSpec, thermal_endpoints

TRACE_TOL = 1e-10

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_YY = kron(SIGMA_Y, SIGMA_Y)

# (pair kept in the 4-dim factor, perm moving it to qubits 0 and 1)
BIPARTITIONS = (
    ("12|3", (0, 1, 2)),
    ("13|2", (0, 2, 1)),
    ("23|1", (1, 2, 0)),
)


class StateTag(str, enum.Enum):
    COLD_END = "ColdEnd"
    HOT_END = "HotEnd"
    CUSTOM = "Custom"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EntanglementReport:
    c12: float
    c13: float
    c23: float
    tau3: float
    state_tag: StateTag = StateTag.CUSTOM


def so4_generators() -> tuple[np.ndarray, ...]:
    """The six Hermitian generators ``-i(|j><k| - |k><j|)``, ``j < k``, in lexicographic order."""
    gens = []
    for j in range(4):
        for k in range(j + 1, 4):
            g = np.zeros((4, 4), dtype=np.complex128)
            g[j, k] = -1j
            g[k, j] = 1j
            g.flags.writeable = False
            gens.append(g)
    return tuple(gens)


SO4_GENERATORS = so4_generators()
_BIPARTITE_FLIPS = tuple(kron(g, SIGMA_Y) for g in SO4_GENERATORS)


def check_density_matrix(rho, dim: int) -> np.ndarray:
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (dim, dim):
        raise InvalidDensityMatrix(f"expected a {dim}x{dim} density matrix, got shape {rho.shape}")
    err = hermiticity_error(rho)
    if err > HERMITIAN_TOL:
        raise InvalidDensityMatrix(f"density matrix is not Hermitian (deviation {err:.3g})")
    tr = np.trace(rho)
    if abs(tr - 1) > TRACE_TOL:
        raise InvalidDensityMatrix(f"density matrix has trace {tr.real:.12g}, expected 1")
    low = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0]
    if low < -PSD_CLAMP:
        raise InvalidDensityMatrix(f"density matrix has negative eigenvalue {low:.3g}")
    return rho


def _psd_root(rho: np.ndarray) -> np.ndarray:
    try:
        return sqrt_psd(rho)
    except NotPositiveSemidefinite as exc:
        raise InvalidDensityMatrix(str(exc)) from exc


def _flip_spectrum_roots(rho: np.ndarray, flip: np.ndarray, root: np.ndarray | None = None) -> np.ndarray:
    """Descending square roots of the eigenvalues of ``rho rho_tilde``."""
    if root is None:
        root = _psd_root(rho)
    return np.linalg.svd(root @ flip @ root.conj(), compute_uv=False)


def concurrence(rho2) -> float:
    """Wootters concurrence of a two-qubit density matrix, in ``[0, 1]``."""
    rho2 = check_density_matrix(rho2, 4)
    nu = _flip_spectrum_roots(rho2, SIGMA_YY)
    return float(max(0.0, nu[0] - nu[1] - nu[2] - nu[3]))


def pairwise_concurrences(rho3) -> tuple[float, float, float]:
    """Concurrences ``(c12, c13, c23)`` of the two-qubit reductions."""
    rho3 = check_density_matrix(rho3, 8)
    return (
        concurrence(partial_trace(rho3, 3, (0, 1))),
        concurrence(partial_trace(rho3, 3, (0, 2))),
        concurrence(partial_trace(rho3, 3, (1, 2))),
    )


def bipartition_concurrences(rho3, perm) -> np.ndarray:
    """Per-generator concurrences ``C_alpha`` for the cut putting ``perm[:2]`` against ``perm[2]``."""
    rho = permute_qubits(rho3, perm)
    root = _psd_root(rho)
    out = np.empty(len(SO4_GENERATORS))
    for a, flip in enumerate(_BIPARTITE_FLIPS):
        lam = _flip_spectrum_roots(rho, flip, root)
        # rank(L_alpha x sigma_y) = 4 bounds the number of nonzero eigenvalues
        if np.count_nonzero(lam**2 > PSD_CLAMP) > 4:
            raise RankViolation(
                f"generator {a} on cut {perm}: more than four nonzero eigenvalues {lam**2}"
            )
        out[a] = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
    return out


def tau3_lower_bound(rho3) -> float:
    """Lower bound on the three-qubit concurrence.

    For each of the cuts 12|3, 13|2 and 23|1 the squared generator
    concurrences are summed over the six generators; the result is the
    average over the three cuts. Zero for fully separable states.
    """
    rho3 = check_density_matrix(rho3, 8)
    total = 0.0
    for _, perm in BIPARTITIONS:
        total += float(np.sum(bipartition_concurrences(rho3, perm) ** 2))
    return total / 3.0


def entanglement_report(rho3, state_tag: StateTag = StateTag.CUSTOM) -> EntanglementReport:
    c12, c13, c23 = pairwise_concurrences(rho3)
    return EntanglementReport(c12, c13, c23, tau3_lower_bound(rho3), StateTag(state_tag))


def report_for_cycle(cs: CycleSpec, at: StateTag = StateTag.COLD_END) -> EntanglementReport:
    """Entanglement of the cold-end (default) or hot-end Gibbs state of a cycle."""
    at = StateTag(at)
    if at is StateTag.CUSTOM:
        raise ValueError("report_for_cycle measures a cycle state; use ColdEnd or HotEnd")
    hot, cold = thermal_endpoints(cs)
    state = cold if at is StateTag.COLD_END else hot
    return entanglement_report(state.rho, at)
