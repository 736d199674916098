"""Small dense complex linear algebra for 2x2 through 8x8 matrices.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``. Qubit 0
is the most significant bit of the basis index, so for three qubits the
basis state ``|n0 n1 n2>`` sits at row ``4*n0 + 2*n1 + n2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange, NonHermitianInput, NotPositiveSemidefinite

HERMITIAN_TOL = 1e-10
PSD_CLAMP = 1e-10
_PHASE_TIE_TOL = 1e-12


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues and the unitary whose column ``k`` pairs with value ``k``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        w = np.array(self.eigenvalues, dtype=float)
        v = np.array(self.eigenvectors, dtype=np.complex128)
        w.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "eigenvalues", w)
        object.__setattr__(self, "eigenvectors", v)

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def hermiticity_error(m: np.ndarray) -> float:
    """Largest entrywise deviation of ``m`` from ``m^dagger``."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        return np.inf
    return float(np.max(np.abs(m - m.conj().T), initial=0.0))


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    return hermiticity_error(m) <= tol


def hermitize(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def kron(a, b) -> np.ndarray:
    """Tensor product; entry ``(i*rb + k, j*cb + l)`` equals ``a[i, j] * b[k, l]``."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*factors) -> np.ndarray:
    out = np.ones((1, 1), dtype=np.complex128)
    for f in factors:
        out = kron(out, f)
    return out


def _fix_phases(v: np.ndarray) -> np.ndarray:
    # largest-magnitude component of each column made real positive, lowest index on ties
    v = v.copy()
    mags = np.abs(v)
    for k in range(v.shape[1]):
        col = mags[:, k]
        idx = int(np.flatnonzero(col >= col.max() - _PHASE_TIE_TOL)[0])
        c = v[idx, k]
        v[:, k] *= np.conj(c) / abs(c)
        v[idx, k] = abs(c)
    return v


def eig_hermitian(m) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix.

    Eigenvalues come back ascending. Each eigenvector has its largest
    component made real and positive, so the output is reproducible for a
    fixed input.

    Raises
    ------
    NonHermitianInput
        If ``m`` is not square or deviates from Hermitian by more than 1e-10.
    """
    m = as_matrix(m)
    err = hermiticity_error(m)
    if err > HERMITIAN_TOL:
        raise NonHermitianInput(f"matrix of shape {m.shape} is not Hermitian (deviation {err:.3g})")
    w, v = np.linalg.eigh(hermitize(m))
    return EigenDecomposition(np.asarray(w, dtype=float), _fix_phases(v))


def _n_qubits(dim: int) -> int:
    n = int(round(np.log2(dim)))
    if dim < 2 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def partial_trace(rho, n_qubits: int, keep: Sequence[int]) -> np.ndarray:
    """Reduce an ``n_qubits`` register onto the qubits in ``keep``.

    The kept qubits appear in the output in the order given by ``keep``.
    Passing every qubit with ``keep=()`` is not allowed; use ``np.trace``.
    """
    rho = as_matrix(rho)
    dim = 2**n_qubits
    if rho.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix for {n_qubits} qubits, got {rho.shape}")
    keep = [int(k) for k in keep]
    if not keep:
        raise ValueError("keep must name at least one qubit")
    for k in keep:
        if not 0 <= k < n_qubits:
            raise IndexOutOfRange(f"qubit index {k} out of range for {n_qubits} qubits")
    if len(set(keep)) != len(keep):
        raise ValueError(f"duplicate qubit indices in keep={keep}")

    traced = [q for q in range(n_qubits) if q not in keep]
    t = rho.reshape((2,) * (2 * n_qubits))
    # bring (kept rows, traced rows, kept cols, traced cols) together
    order = keep + traced + [n_qubits + q for q in keep] + [n_qubits + q for q in traced]
    t = t.transpose(order)
    dk, dt = 2 ** len(keep), 2 ** len(traced)
    t = t.reshape(dk, dt, dk, dt)
    return np.einsum("ajbj->ab", t)


def permute_qubits(rho, perm: Sequence[int]) -> np.ndarray:
    """Relabel qubits so that output qubit ``k`` is input qubit ``perm[k]``."""
    rho = as_matrix(rho)
    n = _n_qubits(rho.shape[0])
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of {n} qubits")
    t = rho.reshape((2,) * (2 * n))
    t = t.transpose(perm + [n + p for p in perm])
    return t.reshape(rho.shape)


def inverse_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p] = k
    return inv


def sqrt_psd(m) -> np.ndarray:
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues in ``[-1e-10, 0)`` are treated as rounding noise and clamped
    to zero; anything more negative raises ``NotPositiveSemidefinite``.
    """
    dec = eig_hermitian(m)
    w = dec.eigenvalues
    if w[0] < -PSD_CLAMP:
        raise NotPositiveSemidefinite(f"smallest eigenvalue {w[0]:.3g} is below -{PSD_CLAMP:g}")
    v = dec.eigenvectors
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return hermitize(root)
