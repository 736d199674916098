"""Three-qubit exciton Hamiltonian for coupled quantum dots.

Basis convention: qubit ``i`` has ``n_i = 1`` for the exciton state ``|+>``
and ``n_i = 0`` for ``|->``; the basis index is ``b = 4*n_1 + 2*n_2 + n_3``.
On one qubit ``S_z = diag(-1/2, +1/2)``, ``S_+ |-> = |+>`` and ``S_- = S_+^dagger``.
All energies are in meV with hbar absorbed into the couplings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import ParameterError
from .linalg import kron_all

N_QUBITS = 3
DIM = 2**N_QUBITS

SZ = np.diag([-0.5, 0.5]).astype(np.complex128)
S_PLUS = np.array([[0, 0], [1, 0]], dtype=np.complex128)
S_MINUS = S_PLUS.conj().T
NUM = np.diag([0.0, 1.0]).astype(np.complex128)  # S_z + 1/2
ID2 = np.eye(2, dtype=np.complex128)


def _triple(values, name: str) -> tuple[float, float, float]:
    if np.isscalar(values):
        values = (values,) * N_QUBITS
    vals = tuple(float(v) for v in values)
    if len(vals) != N_QUBITS:
        raise ParameterError(f"{name} needs {N_QUBITS} values, got {len(vals)}")
    return vals


@dataclass(frozen=True)
class ModelParams:
    """Couplings of the three-dot Hamiltonian, all in meV.

    ``omega`` and ``omega_field`` accept a scalar (applied to every dot) or
    three values. ``jz_double_count=True`` sums the dipolar term over
    ordered pairs, so each excited pair costs ``2*jz``; ``False`` charges
    ``jz`` per unordered pair.
    """

    omega: tuple[float, float, float] = (2.0, 2.0, 2.0)
    omega_field: tuple[float, float, float] = (0.0, 0.0, 0.0)
    jz: float = 0.0
    lambda_forster: float = 0.0
    jz_double_count: bool = True

    def __post_init__(self):
        omega = _triple(self.omega, "omega")
        field_ = _triple(self.omega_field, "omega_field")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "omega_field", field_)
        object.__setattr__(self, "jz", float(self.jz))
        object.__setattr__(self, "lambda_forster", float(self.lambda_forster))
        object.__setattr__(self, "jz_double_count", bool(self.jz_double_count))
        for name, val in [("omega", v) for v in omega] + [("omega_field", v) for v in field_] + [
            ("jz", self.jz),
            ("lambda_forster", self.lambda_forster),
        ]:
            if not math.isfinite(val):
                raise ParameterError(f"{name} must be finite, got {val}")
        if min(omega) < 0:
            raise ParameterError(f"omega entries must be >= 0, got {omega}")

    def with_field(self, omega_field: float) -> "ModelParams":
        """Copy with a uniform dipole-field energy on all three dots."""
        return replace(self, omega_field=(omega_field,) * N_QUBITS)

    def with_lambda(self, lambda_forster: float) -> "ModelParams":
        return replace(self, lambda_forster=lambda_forster)

    @property
    def uniform_field(self) -> bool:
        return len(set(self.omega_field)) == 1


def site_operator(op: np.ndarray, i: int) -> np.ndarray:
    """Embed a single-qubit operator on qubit ``i`` of the register."""
    factors = [ID2] * N_QUBITS
    factors[i] = op
    return kron_all(*factors)


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


_NUMS = tuple(_frozen(site_operator(NUM, i)) for i in range(N_QUBITS))
_SZS = tuple(_frozen(site_operator(SZ, i)) for i in range(N_QUBITS))
_PAIR_NUM = {
    (i, j): _frozen(_NUMS[i] @ _NUMS[j]) for i in range(N_QUBITS) for j in range(N_QUBITS) if i != j
}
_HOPS = {}
for _i in range(N_QUBITS):
    for _j in range(_i + 1, N_QUBITS):
        _hop = site_operator(S_PLUS, _i) @ site_operator(S_MINUS, _j)
        _HOPS[(_i, _j)] = _frozen(_hop + _hop.conj().T)


def number_operator() -> np.ndarray:
    """Total exciton number, a diagonal matrix with entries ``sum_i n_i``."""
    return sum(_NUMS)


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """Assemble the 8x8 Hamiltonian in meV.

    The Forster term is written as ``lambda * sum_{i<j} (S+^i S-^j + S+^j S-^i)``,
    which equals the symmetric ordered-pair form with its factor 1/2 since the
    operators act on different dots.
    """
    h = np.zeros((DIM, DIM), dtype=np.complex128)
    for i in range(N_QUBITS):
        h += p.omega[i] * _NUMS[i]
        h += p.omega_field[i] * _SZS[i]

    pair_weight = 1.0 if p.jz_double_count else 0.5
    for pair_num in _PAIR_NUM.values():
        h += pair_weight * p.jz * pair_num

    if p.lambda_forster != 0.0:
        for hop in _HOPS.values():
            h += p.lambda_forster * hop
    return h


def single_qubit_gap(p: ModelParams, i: int) -> float:
    """Level splitting ``omega_i + Omega_i`` of dot ``i`` with couplings switched off."""
    return p.omega[i] + p.omega_field[i]
