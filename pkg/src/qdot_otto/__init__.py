"""Desk-scale simulator of a three-quantum-dot quantum Otto engine.

Exact Gibbs states of the coupled-exciton Hamiltonian, per-cycle work and
heat with operating-mode classification, pairwise concurrence and a
three-qubit concurrence lower bound, swept against the Forster coupling.
"""

__version__ = "0.1.0"

from .entanglement import (
    EntanglementReport,
    StateTag,
    concurrence,
    entanglement_report,
    pairwise_concurrences,
    report_for_cycle,
    so4_generators,
    tau3_lower_bound,
)
from .errors import (
    AmbiguousPairing,
    ConfigError,
    IndexOutOfRange,
    InvalidDensityMatrix,
    NonHermitianInput,
    NonPositiveTemperature,
    NotPositiveSemidefinite,
    NumericalError,
    ParameterError,
    QdotOttoError,
    RankViolation,
    UnknownPreset,
)
from .linalg import EigenDecomposition, eig_hermitian, kron, partial_trace, permute_qubits, sqrt_psd
from .model import ModelParams, build_hamiltonian, number_operator, single_qubit_gap
from .otto import (
    CycleResult,
    CycleSpec,
    Mode,
    classify_mode,
    cycle_from_states,
    efficiency_of,
    match_levels,
    run_cycle,
    thermal_endpoints,
)
from .sweep import SweepRow, SweepSpec, figure_preset, find_critical_lambdas, run_sweep
from .thermo import K_B, ThermalState, gibbs_state, internal_energy
