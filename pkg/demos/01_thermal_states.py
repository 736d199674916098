"""
Thermal states of three coupled excitons
========================================

Build the eight-level Hamiltonian, look at its spectrum, and watch the Gibbs
state go from a pure ground state at 1 K to the maximally mixed state.
"""

import numpy as np

from qdot_otto import ModelParams, build_hamiltonian, eig_hermitian, gibbs_state, internal_energy
from qdot_otto.thermo import purity

np.set_printoptions(precision=4, suppress=True)

# exciton energies 2 meV, a 5 meV dipole field, dipolar coupling 2.5 meV
p = ModelParams(omega=2.0, omega_field=5.0, jz=2.5)

###############################################################################
# Without Forster coupling the Hamiltonian is diagonal in the occupation basis
h = build_hamiltonian(p)
print("diagonal:", np.diag(h).real)

###############################################################################
# Forster hopping mixes the one- and two-exciton manifolds among themselves,
# but never changes the exciton number
h3 = build_hamiltonian(p.with_lambda(3.0))
spec = eig_hermitian(h3)
print("levels at lambda = 3 meV:", spec.eigenvalues)

###############################################################################
# Populations, purity and energy along a temperature ramp
for t in (1.0, 10.0, 40.0, 300.0, 1e6):
    ts = gibbs_state(spec, t)
    print(f"T = {t:>9g} K  p0 = {ts.probs[0]:.4f}  purity = {purity(ts.rho):.4f}  U = {internal_energy(ts):+.4f} meV")

# at very high temperature every level holds 1/8
print("high-T probabilities:", gibbs_state(spec, 1e9).probs)
