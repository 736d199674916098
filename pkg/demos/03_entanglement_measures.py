"""
Concurrence and the three-qubit lower bound on textbook states
==============================================================
"""

import numpy as np

from qdot_otto import concurrence, pairwise_concurrences, tau3_lower_bound


def proj(v):
    v = np.asarray(v, dtype=complex)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


bell = proj([1, 0, 0, 1])
print("Bell pair:", concurrence(bell))
print("I/4:", concurrence(np.eye(4) / 4))

# Werner family: entangled only above p = 1/3
for p in (0.2, 1 / 3, 0.5, 0.8, 1.0):
    rho = p * bell + (1 - p) * np.eye(4) / 4
    print(f"Werner p = {p:.3f}: C = {concurrence(rho):.4f}")

###############################################################################
# Three qubits. The W state spreads its entanglement over the pairs; the GHZ
# state keeps all of it in the tripartite part.
w = proj([0, 1, 1, 0, 1, 0, 0, 0])
ghz = proj([1, 0, 0, 0, 0, 0, 0, 1])
print("W state   pairs:", np.round(pairwise_concurrences(w), 6), " tau3:", round(tau3_lower_bound(w), 6))
print("GHZ state pairs:", np.round(pairwise_concurrences(ghz), 6), " tau3:", round(tau3_lower_bound(ghz), 6))
print("|000>     tau3:", tau3_lower_bound(proj(np.eye(8)[0])))
