"""
Entanglement of the cold-end state versus Forster coupling
==========================================================

Symmetric dots share their entanglement evenly; detuning the third dot lets
the resonant pair lock into a Bell state.
"""

from qdot_otto.sweep import figure_preset, find_critical_lambdas, run_sweep

for name in ("ent_sym_2mev", "ent_sym_4mev", "ent_asym_2_2_4", "ent_asym_4_4_6"):
    rows = run_sweep(figure_preset(name))
    onsets = find_critical_lambdas(rows, "c12")
    first = f"{onsets[0][0]:.3f} meV" if onsets else "none"
    last = rows[-1]
    print(f"{name:<15} omega = {figure_preset(name).base.base.omega}")
    print(f"  c12 onset: {first}")
    print(f"  at lambda = {last.lambda_mev:g}: c12 = {last.c12:.4f}  c13 = {last.c13:.4f}  c23 = {last.c23:.4f}  tau3 = {last.tau3:.4f}")

###############################################################################
# A few points along the symmetric sweep
rows = run_sweep(figure_preset("ent_sym_2mev"))
for r in rows[::20]:
    print(f"lambda = {r.lambda_mev:5.2f}  c12 = {r.c12:.4f}  tau3 = {r.tau3:.4f}  W = {r.w_mev:+.4f}")
