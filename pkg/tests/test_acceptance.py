"""Acceptance gate.

Each test carries a ``criterion`` marker; ``conftest.py`` prints one
PASS/FAIL line per criterion at the end of the run, with the measured values
attached as ``detail``. Tolerances are pinned here and are not to be relaxed.
"""

import subprocess
import sys

import numpy as np
import pytest

from qdot_otto.entanglement import (
    BIPARTITIONS,
    _BIPARTITE_FLIPS,
    _flip_spectrum_roots,
    concurrence,
    pairwise_concurrences,
    tau3_lower_bound,
)
from qdot_otto.linalg import kron, kron_all, partial_trace, permute_qubits
from qdot_otto.model import ModelParams, build_hamiltonian
from qdot_otto.otto import CycleSpec, Mode, cycle_from_states, run_cycle
from qdot_otto.sweep import (
    PRESET_NAMES,
    SweepSpec,
    baseline_cycle,
    column_values,
    figure_preset,
    find_critical_lambdas,
    run_sweep,
)
from qdot_otto.thermo import gibbs_state

from oracles import decoupled_otto, random_density, random_pure, random_unitary


def criterion(cid, title):
    return pytest.mark.criterion(cid, title)


@pytest.fixture
def detail(request):
    def set_detail(text):
        request.node.acceptance_detail = text

    return set_detail


def proj(v):
    return np.outer(v, np.conj(v))


def onset(omega, double_count):
    spec = SweepSpec(baseline_cycle((omega,) * 3, jz_double_count=double_count), measure_entanglement=True)
    rising = [lam for lam, d in find_critical_lambdas(run_sweep(spec), "c12") if d == "rising"]
    return rising[0] if rising else None


# -- 1 ----------------------------------------------------------------------


@criterion("1", "cold-end concurrence onset 3.0 +/- 0.5 (omega=2) and 6.0 +/- 0.5 (omega=4) meV")
def test_onset_symmetric(detail):
    hits = {}
    notes = []
    for name, dbl in (("literal", True), ("per-pair", False)):
        lam2, lam4 = onset(2.0, dbl), onset(4.0, dbl)
        ok = lam2 is not None and lam4 is not None and abs(lam2 - 3.0) <= 0.5 and abs(lam4 - 6.0) <= 0.5
        hits[name] = ok
        notes.append(f"{name}: {lam2:.3f}, {lam4:.3f}")
    passing = [k for k, v in hits.items() if v]
    detail("; ".join(notes) + f"; passing convention: {passing[0] if passing else 'none'}")
    assert passing, "neither J_z convention puts the onsets in the windows"


# -- 2 ----------------------------------------------------------------------


@criterion("2a", "symmetric plateau: c12 = c13 = c23 in [0.28, 0.38] at the upper grid end")
def test_symmetric_plateau(detail):
    last = run_sweep(figure_preset("ent_sym_2mev"))[-1]
    c = (last.c12, last.c13, last.c23)
    detail(f"c = {c[0]:.6f}, {c[1]:.6f}, {c[2]:.6f} at lambda = {last.lambda_mev}")
    assert max(c) - min(c) < 1e-9
    assert all(0.28 <= x <= 0.38 for x in c)


@criterion("2b", "asymmetric (2,2,4) plateau: c12 >= 0.95, c13 and c23 <= 0.02")
def test_asymmetric_plateau(detail):
    last = run_sweep(figure_preset("ent_asym_2_2_4"))[-1]
    detail(f"c12 = {last.c12:.6f}, c13 = {last.c13:.2e}, c23 = {last.c23:.2e}")
    assert last.c12 >= 0.95 and last.c13 <= 0.02 and last.c23 <= 0.02


# -- 3 ----------------------------------------------------------------------


def baseline_rows():
    return run_sweep(figure_preset("work_heat_baseline"))


@criterion("3a", "baseline mode progression Engine -> Heater -> Accelerator")
def test_mode_progression(detail):
    rows = baseline_rows()
    modes = [r.mode for r in rows]
    firsts = {}
    for r in rows:
        firsts.setdefault(r.mode, r.lambda_mev)
    detail(", ".join(f"{m.value} from {lam:g}" for m, lam in firsts.items()))
    assert modes[0] is Mode.ENGINE and rows[0].w_mev > 0
    i_heat = modes.index(Mode.HEATER)
    i_acc = modes.index(Mode.ACCELERATOR)
    assert 0 < i_heat < i_acc
    heater = rows[i_heat]
    assert heater.w_mev < 0 and heater.q_hot_mev < 0 and heater.q_cold_mev < 0
    acc = rows[i_acc]
    assert acc.q_hot_mev > 0 and acc.w_mev < 0


@criterion("3b", "baseline W non-increasing before its first zero crossing")
def test_work_monotone_before_crossing(detail):
    rows = baseline_rows()
    w = column_values(rows, "w_mev")
    first = find_critical_lambdas(rows, "w_mev")[0][0]
    lam = column_values(rows, "lambda_mev")
    before = w[lam < first]
    rises = np.diff(before)
    peak = int(np.argmax(before))
    detail(
        f"first crossing {first:.3f} meV; W(0) = {before[0]:.4f}, "
        f"max {before[peak]:.4f} at lambda = {lam[peak]:g}; largest step up {rises.max():.2e}"
    )
    assert np.all(rises <= 1e-12)


# -- 4 ----------------------------------------------------------------------


@criterion("4", "work death and revival for a mixed-omega preset")
def test_death_and_revival(detail):
    found = []
    notes = []
    for name in PRESET_NAMES:
        spec = figure_preset(name)
        if len(set(spec.base.base.omega)) == 1:
            continue
        rows = run_sweep(SweepSpec(spec.base, spec.grid))
        crossings = find_critical_lambdas(rows, "w_mev")
        notes.append(f"{name}: {[(round(l, 3), d) for l, d in crossings]}")
        revived = len(crossings) >= 2 and any(d == "rising" for _, d in crossings[1:])
        if revived:
            found.append(name)
    detail("; ".join(notes))
    assert found


# -- 5 ----------------------------------------------------------------------


@criterion("5", "W non-decreasing in T_H over {10,20,40} K and in Omega_H over {3,5,7} meV at lambda = 0")
def test_monotone_in_bath_and_field(detail):
    base = baseline_cycle()
    w_t = [run_cycle(CycleSpec(base.base, 5.0, 1.0, t, 1.0)).w for t in (10.0, 20.0, 40.0)]
    w_f = [run_cycle(CycleSpec(base.base, f, 1.0, 40.0, 1.0)).w for f in (3.0, 5.0, 7.0)]
    detail(f"W(T_H) = {np.round(w_t, 5).tolist()}, W(Omega_H) = {np.round(w_f, 5).tolist()}")
    assert np.all(np.diff(w_t) >= 0) and np.all(np.diff(w_f) >= 0)


# -- 6 ----------------------------------------------------------------------


@criterion("6", "decoupled limit matches three two-level Otto cycles to 1e-9 relative")
def test_decoupled_oracle(detail):
    cases = [((2, 2, 2), 5, 1, 40, 1), ((1, 2, 3), 6, 0.5, 25, 3), ((4, 0, 2.5), 2, 7, 300, 10)]
    worst = 0.0
    for omega, fh, fc, th, tc in cases:
        cr = run_cycle(CycleSpec(ModelParams(omega=omega), fh, fc, th, tc))
        for got, want in zip((cr.w, cr.q_hot, cr.q_cold), decoupled_otto(omega, fh, fc, th, tc)):
            worst = max(worst, abs(got - want) / abs(want))
    w = run_cycle(CycleSpec(ModelParams(omega=2), 5, 1, 40, 1)).w
    detail(f"baseline W = {w:.6f} meV; worst relative error {worst:.1e}")
    assert round(w, 4) == 1.3921
    assert worst < 1e-9


# -- 7 ----------------------------------------------------------------------

N_DRAWS = 1000


def random_cycle(rng):
    base = ModelParams(
        omega=tuple(rng.uniform(0, 8, 3)),
        jz=rng.uniform(0, 6),
        lambda_forster=rng.uniform(0, 10),
        jz_double_count=bool(rng.integers(2)),
    )
    t_cold = rng.uniform(0.5, 50)
    return CycleSpec(base, rng.uniform(-2, 10), rng.uniform(-2, 10), t_cold + rng.uniform(0.1, 300), t_cold)


@criterion("7a", f"first-law closure |W - Q_H - Q_C| < 1e-12 over {N_DRAWS} draws")
def test_first_law(detail):
    rng = np.random.default_rng(7001)
    worst = max(abs(cr.w - cr.q_hot - cr.q_cold) for cr in (run_cycle(random_cycle(rng)) for _ in range(N_DRAWS)))
    detail(f"worst {worst:.1e}")
    assert worst < 1e-12


@criterion("7b", f"W <= 1e-12 when T_H = T_C over {N_DRAWS} draws")
def test_single_bath(detail):
    rng = np.random.default_rng(7002)
    worst = -np.inf
    for _ in range(N_DRAWS):
        cs = random_cycle(rng)
        hot = gibbs_state(build_hamiltonian(cs.hot_params), cs.t_hot)
        cold = gibbs_state(build_hamiltonian(cs.cold_params), cs.t_hot)
        worst = max(worst, cycle_from_states(hot, cold).w)
    detail(f"largest W {worst:.1e}")
    assert worst <= 1e-12


@criterion("7c", f"Carnot bound in Engine mode over {N_DRAWS} draws")
def test_carnot(detail):
    rng = np.random.default_rng(7003)
    engines = 0
    margin = np.inf
    for _ in range(N_DRAWS):
        cs = random_cycle(rng)
        cr = run_cycle(cs)
        if cr.mode is Mode.ENGINE:
            engines += 1
            margin = min(margin, 1 - cs.t_cold / cs.t_hot - cr.efficiency)
    detail(f"{engines} engine draws; smallest Carnot margin {margin:.2e}")
    assert engines > 0 and margin >= -1e-12


@criterion("7d", f"Gibbs invariants (trace, PSD, stationarity) over {N_DRAWS} draws")
def test_gibbs_invariants(detail):
    rng = np.random.default_rng(7004)
    worst = [0.0, 0.0, 0.0]
    for _ in range(N_DRAWS):
        p = random_cycle(rng).hot_params
        h = build_hamiltonian(p)
        rho = gibbs_state(h, rng.uniform(0.5, 500)).rho
        worst[0] = max(worst[0], abs(np.trace(rho) - 1))
        worst[1] = max(worst[1], -np.linalg.eigvalsh(rho).min())
        worst[2] = max(worst[2], np.abs(rho @ h - h @ rho).max())
    detail(f"trace {worst[0]:.1e}, negativity {worst[1]:.1e}, commutator {worst[2]:.1e}")
    assert worst[0] < 1e-12 and worst[1] < 1e-12 and worst[2] < 1e-10


# -- 8 ----------------------------------------------------------------------

PHI_PLUS = proj(np.array([1, 0, 0, 1]) / np.sqrt(2))


@criterion("8a", "concurrence fixtures: Bell 1, I/4 0, Werner closed form to 1e-10")
def test_concurrence_fixtures(detail):
    errs = [abs(concurrence(PHI_PLUS) - 1), concurrence(np.eye(4) / 4)]
    for p in np.linspace(0, 1, 21):
        rho = p * PHI_PLUS + (1 - p) * np.eye(4) / 4
        errs.append(abs(concurrence(rho) - max(0.0, (3 * p - 1) / 2)))
    detail(f"worst {max(errs):.1e}")
    assert max(errs) < 1e-10


@criterion("8b", "W state pairwise concurrence 2/3 to 1e-10")
def test_w_state(detail):
    w = np.zeros(8)
    w[[1, 2, 4]] = 1 / np.sqrt(3)
    c = pairwise_concurrences(proj(w))
    detail(f"c = {c}")
    assert np.allclose(c, 2 / 3, atol=1e-10, rtol=0)


@criterion("8c", "tau3(GHZ) = 1 to 1e-8")
def test_ghz(detail):
    ghz = np.zeros(8)
    ghz[[0, 7]] = 1 / np.sqrt(2)
    t = tau3_lower_bound(proj(ghz))
    detail(f"tau3 = {t:.12f}")
    assert abs(t - 1) < 1e-8


@criterion("8d", "tau3 = 0 to 1e-10 on random product states")
def test_product_states(detail):
    rng = np.random.default_rng(8004)
    worst = 0.0
    for k in range(200):
        if k % 2:
            factors = [random_density(2, rng) for _ in range(3)]
        else:
            factors = [proj(random_pure(2, rng)) for _ in range(3)]
        worst = max(worst, tau3_lower_bound(kron_all(*factors)))
    detail(f"largest tau3 {worst:.1e}")
    assert worst < 1e-10


@criterion("8e", "concurrence invariant under local unitaries to 1e-10")
def test_local_unitary(detail):
    rng = np.random.default_rng(8005)
    worst = 0.0
    for k in range(200):
        rho = random_density(4, rng, rank=1 + k % 4)
        u = kron(random_unitary(2, rng), random_unitary(2, rng))
        worst = max(worst, abs(concurrence(u @ rho @ u.conj().T) - concurrence(rho)))
    detail(f"worst {worst:.1e}")
    assert worst < 1e-10


@criterion("8f", "pure-state generator sum rule to 1e-8")
def test_sum_rule(detail):
    rng = np.random.default_rng(8006)
    worst = 0.0
    for _ in range(200):
        rho = proj(random_pure(8, rng))
        for _, perm in BIPARTITIONS:
            r = permute_qubits(rho, perm)
            total = sum(_flip_spectrum_roots(r, f)[0] ** 2 for f in _BIPARTITE_FLIPS)
            single = partial_trace(r, 3, [2])
            worst = max(worst, abs(total - 2 * (1 - np.trace(single @ single).real)))
    detail(f"worst {worst:.1e}")
    assert worst < 1e-8


# -- 9 ----------------------------------------------------------------------


@criterion("9", "figure work_heat_baseline is bytewise reproducible")
def test_determinism(detail):
    cmd = [sys.executable, "-m", "qdot_otto", "figure", "work_heat_baseline"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    detail(f"{len(a)} bytes, {len(a.splitlines())} lines")
    assert a == b
