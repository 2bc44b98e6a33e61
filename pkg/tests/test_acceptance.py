"""Acceptance suite: one test per primary criterion, at the stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one summary line
per criterion.  The two asymmetric-drive cells at r = 1 are strict expected
failures: that target exceeds the scheme's entanglement ceiling (see
notes/decisions.md in the workspace root for the analysis).
"""

import math
import time

import numpy as np
import pytest

from synthsqueeze import (
    DriveParams,
    balanced,
    collective_loss,
    concurrence,
    dissipator_identity_check,
    fidelity,
    ideal_tms,
    ket,
    liouvillian,
    local_unitary,
    paired_state,
    purity,
    solve_asymmetric_drive,
    spectrum,
    steady_state,
    sweep_gap_vs_mu,
    sweep_spacing,
    sweep_temperature,
    target_state,
    validate_elimination,
    vec,
)
from conftest import multiset_close


def report(name: str, elapsed: float, detail: str) -> None:
    print(f"[PASS] {name} ({elapsed:.2f}s): {detail}")


def unique_steady(model):
    res = steady_state(liouvillian(model))
    assert res.degeneracy == 1, f"expected unique steady state, got {res.degeneracy}"
    return res.steady_states[0]


def test_steady_state_identity():
    """Pair-model steady state matches the squeezed target; C = tanh 2r."""
    t0 = time.perf_counter()
    worst_fid, worst_dc = 1.0, 0.0
    for r in (0.5, 1.0, 2.0):
        rho = unique_steady(ideal_tms(r, 1.0, 1.0))
        fid = fidelity(rho, target_state(r))
        dc = abs(concurrence(rho) - math.tanh(2 * r))
        assert fid >= 1 - 1e-8, f"r={r}: fidelity {fid}"
        assert dc <= 1e-8, f"r={r}: concurrence error {dc}"
        worst_fid, worst_dc = min(worst_fid, fid), max(worst_dc, dc)
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    report("steady-state identity", elapsed,
           f"min fidelity {worst_fid:.2e}-from-1 "
           f"{1 - worst_fid:.2e}, max |C - tanh 2r| {worst_dc:.2e}")


def test_gap_law():
    """gap = Gamma/(3 sinh^2 r) with O(1/sinh^4 r) residual."""
    t0 = time.perf_counter()
    rs = (1.5, 2.0, 2.5, 3.0)
    residuals = []
    for r in rs:
        gap = spectrum(liouvillian(ideal_tms(r))).gap
        resid = abs(gap * 3 * math.sinh(r) ** 2 - 1)
        assert resid <= 2 / math.sinh(r) ** 2, f"r={r}: residual {resid}"
        residuals.append(resid)
    slope = np.polyfit(np.log(np.sinh(rs)), np.log(residuals), 1)[0]
    assert abs(slope + 2.0) <= 0.3, f"residual slope {slope}"
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    report("gap law", elapsed, f"residuals {['%.4f' % x for x in residuals]}, "
           f"slope {slope:.3f}")


def test_collective_loss_stabilization():
    """Lab-frame drive+loss stabilizes the rotated paired state uniquely."""
    t0 = time.perf_counter()
    d = DriveParams.symmetric(1.0, 10.0)
    rho = unique_steady(collective_loss("lab", d, 1.0))
    tgt = local_unitary(1.0).dag().matrix @ paired_state(1.0)
    fid = fidelity(rho, tgt)
    assert fid >= 1 - 1e-8, f"fidelity {fid}"

    res0 = steady_state(liouvillian(collective_loss("lab", DriveParams.symmetric(1.0, 0.0))))
    assert res0.degeneracy > 1, "zero drive must leave a degenerate steady space"

    lab = spectrum(liouvillian(collective_loss("lab", d))).eigenvalues
    tra = spectrum(liouvillian(collective_loss("transformed", d))).eigenvalues
    assert multiset_close(lab, tra, 1e-8), "lab/transformed spectra differ"
    elapsed = time.perf_counter() - t0
    report("collective-loss stabilization", elapsed,
           f"1 - fidelity {1 - fid:.2e}, mu=0 degeneracy {res0.degeneracy}")


def test_fig6_scaling():
    """Gap opens as mu^2 and saturates at e^{-2r} x ideal gap."""
    t0 = time.perf_counter()
    small = np.logspace(-3, -2, 11)
    details = []
    for r in (0.5, 1.0, 1.5):
        recs = sweep_gap_vs_mu(r_list=[r], mu_over_Gamma_grid=small)
        gaps = [rec["gap_over_Gamma"] for rec in recs]
        slope = np.polyfit(np.log(small), np.log(gaps), 1)[0]
        assert abs(slope - 2.0) <= 0.05, f"r={r}: slope {slope}"
        sat = sweep_gap_vs_mu(r_list=[r], mu_over_Gamma_grid=[100.0])[0]["gap_over_Gamma"]
        ideal = spectrum(liouvillian(ideal_tms(r))).gap
        ratio = sat / (math.exp(-2 * r) * ideal)
        assert abs(ratio - 1.0) <= 0.10, f"r={r}: saturation ratio {ratio}"
        details.append(f"r={r}: slope {slope:.3f}, saturation ratio {ratio:.3f}")
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0
    report("fig6 scaling", elapsed, "; ".join(details))


def test_asymmetric_solver_symmetric_closed_form():
    """eta = 1 reproduces the closed-form detuning and drive amplitude."""
    t0 = time.perf_counter()
    for r in (0.5, 1.0, 2.0):
        mu = 1.0
        d = solve_asymmetric_drive(r, mu, 1.0)
        assert abs(d.delta - mu * math.exp(-2 * r)) <= 1e-10
        assert abs(d.lam - 0.5 * mu * math.sqrt(1 - math.exp(-4 * r))) <= 1e-10
        assert d.epsilon == 0.0
    report("asymmetric solver (eta=1 closed form)", time.perf_counter() - t0,
           "delta, lambda within 1e-10 for r in {0.5, 1, 2}")


@pytest.mark.parametrize("eta", [0.5, 2.0])
def test_asymmetric_solver_feasible(eta):
    """Feasible cells (r = 0.5): dark/eigenstate conditions and pure unique steady state."""
    t0 = time.perf_counter()
    r, mu = 0.5, 1.0
    d = solve_asymmetric_drive(r, mu, eta)
    model = collective_loss("lab", d)
    phi = d.delta * ket("00") + d.lam * (ket("01") - eta * ket("10"))
    phi = phi / np.linalg.norm(phi)
    h = model.hamiltonian.matrix
    energy = phi.conj() @ h @ phi
    eig_dev = np.linalg.norm(h @ phi - energy * phi)
    dark_dev = np.linalg.norm(model.jumps[0][1].matrix @ phi)
    assert eig_dev <= 1e-9 and dark_dev <= 1e-9
    rho = unique_steady(model)
    pur = purity(rho)
    assert pur >= 1 - 1e-8, f"purity {pur}"
    report(f"asymmetric solver (eta={eta}, r=0.5)", time.perf_counter() - t0,
           f"eigenstate dev {eig_dev:.1e}, dark dev {dark_dev:.1e}, purity 1-{1 - pur:.1e}")


@pytest.mark.parametrize("eta", [0.5, 2.0])
@pytest.mark.xfail(
    strict=True,
    reason="spec defect: r=1 exceeds the asymmetric scheme's entanglement "
    "ceiling artanh(min(eta, 1/eta)) ~ 0.5493 (concurrence of the dark "
    "family caps at 2 eta/(1+eta^2) < tanh 2); no real drive parameters "
    "exist — see the decisions ledger",
)
def test_asymmetric_solver_r1_cells(eta):
    """Infeasible criterion cells (r = 1, eta != 1), kept as stated."""
    print(f"[FAIL - documented spec defect] asymmetric solver eta={eta}, r=1: "
          "target squeezing exceeds the scheme ceiling 0.5493")
    d = solve_asymmetric_drive(1.0, 1.0, eta)  # raises ValueError
    rho = unique_steady(collective_loss("lab", d))
    assert purity(rho) >= 1 - 1e-8


def test_thermal_band():
    """Concurrence stays above 0.9 into the 55-85 mK window and decays monotonically."""
    t0 = time.perf_counter()
    r = 1.0
    c0_expected = math.tanh(2 * r)
    assert 0.96 <= c0_expected <= 0.97
    recs = sweep_temperature(r, Gamma=1.0, freq_GHz=6.0)
    assert recs[0]["T_K"] == 0.0
    assert 0.96 <= recs[0]["concurrence"] <= 0.97

    ts = np.array([rec["T_K"] for rec in recs])
    cs = np.array([rec["concurrence"] for rec in recs])
    ps = np.array([rec["purity"] for rec in recs])
    below = np.nonzero(cs < 0.9)[0]
    assert below.size, "concurrence never crossed 0.9 on the default grid"
    i = below[0]
    t_cross = ts[i - 1] + (0.9 - cs[i - 1]) * (ts[i] - ts[i - 1]) / (cs[i] - cs[i - 1])
    assert 0.055 <= t_cross <= 0.085, f"crossing at {t_cross * 1e3:.1f} mK"

    assert np.all(np.diff(cs) <= 0) and np.all(np.diff(ps) <= 0)
    resolvable = np.array([rec["n_th"] for rec in recs]) > 1e-12
    assert np.all(np.diff(cs[resolvable]) < 0), "concurrence not strictly decreasing"
    assert np.all(np.diff(ps[resolvable]) < 0), "purity not strictly decreasing"
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0
    report("thermal degradation band", elapsed,
           f"C(0) = {recs[0]['concurrence']:.5f}, 0.9-crossing at {t_cross * 1e3:.1f} mK")


def test_tl_spacing_sweep():
    """Spacing-error sweep: monotone degradation, diverging optimum, minor pairing term."""
    t0 = time.perf_counter()
    recs = sweep_spacing()  # default grid, r in (0.05, 4.0)
    cs = [rec["concurrence"] for rec in recs]
    rs = [rec["r_opt"] for rec in recs]
    assert all(b < a for a, b in zip(cs, cs[1:])), "concurrence not decreasing in |dl|"
    assert all(b < a + 1e-6 for a, b in zip(rs, rs[1:])), "r_opt not increasing as dl -> 0"
    assert recs[0]["r_opt"] == 4.0, "optimizer must hit the bound at dl = 0"
    for rec in recs:
        degradation = 1.0 - rec["concurrence"]
        assert abs(rec["concurrence_noH"] - rec["concurrence"]) <= 0.25 * degradation
    elapsed = time.perf_counter() - t0
    assert elapsed < 120.0
    report("TL spacing sweep", elapsed,
           f"{len(recs)} points, C range [{min(cs):.4f}, {max(cs):.4f}], "
           f"r_opt range [{min(rs):.3f}, {max(rs):.3f}]")


def test_degeneracy_suite():
    """Balanced dissipators: two-dimensional steady family, stationary mixtures, singlet."""
    t0 = time.perf_counter()
    model = balanced(1.0)
    res = steady_state(liouvillian(model))
    assert res.degeneracy == 2, f"degeneracy {res.degeneracy}"

    L = liouvillian(model).matrix
    bell = (ket("00") - ket("11")) / math.sqrt(2)
    worst = 0.0
    for nu in (-1.0 / 3.0, 0.0, 1.0):
        rho = nu * np.outer(bell, bell.conj()) + 0.25 * (1 - nu) * np.eye(4)
        worst = max(worst, float(np.max(np.abs(L @ vec(rho)))))
    assert worst <= 1e-10, f"family residual {worst}"

    from synthsqueeze import embed, pauli
    flipped = model.conjugated(embed(pauli("x"), 1, (2, 2)))
    singlet = (ket("01") - ket("10")) / math.sqrt(2)
    s_res = float(np.max(np.abs(
        liouvillian(flipped).matrix @ vec(np.outer(singlet, singlet.conj())))))
    assert s_res <= 1e-12, f"singlet residual {s_res}"
    report("degeneracy suite", time.perf_counter() - t0,
           f"family residual {worst:.1e}, singlet residual {s_res:.1e}")


def test_dissipator_decomposition():
    """Rotated collective loss splits exactly into two squeezers plus dephasing."""
    t0 = time.perf_counter()
    devs = {r0: dissipator_identity_check(r0) for r0 in (0.0, 0.5, 1.0, 3.0)}
    for r0, dev in devs.items():
        assert dev < 1e-12, f"r0={r0}: deviation {dev}"
    report("dissipator decomposition", time.perf_counter() - t0,
           f"max deviation {max(devs.values()):.1e}")


def test_adiabatic_elimination():
    """Cavity elimination error shrinks with kappa and is < 0.02 at ratio 50."""
    t0 = time.perf_counter()
    recs = validate_elimination(kappa_ratio_grid=(5.0, 10.0, 20.0, 50.0),
                                r=1.0, t_final_over_gamma=5.0, n_fock=10)
    dists = [rec["max_trace_distance"] for rec in recs]
    assert all(b < a for a, b in zip(dists, dists[1:])), f"not monotone: {dists}"
    assert dists[-1] < 0.02, f"distance at ratio 50: {dists[-1]}"
    elapsed = time.perf_counter() - t0
    assert elapsed < 120.0
    report("adiabatic elimination", elapsed,
           "max trace distances " + str(["%.4f" % d for d in dists]))
