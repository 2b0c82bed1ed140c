"""Acceptance gate: one test per headline result, one PASS/FAIL line each.

Each criterion prints a single "CRITERION n: PASS/FAIL" line (visible in the
report via the -rP summary) and then asserts, so a red criterion is both
visible and failing.  Tolerances are stated inline next to each check.
"""

import math

import numpy as np
import pytest

from cavitycp import LIH, ThermalEnvironment
from cavitycp.asymptotics import (ConstantRCavity, I_half_asym, I_half_closed,
                                  I_phi_series, I_zero_asym, depth_scaling,
                                  phi_asymptote, phi_nu)
from cavitycp.constants import C, EPSILON_0, HBAR, K_B, MU_0
from cavitycp.greens import (CavityGeometry, cavity_trace_imagfreq,
                             cavity_trace_realfreq, single_plate_trace_parts,
                             transverse_beta, zero_frequency_trace_limit)
from cavitycp.materials import (ConstantLossy, ConstantR, Stack, Vacuum,
                                multilayer_reflection, quarter_wave_stack,
                                sqrt_upper)
from cavitycp.molecules import (Molecule, Transition, peak_photon_frequency,
                                photon_number, polarizability_imag)
from cavitycp.potential import (LevelScheme, PotentialComponents,
                                general_state_potential, heating_rate_free,
                                heating_rate_profile, nonresonant_potential,
                                potential_components, potential_depth,
                                resonance_width, single_plate_components)
from cavitycp.quadrature import QuadratureSpec
from tests.conftest import GOLD_DRUDE, SAPPHIRE_300K, SAPPHIRE_77K
from tests.test_asymptotics import I_phi_quadrature

T_LIH = LIH.transitions[0]
LAM = 2.0 * math.pi * C / T_LIH.omega
ENV300 = ThermalEnvironment(300.0)
ENV77 = ThermalEnvironment(77.0)
QUAD = QuadratureSpec()


def _report(num: int, ok: bool, detail: str):
    print(f"CRITERION {num}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {num}: {detail}"


def _coupling(omega, d_squared, env):
    return photon_number(omega, env) * d_squared / (3.0 * EPSILON_0)


def test_criterion_01_phi_table_and_intercept():
    # clause 1: closed-form table values to 1e-8
    table = {2: -0.1134423724, 3: -0.4015949503, 4: -0.7384479470}
    table_ok = all(abs(phi_nu(nu) - ref) < 1e-8 for nu, ref in table.items())
    # clause 2: the quadrature depths at nu = 2 fit a line in ln(delta) whose
    # intercept is required to recover -0.113 +/- 0.01
    coupling = _coupling(T_LIH.omega, T_LIH.d_squared, ENV300)
    deltas = [1e-4, 1e-5, 1e-6]
    ys = []
    for delta in deltas:
        depth = potential_depth(LIH, ConstantR(1.0 - delta), 2, ENV300,
                                QUAD).depth
        ys.append(depth * 2.0 * LAM**3 / (8.0 * math.pi * coupling))
    slope, b = np.polyfit(np.log(deltas), ys, 1)
    phi_eff = -b
    intercept_ok = abs(phi_eff - (-0.113)) <= 0.01
    _report(1, table_ok and intercept_ok,
            f"table to 1e-8: {table_ok}; fitted intercept {phi_eff:.4f} vs "
            f"-0.113 +/- 0.01: {intercept_ok}")


def test_criterion_02_asymptote_constants():
    slope = -(phi_asymptote(3) - phi_asymptote(2))
    intercept = phi_asymptote(2) + 2.0 * slope
    ok = (abs(slope - 0.4091613938) < 1e-10
          and abs(intercept - 0.9431471806) < 1e-10)
    _report(2, ok, f"slope {slope:.10f}, intercept {intercept:.10f}")


def test_criterion_03_closed_form_oracle():
    a = 1.0
    worst = 0.0
    for r in (0.5, 0.9, 0.99, 0.999):
        closed = I_half_closed(r, a)
        quad = I_phi_quadrature(r, 1, a, 0.5)
        worst = max(worst, abs(quad / closed - 1.0))
    quad_ok = worst < 1e-6
    asym_ok = True
    for delta in (1e-3, 1e-4, 1e-6):
        bound = 5.0 * delta * abs(math.log(delta))
        r = 1.0 - delta
        asym_ok &= abs(I_half_closed(r, a) - I_half_asym(delta, a)) <= bound
        asym_ok &= abs(I_phi_quadrature(r, 1, a, 0.0)
                       - I_zero_asym(delta, a)) <= bound
    _report(3, quad_ok and asym_ok,
            f"worst closed-vs-quadrature rel err {worst:.2e}; "
            f"delta->0 residuals within 5 delta |ln delta|: {asym_ok}")


def test_criterion_04_enhancement_factor(gold):
    # cavity central well of the total potential at the nu = 2 resonance
    a = resonance_width(T_LIH, 2)
    cavity = CavityGeometry(width=a, mirror=gold)
    u_min = potential_components(0.0, LIH, cavity, ENV300, QUAD).U_total
    u_max = max(
        potential_components(float(z), LIH, cavity, ENV300, QUAD).U_total
        for z in np.linspace(-0.35 * LAM, -0.15 * LAM, 33))
    depth = u_max - u_min
    # single-plate oscillation at the same molecule-wall geometry: first
    # maximum (lam/4) minus first minimum (lam/2) of the total potential
    sp_hi = single_plate_components(0.25 * LAM, LIH, gold, ENV300,
                                    QUAD).U_total
    sp_lo = single_plate_components(0.50 * LAM, LIH, gold, ENV300,
                                    QUAD).U_total
    ratio = depth / (sp_hi - sp_lo)
    ok = abs(ratio - 6.7) <= 0.67
    _report(4, ok, f"depth/amplitude = {ratio:.3f} vs 6.7 +/- 10%")


def test_criterion_05_effective_gold_reflectivity(gold):
    d_gold = potential_depth(LIH, gold, 2, ENV300, QUAD).depth
    lo = potential_depth(LIH, ConstantR(0.99), 2, ENV300, QUAD).depth
    hi = potential_depth(LIH, ConstantR(0.999), 2, ENV300, QUAD).depth
    bracket_ok = lo < d_gold < hi
    # at omega ~ 9e10 rad/s the effective delta moves to 10^-3.5 +/- 0.5
    probe = Molecule("probe", (Transition(omega=9e10,
                                          d_squared=T_LIH.d_squared),))
    d9 = potential_depth(probe, gold, 2, ENV300, QUAD).depth
    delta_cal = 10.0 ** -3.5
    d_cal = potential_depth(probe, ConstantR(1.0 - delta_cal), 2, ENV300,
                            QUAD).depth
    k = d_cal / (-math.log(delta_cal) - phi_nu(2))
    delta_eff = math.exp(-(d9 / k + phi_nu(2)))
    shift_ok = abs(math.log10(delta_eff) + 3.5) <= 0.5
    _report(5, bracket_ok and shift_ok,
            f"bracket {lo:.3e} < {d_gold:.3e} < {hi:.3e}: {bracket_ok}; "
            f"9e10 rad/s effective delta 10^{math.log10(delta_eff):.2f}")


def _one_minus_re_r(mat_a, mat_b, n_pairs, omega):
    layers = quarter_wave_stack(mat_a, mat_b, n_pairs, omega)
    r = complex(multilayer_reflection(layers, omega, np.array([0.0]), "p")[0])
    return 1.0 - r.real


def test_criterion_06_bragg_saturation():
    sap_ok = all(
        abs(_one_minus_re_r(SAPPHIRE_300K, Vacuum(), n, T_LIH.omega)
            / 5.5e-6 - 1.0) <= 0.2 for n in range(6, 13))
    sap77_ok = all(
        abs(_one_minus_re_r(SAPPHIRE_77K, Vacuum(), n, T_LIH.omega)
            / 5.5e-8 - 1.0) <= 0.2 for n in range(8, 13))
    gaas = ConstantLossy(eps_real=12.96, eps_imag=0.02)
    alas = ConstantLossy(eps_real=10.96, eps_imag=0.02)
    vals = {n: _one_minus_re_r(gaas, alas, n, T_LIH.omega)
            for n in range(20, 51)}
    limit = vals[50]
    n_sat = next(n for n in range(20, 51) if vals[n] / limit - 1.0 <= 0.25)
    gaas_ok = 25 <= n_sat <= 35 and 0.005 <= limit <= 0.02
    _report(6, sap_ok and sap77_ok and gaas_ok,
            f"sapphire 300K N>=6 within 20% of 5.5e-6: {sap_ok}; "
            f"77K N>=8 within 20% of 5.5e-8: {sap77_ok}; "
            f"GaAs/AlAs saturates near {limit:.2e} at N={n_sat}")


def test_criterion_07_bragg_vs_gold_depth(gold):
    cases = [(ENV300, 8, 1.77), (ENV77, 10, 2.45)]
    details = []
    ok = True
    for env, n_pairs, target in cases:
        mat = SAPPHIRE_300K if env.temperature == 300.0 else SAPPHIRE_77K
        stack = Stack(quarter_wave_stack(mat, Vacuum(), n_pairs, T_LIH.omega))
        d_stack = potential_depth(LIH, stack, 2, env, QUAD).depth
        d_gold = potential_depth(LIH, gold, 2, env, QUAD).depth
        ratio = d_stack / d_gold
        ok &= abs(ratio - target) <= 0.15 * target
        details.append(f"{env.temperature:.0f}K ratio {ratio:.3f} vs "
                       f"{target} +/- 15%")
    _report(7, ok, "; ".join(details))


def test_criterion_08_peak_frequency():
    w_star = peak_photon_frequency(ENV300)
    ok = abs(w_star / 1.11e14 - 1.0) <= 0.01
    _report(8, ok, f"argmax omega^3 n(omega) = {w_star:.4e} rad/s")


def test_criterion_09_heating(gold):
    gamma0 = heating_rate_free(LIH, ENV300)
    free_ok = 0.3 <= gamma0 <= 0.7
    cavity = CavityGeometry(width=resonance_width(T_LIH, 1), mirror=gold)
    ratio = heating_rate_profile(0.0, LIH, cavity, ENV300, QUAD) / gamma0
    ratio_ok = abs(ratio - 2.0) <= 0.5
    _report(9, free_ok and ratio_ok,
            f"Gamma_0 = {gamma0:.3f} 1/s in [0.3, 0.7]: {free_ok}; "
            f"Gamma(0)/Gamma_0 = {ratio:.3f} vs 2 +/- 25%")


def test_criterion_10_property_suites():
    rng = np.random.default_rng(20260825)
    fast = QuadratureSpec(rel_tol=1e-7)
    suites = {}

    # 1. parity in z: every trace is even (500 random mirror/position pairs,
    #    1000 evaluations)
    ok = True
    for _ in range(500):
        r = float(rng.uniform(0.1, 0.99))
        nu = int(rng.integers(1, 4))
        cav = CavityGeometry(width=nu * LAM / 2.0, mirror=ConstantR(r))
        z = float(rng.uniform(0.0, 0.48)) * cav.width
        pick = rng.integers(0, 3)
        if pick == 0:
            p = cavity_trace_realfreq(z, T_LIH.omega, cav, fast)
            m = cavity_trace_realfreq(-z, T_LIH.omega, cav, fast)
            ok &= abs(p.total - m.total) <= 1e-10 * abs(p.total)
        elif pick == 1:
            xi = float(10 ** rng.uniform(11, 14))
            p = cavity_trace_imagfreq(z, xi, cav, fast)
            m = cavity_trace_imagfreq(-z, xi, cav, fast)
            ok &= abs(p - m) <= 1e-10 * abs(p)
        else:
            p = zero_frequency_trace_limit(z, cav, fast)
            m = zero_frequency_trace_limit(-z, cav, fast)
            ok &= abs(p - m) <= 1e-10 * abs(p)
    suites["parity"] = ok

    # 2. Im beta >= 0 on the physical branch (1000 random samples)
    omega = 10 ** rng.uniform(10, 16, size=1000)
    k = rng.uniform(0.0, 3.0, size=1000) * omega / C
    beta = transverse_beta(omega.astype(complex), k)
    w = rng.normal(size=1000) + 1j * rng.normal(size=1000)
    suites["im_beta"] = bool(np.all(beta.imag >= 0)
                             and np.all(sqrt_upper(w).imag >= 0))

    # 3. component-sum identity (1000 random component triples)
    ok = True
    for _ in range(1000):
        u = rng.normal(size=3) * 10.0 ** rng.integers(-40, -30)
        c = PotentialComponents(z=0.0, U_nr=u[0], U_pr=u[1], U_ev=u[2])
        ok &= c.U_total == u[0] + u[1] + u[2]
    cav = CavityGeometry(width=LAM, mirror=ConstantR(0.9))
    pc = potential_components(1e-4, LIH, cav, ENV300, fast)
    ok &= pc.U_total == pc.U_nr + pc.U_pr + pc.U_ev
    suites["component_sum"] = ok

    # 4. imaginary-frequency traces are real floats (1000 random samples)
    ok = True
    for _ in range(1000):
        r = float(rng.uniform(0.1, 0.99))
        cav = CavityGeometry(width=LAM, mirror=ConstantR(r))
        z = float(rng.uniform(-0.45, 0.45)) * cav.width
        xi = float(10 ** rng.uniform(11, 15))
        val = cavity_trace_imagfreq(z, xi, cav, fast)
        ok &= isinstance(val, float) and math.isfinite(val)
    suites["imagfreq_real"] = ok

    # 5. ground-state reduction: the level-scheme polarizability with all
    #    population in the ground state equals the dedicated ground-state
    #    polarizability (1000 random transitions), and the full potentials
    #    agree end to end
    ok = True
    for _ in range(1000):
        w0 = float(10 ** rng.uniform(11, 14))
        d2 = float(10 ** rng.uniform(-60, -56))
        xi = float(10 ** rng.uniform(10, 15))
        scheme = LevelScheme(energies=(0.0, w0), d_squared={(0, 1): d2})
        pairs = [(1, scheme.coupling(0, 1), scheme.energies[1])]
        alpha_scheme = (2.0 / (3.0 * HBAR)) * sum(
            c * wkn / (wkn**2 + xi**2) for _, c, wkn in pairs)
        mol = Molecule("x", (Transition(omega=w0, d_squared=d2),))
        ok &= abs(alpha_scheme / polarizability_imag(mol, xi) - 1.0) < 1e-14
    scheme = LevelScheme(energies=(0.0, T_LIH.omega),
                         d_squared={(0, 1): T_LIH.d_squared})
    cav = CavityGeometry(width=LAM, mirror=ConstantR(0.9))
    for z in (0.0, 1.3e-4, -2.1e-4):
        dedicated = potential_components(z, LIH, cav, ENV300, fast).U_total
        general = general_state_potential(z, scheme, (1.0, 0.0), cav, ENV300,
                                          fast)
        ok &= abs(general / dedicated - 1.0) < 1e-12
    suites["ground_state_reduction"] = ok

    # 6. two-level equilibrium: thermal populations cancel the resonant
    #    channels, n(w) p0 - (n(w)+1) p1 = 0 (1000 random omega/T pairs),
    #    and the full potential reduces to the weighted nonresonant part
    ok = True
    for _ in range(1000):
        w0 = float(10 ** rng.uniform(11, 14))
        temp = float(rng.uniform(10.0, 1000.0))
        env = ThermalEnvironment(temp)
        x = HBAR * w0 / (K_B * temp)
        p1 = math.exp(-x) / (1.0 + math.exp(-x))
        p0 = 1.0 - p1
        n = photon_number(w0, env)
        ok &= abs(n * p0 - (n + 1.0) * p1) <= 1e-12 * (n + 1.0)
    x = HBAR * T_LIH.omega / (K_B * 300.0)
    p1 = math.exp(-x) / (1.0 + math.exp(-x))
    p0 = 1.0 - p1
    for z in (1e-4, -0.8e-4):
        got = general_state_potential(z, scheme, (p0, p1), cav, ENV300, fast)
        expect = (p0 - p1) * nonresonant_potential(z, LIH, cav, ENV300, fast)
        ok &= abs(got / expect - 1.0) < 1e-10
    suites["two_level_equilibrium"] = ok

    all_ok = all(suites.values())
    _report(10, all_ok,
            "; ".join(f"{name}: {'ok' if v else 'FAIL'}"
                      for name, v in suites.items()))


def test_criterion_11_inverse_nu_law():
    coupling = _coupling(T_LIH.omega, T_LIH.d_squared, ENV300)
    delta = 1e-6
    ratios = []
    for nu in (2, 3, 4):
        depth = potential_depth(LIH, ConstantR(1.0 - delta), nu, ENV300,
                                QUAD).depth
        ratios.append(depth / depth_scaling(nu, delta, LAM, coupling))
    variation = max(ratios) / min(ratios) - 1.0
    ok = variation < 0.15
    _report(11, ok, f"depth/scaling-law ratios {[f'{r:.4f}' for r in ratios]},"
            f" variation {variation:.3%} < 15%")
