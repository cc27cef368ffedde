"""Perturbative spectrum, anharmonicity closed forms, thermal occupancy."""

import numpy as np
import pytest

from afq import (CantileverGeometry, LennardJones, MaterialParams,
                 bias_state, modal_params, perturbative_energies,
                 relative_anharmonicity, relative_frequency_shift,
                 taylor_coefficients, thermal_occupancy)
from afq.errors import (DomainError, OrderMismatchError, SingularModelError)
from afq.potential import TaylorCoefficients
from afq.units import MEV, ANGSTROM, MHZ, MK, cycles, hbar

SILICON = MaterialParams(young_modulus=160e9, density=2329.0)
LJ = LennardJones(epsilon=17.4 * MEV, sigma=3.826 * ANGSTROM)


def paper_chain(length=495e-9, width=10e-9, thickness=12e-9):
    modal = modal_params(CantileverGeometry(length, width, thickness), SILICON)
    gap = LJ.inflection
    state = bias_state(modal, LJ, gap)
    taylor = taylor_coefficients(LJ, gap, max_order=6)
    return modal, state, taylor


def test_harmonic_limit():
    modal, state, _ = paper_chain()
    flat = TaylorCoefficients(expansion_point=state.gap,
                              coefficients=(0.0,) * 7)
    spec = perturbative_energies(state, flat, n_max=5)
    ns = np.arange(6)
    np.testing.assert_allclose(spec.energies,
                               hbar * state.omega_eff * (ns + 0.5), rtol=1e-15)
    assert spec.eta == 0.0  # alpha_2 = alpha_3 = 0 exactly


def test_paper_design_frequencies():
    modal, state, taylor = paper_chain()
    spec = perturbative_energies(state, taylor, n_max=5)
    assert cycles(spec.omega_10) / 1e6 == pytest.approx(60.0, abs=1.0)
    assert cycles(spec.eta) / 1e6 == pytest.approx(5.366, abs=0.01)
    assert spec.eta_r == pytest.approx(0.0894, abs=0.0005)
    # decomposition: omega_eff contributes 54.645 MHz, quartic ~5.35 MHz
    quartic = 12 * taylor.lam(4) * state.x_zpf**4 / hbar
    assert cycles(spec.omega_10 - state.omega_eff - quartic) / 1e6 < 0.05


def test_alpha_energy_consistency():
    _, state, taylor = paper_chain()
    spec = perturbative_energies(state, taylor, n_max=5)
    a0, a1, a2, a3 = spec.alpha_coeffs
    ns = np.arange(6)
    np.testing.assert_allclose(
        spec.energies, a0 + a1 * ns + a2 * ns**2 + a3 * ns**3, rtol=1e-14)


def test_levels_harden():
    _, state, taylor = paper_chain()
    spec = perturbative_energies(state, taylor, n_max=5)
    diffs = np.diff(spec.energies)
    assert np.all(diffs > 0)
    assert np.all(np.diff(diffs) > 0)  # spacing grows with n


def test_closed_form_matches_level_ladder():
    # Both derive from the same cubic-in-n ladder; agreement to 1e-12
    for length in (300e-9, 495e-9, 700e-9):
        _, state, taylor = paper_chain(length=length)
        spec = perturbative_energies(state, taylor, n_max=3)
        eta_r, eta, r0, r1 = relative_anharmonicity(state, LJ)
        assert eta_r == pytest.approx(spec.eta_r, rel=1e-12)
        assert eta == pytest.approx(spec.eta, rel=1e-12)


def test_r_parameters_paper_values():
    _, state, _ = paper_chain()
    eta_r, eta, r0, r1 = relative_anharmonicity(state, LJ)
    assert r0 == pytest.approx(10.2, abs=0.1)
    assert r1 == pytest.approx(1.8e-3, rel=0.05)
    assert eta_r == pytest.approx(0.089, abs=0.003)


def test_eta_r_vanishes_in_stiff_limit():
    # heavier/stiffer beams push r0 -> infinity and eta_r -> 0
    etas = []
    for length in (600e-9, 400e-9, 250e-9, 150e-9):
        _, state, _ = paper_chain(length=length)
        eta_r, *_ = relative_anharmonicity(state, LJ)
        etas.append(eta_r)
    assert np.all(np.diff(etas) < 0)
    assert etas[-1] < 1e-3
    assert etas[-1] < etas[0] / 50


def test_epsilon_scaling_of_eta():
    # at fixed x/sigma with omega_eff = omega_c, eta is linear in epsilon
    modal, state, _ = paper_chain()
    base_eta = relative_anharmonicity(state, LJ)[1]
    for c in (0.5, 2.0, 3.0):
        scaled = LennardJones(epsilon=c * LJ.epsilon, sigma=LJ.sigma)
        st = bias_state(modal, scaled, scaled.inflection)
        eta = relative_anharmonicity(st, scaled)[1]
        assert eta == pytest.approx(c * base_eta, rel=1e-12)


def test_quartic_singularity_error():
    class _Quadratic:
        def value(self, x):
            return 0.0

        def derivative(self, x, n):
            return 1e-3 if n == 2 else 0.0

    modal, state, _ = paper_chain()
    flat_state = bias_state(modal, _Quadratic(), 5 * ANGSTROM)
    with pytest.raises(SingularModelError):
        relative_anharmonicity(flat_state, _Quadratic())


def test_taylor_order_and_gap_mismatch_errors():
    _, state, taylor = paper_chain()
    with pytest.raises(OrderMismatchError):
        perturbative_energies(state, taylor_coefficients(LJ, state.gap, 4))
    with pytest.raises(OrderMismatchError):
        perturbative_energies(state, taylor_coefficients(LJ, 1.3 * LJ.sigma, 6))
    with pytest.raises(DomainError):
        perturbative_energies(state, taylor, order=7)


def test_higher_order_terms_are_small():
    _, state, _ = paper_chain()
    t8 = taylor_coefficients(LJ, state.gap, max_order=8)
    spec6 = perturbative_energies(state, t8, n_max=5)
    spec8 = perturbative_energies(state, t8, n_max=5, order=8)
    # eighth-order correction shifts the transition at the sub-percent level
    assert spec8.omega_10 == pytest.approx(spec6.omega_10, rel=5e-3)
    assert spec8.omega_10 != spec6.omega_10


def test_relative_frequency_shift():
    modal, state, taylor = paper_chain()
    spec = perturbative_energies(state, taylor, n_max=2)
    assert relative_frequency_shift(spec, modal) == pytest.approx(0.098,
                                                                  abs=0.002)
    flat = TaylorCoefficients(expansion_point=state.gap,
                              coefficients=(0.0,) * 7)
    iso = perturbative_energies(state, flat, n_max=2)
    # zero potential: omega_10 = omega_eff = omega_c at this gap
    modal_eff = modal_params(CantileverGeometry(495e-9, 10e-9, 12e-9), SILICON)
    assert relative_frequency_shift(iso, modal_eff) < 1e-12


def test_thermal_occupancy_paper_values():
    assert thermal_occupancy(60 * MHZ, 8 * MK) == pytest.approx(2.308, abs=0.001)
    assert thermal_occupancy(115 * MHZ, 8 * MK) == pytest.approx(1.0065,
                                                                 abs=0.001)
    assert thermal_occupancy(60 * MHZ, 0.0) == 0.0


def test_thermal_occupancy_monotonicity():
    temps = np.linspace(1, 50, 30) * MK
    occs = np.array([thermal_occupancy(60 * MHZ, t) for t in temps])
    assert np.all(np.diff(occs) > 0)
    freqs = np.linspace(20, 200, 30) * MHZ
    occs = np.array([thermal_occupancy(f, 8 * MK) for f in freqs])
    assert np.all(np.diff(occs) < 0)


def test_thermal_occupancy_domain():
    with pytest.raises(DomainError):
        thermal_occupancy(-1.0, 8 * MK)
    with pytest.raises(DomainError):
        thermal_occupancy(60 * MHZ, -1.0)
