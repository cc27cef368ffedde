"""Design-space sweep, feasibility filtering, length optimization."""

import numpy as np
import pytest

from afq import (DesignConstraints, LennardJones, MaterialParams,
                 SweepSpec, design_point, feasible_designs, optimize_length,
                 sweep)
from afq.errors import DomainError
from afq.explorer import FLAG_OK, FLAG_SNAP_IN
from afq.units import MEV, ANGSTROM, MHZ, cycles

SILICON = MaterialParams(young_modulus=160e9, density=2329.0)
LJ = LennardJones(epsilon=17.4 * MEV, sigma=3.826 * ANGSTROM)


def make_spec(n_l=20, n_x=20, temperature=8e-3):
    return SweepSpec(lengths=tuple(np.linspace(200e-9, 800e-9, n_l)),
                     gaps_over_sigma=tuple(np.linspace(1.15, 2.0, n_x)),
                     width=10e-9, thickness=12e-9, material=SILICON,
                     potential=LJ, temperature=temperature)


def test_row_count_and_order():
    result = sweep(make_spec(12, 9))
    assert len(result) == 108
    # lexicographic (L, x): lengths outer, gaps inner
    assert np.all(np.diff(result.length) >= 0)
    for i in range(12):
        block = result.gap[i * 9:(i + 1) * 9]
        assert np.all(np.diff(block) > 0)


def test_flagged_rows_kept_not_dropped():
    result = sweep(make_spec(25, 40))
    snap = result.flag == FLAG_SNAP_IN
    assert snap.any()  # soft long beams go unstable past x0
    assert len(result) == 1000
    assert np.all(np.isnan(result.eta_r[snap]))
    assert np.all(result.k_eff[snap] <= 0)
    ok = result.flag == FLAG_OK
    assert np.all(np.isfinite(result.eta_r[ok]))
    assert np.all(result.k_eff[ok] > 0)


def test_sweep_matches_design_point():
    spec = make_spec(5, 5)
    result = sweep(spec)
    i = 10  # L index 2, x index 0 (stable for every length)
    L = spec.lengths[2]
    x = spec.gaps_over_sigma[0] * LJ.sigma
    row = design_point(L, spec.width, spec.thickness, SILICON, LJ,
                       spec.temperature, gap=x)
    assert result.length[i] == L and result.gap[i] == x
    assert row["eta_r"] == pytest.approx(result.eta_r[i], rel=1e-14)
    assert row["n_thermal"] == pytest.approx(result.n_thermal[i], rel=1e-14)


def test_headline_row():
    row = design_point(495e-9, 10e-9, 12e-9, SILICON, LJ, 8e-3)
    assert row["eta_r"] == pytest.approx(0.089, abs=0.003)
    assert cycles(row["omega_10_rad_s"]) / 1e6 == pytest.approx(60.0, abs=1.0)
    assert row["n_thermal"] == pytest.approx(2.3, abs=0.05)


def test_monotone_tradeoff_at_bias_point():
    lengths = np.linspace(200e-9, 800e-9, 31)
    rows = [design_point(L, 10e-9, 12e-9, SILICON, LJ, 8e-3) for L in lengths]
    eta = np.array([r["eta_r"] for r in rows])
    occ = np.array([r["n_thermal"] for r in rows])
    assert np.all(np.diff(eta) > 0)
    assert np.all(np.diff(occ) > 0)


def test_sweep_deterministic():
    a, b = sweep(make_spec(15, 15)), sweep(make_spec(15, 15))
    for col_a, col_b in zip(a.columns(), b.columns()):
        np.testing.assert_array_equal(col_a, col_b)


def test_feasible_designs_sorted_and_commutes():
    result = sweep(make_spec(20, 20))
    constraints = DesignConstraints(max_occupancy=1.5)
    feas = feasible_designs(result, constraints)
    assert len(feas) > 0
    assert np.all(np.diff(feas.eta_r) <= 0)  # descending
    # filtering commutes with pointwise evaluation (note the default
    # anharmonicity floor of 0 drops softening rows past ~1.49 sigma
    # where the quartic potential derivative turns negative)
    with np.errstate(invalid="ignore"):
        mask = ((result.flag == FLAG_OK)
                & (result.n_thermal <= constraints.max_occupancy)
                & (result.eta_r >= 0.0))
    assert len(feas) == int(mask.sum())
    assert set(zip(feas.length, feas.gap)) == set(
        zip(result.length[mask], result.gap[mask]))


def test_feasible_designs_empty_on_impossible_bound():
    result = sweep(make_spec(20, 20))
    feas = feasible_designs(result,
                            DesignConstraints(max_occupancy=10.0,
                                              min_relative_anharmonicity=0.5))
    assert len(feas) == 0  # max eta_r over the physical range is far below 0.5


def test_feasibility_boundary_small_design_family():
    # occupancy <= 1 at 8 mK, (w, t) = (10, 12) nm: boundary near L = 345 nm
    L, row = optimize_length(10e-9, 12e-9, SILICON, LJ, 8e-3,
                             DesignConstraints(max_occupancy=1.0))
    assert abs(L - 345e-9) <= 2e-9
    assert cycles(row["omega_10_rad_s"]) / 1e6 >= 115.0
    assert row["eta_r"] == pytest.approx(0.023, abs=0.005)


def test_feasibility_boundary_fabrication_friendly_family():
    # (w, t) = (18, 24) nm: boundary near L = 457 nm with eta_r <= 0.15%
    L, row = optimize_length(18e-9, 24e-9, SILICON, LJ, 8e-3,
                             DesignConstraints(max_occupancy=1.0))
    assert abs(L - 457e-9) <= 2e-9
    assert row["eta_r"] <= 0.0015


def test_optimize_length_headline_occupancy():
    L, row = optimize_length(10e-9, 12e-9, SILICON, LJ, 8e-3,
                             DesignConstraints(max_occupancy=2.3))
    assert abs(L - 495e-9) <= 2e-9


def test_optimize_length_unsatisfiable():
    with pytest.raises(DomainError):
        optimize_length(10e-9, 12e-9, SILICON, LJ, 8e-3,
                        DesignConstraints(max_occupancy=0.0))
    with pytest.raises(DomainError):
        # anharmonicity floor collides with the occupancy cap
        optimize_length(10e-9, 12e-9, SILICON, LJ, 8e-3,
                        DesignConstraints(max_occupancy=1.0,
                                          min_relative_anharmonicity=0.05))


def test_spec_validation():
    with pytest.raises(DomainError):
        make_spec(0, 5)
    with pytest.raises(DomainError):
        SweepSpec(lengths=(2e-7, 1e-7), gaps_over_sigma=(1.2, 1.5),
                  width=1e-8, thickness=1e-8, material=SILICON, potential=LJ,
                  temperature=8e-3)
    with pytest.raises(DomainError):
        SweepSpec(lengths=(2e-7,), gaps_over_sigma=(1.0, 1.5), width=1e-8,
                  thickness=1e-8, material=SILICON, potential=LJ,
                  temperature=8e-3)
