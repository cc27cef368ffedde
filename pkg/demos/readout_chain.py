"""Model the qubit - mechanics - microwave readout chain.

Builds the three-mode chain (qubit at 60 MHz, mechanical readout mode
at 67 MHz, driven microwave resonator at 5 GHz), derives the effective
Purcell-damped readout mode by adiabatic elimination, checks it against
the full frequency response, and evaluates the dispersive figures
(chi, bus-mediated J) with their diagonalization cross-checks.

Run:  python demos/readout_chain.py
"""

import dataclasses

import numpy as np

from afq import (CqadConfig, adiabatic_elimination, bus_coupling,
                 cooling_estimate, dispersive_shift, electromech_coupling,
                 frequency_response, jc_dispersive_oracle,
                 parametric_coupling, response_linewidth,
                 two_qubit_bus_oracle)
from afq.units import GHZ, MHZ, NM, FM, cycles, hbar

omega_m = 67 * MHZ
cfg = CqadConfig(omega_q=60 * MHZ, omega_m=omega_m, omega_r=5 * GHZ,
                 omega_d=5 * GHZ - omega_m, g=1 * MHZ,
                 qubit_damping=60 * MHZ / 1e10,    # Q ~ 1e10 phononic shield
                 mech_damping=omega_m / 1e7, kappa_i=0.1 * MHZ,
                 kappa_e=0.9 * MHZ, n_d=1e4, participation=0.5, gap=60 * NM,
                 readout_x_zpf=4 * FM)

print("== electromechanical coupling ==")
g_em = electromech_coupling(cfg)
big_g = parametric_coupling(g_em, cfg.n_d)
print(f"vacuum rate g_EM       : {cycles(g_em):.1f} Hz")
print(f"driven rate G_EM       : {cycles(big_g) / 1e3:.2f} kHz "
      f"(n_d = {cfg.n_d:.0f} photons)")

print("\n== adiabatic elimination of the microwave mode ==")
eff = adiabatic_elimination(cfg)
print(f"two-mode detuning delta: {cycles(eff.delta):.2f} Hz (red sideband)")
print(f"Purcell rate Gamma_e   : {cycles(eff.purcell_rate):.1f} Hz")
print(f"total mech damping     : {cycles(eff.total_damping):.1f} Hz")
print(f"|alpha|^2 kappa        : {cycles(abs(eff.alpha)**2 * cfg.kappa):.1f} "
      "Hz (identity check)")

print("\n== full 3-mode response vs the reduced model ==")
# qubit decoupled here: the check targets the elimination of the
# microwave mode (a coupled qubit additionally pulls the mechanical
# line by g^2/(w_m - w_q) ~ 2 pi x 143 kHz)
bare = dataclasses.replace(cfg, g=0.0)
probe = np.linspace(eff.omega_m_shifted - 8 * eff.total_damping,
                    eff.omega_m_shifted + 8 * eff.total_damping, 20001)
resp = frequency_response(bare, probe)
fwhm = response_linewidth(resp)
print(f"mechanical linewidth   : {cycles(fwhm):.1f} Hz measured vs "
      f"{cycles(eff.total_damping):.1f} Hz predicted "
      f"({abs(fwhm / eff.total_damping - 1) * 100:.2f}% apart)")
print(f"max |reflection|       : {np.abs(resp.reflection).max():.6f} "
      "(passive bound)")
pull = cfg.g**2 / (cfg.omega_m - cfg.omega_q)
wide = np.linspace(eff.omega_m_shifted + pull - 8 * eff.total_damping,
                   eff.omega_m_shifted + pull + 8 * eff.total_damping, 20001)
resp_g = frequency_response(cfg, wide)
peak = wide[np.argmax(resp_g.mech_susceptibility)]
print(f"qubit pull on the line : {cycles(peak - eff.omega_m_shifted) / 1e3:.1f}"
      f" kHz measured vs g^2/(w_m - w_q) = {cycles(pull) / 1e3:.1f} kHz")

print("\n== sideband cooling estimate ==")
for n_th in (2.3, 1.0):
    cooled = cooling_estimate(n_th, cfg.mech_damping, eff.purcell_rate)
    print(f"n_th = {n_th:.1f} -> {cooled:.3f} "
          f"(Gamma_e/Gamma_i = {eff.purcell_rate / cfg.mech_damping:.1f})")

print("\n== dispersive readout figures ==")
eta = 5.366 * MHZ            # headline-design anharmonicity
delta = 4.3 * MHZ            # qubit detuning from the joint-shifted readout
chi = dispersive_shift(cfg.g, eta, delta)
print(f"chi (closed form)      : {cycles(chi) / 1e3:.1f} kHz")
levels = (0.0, hbar * cfg.omega_q, hbar * (2 * cfg.omega_q + eta))
chi_oracle = jc_dispersive_oracle(levels, cfg.omega_q - delta, cfg.g)
print(f"chi (diagonalization)  : {cycles(chi_oracle) / 1e3:.1f} kHz "
      "(opposite sign: the closed form inherits the softening-qubit "
      "convention; magnitudes agree in the dispersive regime)")

print("\n== bus-mediated two-qubit coupling ==")
delta_bus = 4.35 * MHZ
j = bus_coupling(cfg.g, cfg.g, delta_bus, delta_bus)
j_oracle = two_qubit_bus_oracle(cfg.omega_q, cfg.omega_q,
                                cfg.omega_q + delta_bus, cfg.g, cfg.g)
print(f"J (closed form)        : {cycles(j) / 1e3:.1f} kHz")
print(f"J (avoided crossing)   : {cycles(j_oracle) / 1e3:.1f} kHz")
gs = 0.4 * MHZ
print(f"deep dispersive check  : g = 0.4 MHz -> formula "
      f"{cycles(bus_coupling(gs, gs, delta_bus, delta_bus)) / 1e3:.2f} kHz, "
      f"oracle {cycles(two_qubit_bus_oracle(cfg.omega_q, cfg.omega_q, cfg.omega_q + delta_bus, gs, gs)) / 1e3:.2f} kHz")
