"""Perturbative anharmonic spectrum of the biased cantilever.

First-order perturbation theory on the quartic and sextic Taylor terms
gives a cubic-in-n level ladder

    E_n = alpha_0 + alpha_1 n + alpha_2 n^2 + alpha_3 n^3

with

    alpha_0 = 15 lam6 xz^6 + 3 lam4 xz^4 + hbar w_eff / 2 + V(x)
    alpha_1 = 40 lam6 xz^6 + 6 lam4 xz^4 + hbar w_eff
    alpha_2 = 30 lam6 xz^6 + 6 lam4 xz^4
    alpha_3 = 20 lam6 xz^6

(xz = zero-point motion). Odd Taylor orders vanish at first order and
are not resummed here; the brute-force validators in :mod:`afq.oracle`
quantify what that omission costs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cantilever import BiasState, CantileverModal
from .errors import DomainError, OrderMismatchError, SingularModelError
from .potential import SurfacePotential, TaylorCoefficients
from .units import hbar, k_B


@dataclass(frozen=True)
class QubitSpectrum:
    """Energy ladder and anharmonicity figures of one design point.

    ``eta`` is stored as an angular frequency (rad/s); divide by 2 pi
    for the value in Hz.
    """

    energies: tuple            # J, n = 0..n_max
    omega_10: float            # rad/s
    omega_21: float            # rad/s
    eta: float                 # rad/s
    eta_r: float
    alpha_coeffs: tuple        # (alpha_0 .. alpha_3), J
    delta_omega: float | None = None


def perturbative_energies(bias: BiasState, taylor: TaylorCoefficients,
                          n_max: int = 5, order: int = 6) -> QubitSpectrum:
    """Anharmonic energy ladder at the bias point.

    ``order`` selects the highest even Taylor order included; 6 is the
    closed cubic-in-n form above, larger (even) values add
    x_zpf^(2k) lam_2k <n|(a+a^dag)^(2k)|n> terms evaluated with exact
    ladder-operator matrix elements.
    """
    if not math.isclose(taylor.expansion_point, bias.gap, rel_tol=1e-12):
        raise OrderMismatchError(
            "Taylor coefficients expanded at "
            f"{taylor.expansion_point:.6e} m but bias gap is {bias.gap:.6e} m")
    if order < 6 or order % 2:
        raise DomainError(f"order must be an even integer >= 6, got {order}")
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    if taylor.max_order < order:
        raise OrderMismatchError(
            f"need Taylor coefficients to order {order}, have {taylor.max_order}")

    xz = bias.x_zpf
    hw = hbar * bias.omega_eff
    q4 = taylor.lam(4) * xz**4
    q6 = taylor.lam(6) * xz**6
    a0 = 15.0 * q6 + 3.0 * q4 + 0.5 * hw + taylor.lam(0)
    a1 = 40.0 * q6 + 6.0 * q4 + hw
    a2 = 30.0 * q6 + 6.0 * q4
    a3 = 20.0 * q6
    ns = np.arange(n_max + 1)
    energies = a0 + a1 * ns + a2 * ns**2 + a3 * ns**3
    # transitions from the polynomial coefficients, not by differencing
    # the absolute energies (those carry the deep potential offset and
    # would lose digits against these small splittings)
    e10 = a1 + a2 + a3
    e21 = a1 + 3.0 * a2 + 7.0 * a3

    if order > 6:
        from .oracle import fock_matrix_element
        for two_k in range(8, order + 1, 2):
            qk = taylor.lam(two_k) * xz**two_k
            elems = np.array(
                [fock_matrix_element(int(n), two_k, int(n) + two_k + 5)
                 for n in ns])
            energies = energies + qk * elems
            e10 += qk * (elems[1] - elems[0])
            e21 += qk * (elems[2] - elems[1])

    omega_10 = e10 / hbar
    omega_21 = e21 / hbar
    eta = (e21 - e10) / hbar
    return QubitSpectrum(energies=tuple(energies), omega_10=omega_10,
                         omega_21=omega_21, eta=eta, eta_r=eta / omega_10,
                         alpha_coeffs=(a0, a1, a2, a3))


def relative_anharmonicity(bias: BiasState, potential: SurfacePotential):
    """Closed-form relative and absolute anharmonicity at the bias point.

    Returns (eta_r, eta, r0, r1) with

        r0 = 2 hbar w_eff / (xz^4 V''''(x))
        r1 = V^(6)(x) xz^2 / (4 V''''(x))
        eta_r = (1 + 2 r1) / (1 + r1 + r0)
        eta  = xz^4 V''''(x) (1 + 2 r1) / (2 hbar)
    """
    v4 = potential.derivative(bias.gap, 4)
    if v4 == 0.0:
        raise SingularModelError(
            "V''''(x) = 0: relative anharmonicity undefined at this gap")
    v6 = potential.derivative(bias.gap, 6)
    xz = bias.x_zpf
    r0 = 2.0 * hbar * bias.omega_eff / (xz**4 * v4)
    r1 = v6 * xz**2 / (4.0 * v4)
    eta_r = (1.0 + 2.0 * r1) / (1.0 + r1 + r0)
    eta = xz**4 * v4 * (1.0 + 2.0 * r1) / (2.0 * hbar)
    return eta_r, eta, r0, r1


def relative_frequency_shift(spectrum: QubitSpectrum,
                             modal: CantileverModal) -> float:
    """|1 - omega_10 / omega_c|, the surface-induced frequency pull."""
    if modal.omega_c <= 0:
        raise DomainError("omega_c must be > 0")
    return abs(1.0 - spectrum.omega_10 / modal.omega_c)


def thermal_occupancy(omega, temperature):
    """Bose-Einstein mean occupancy of a mode at ``omega`` and ``temperature``.

    T = 0 returns exactly 0.
    """
    if np.any(np.asarray(omega) <= 0):
        raise DomainError("omega must be > 0")
    if np.any(np.asarray(temperature) < 0):
        raise DomainError("temperature must be >= 0")
    if np.isscalar(omega) and np.isscalar(temperature):
        if temperature == 0:
            return 0.0
        return 1.0 / math.expm1(hbar * omega / (k_B * temperature))
    omega = np.asarray(omega, dtype=float)
    temperature = np.asarray(temperature, dtype=float)
    with np.errstate(divide="ignore", over="ignore"):
        out = 1.0 / np.expm1(hbar * omega / (k_B * temperature))
    return np.where(temperature == 0, 0.0, out)
