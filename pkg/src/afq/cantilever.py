"""Cantilever lateral-mode mechanics and the biased operating state.

Modal constants follow the Euler-Bernoulli fundamental lateral mode of a
rectangular beam clamped at one end:

    I      = t w^3 / 12
    k      = 3 E I / L^3
    omega_c = 1.015 sqrt(E w^2 / (rho L^4))
    m_eff  = k / omega_c^2   (= 0.2427 rho L w t)

The 1.015 prefactor and the 0.2427 mass fraction are the mutually
consistent pair; the effective mass is always computed as k/omega_c^2 so
the identity holds to machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContactRegimeError, DomainError, SnapInError
from .potential import LennardJones, SurfacePotential
from .units import hbar

# fundamental lateral mode frequency prefactor, (beta_1 L)^2 / sqrt(12)
MODE_FREQ_COEFF = 1.015

# gap below 1.1 sigma counts as contact for the Lennard-Jones model
CONTACT_GUARD = 1.1


@dataclass(frozen=True)
class MaterialParams:
    """Isotropic elastic constants used by the beam model."""

    young_modulus: float   # Pa
    density: float         # kg/m^3

    def __post_init__(self):
        if self.young_modulus <= 0 or self.density <= 0:
            raise DomainError("material constants must be > 0")


@dataclass(frozen=True)
class CantileverGeometry:
    """Beam dimensions; ``width`` is the lateral-oscillation dimension."""

    length: float
    width: float
    thickness: float

    def __post_init__(self):
        if min(self.length, self.width, self.thickness) <= 0:
            raise DomainError("geometry dimensions must be > 0")


@dataclass(frozen=True)
class CantileverModal:
    """Modal constants of the lateral mode; m_eff = k/omega_c^2 by construction."""

    spring_constant: float
    effective_mass: float
    omega_c: float
    moment_of_inertia: float


@dataclass(frozen=True)
class BiasState:
    """Operating point of the cantilever biased at gap ``x``.

    ``equilibrium_offset`` is the static deflection that balances the
    surface force against the spring; it is diagnostic only (the linear
    term cancels from the oscillation Hamiltonian and never enters the
    spectrum).
    """

    gap: float
    equilibrium_offset: float
    lj_stiffness: float        # signed V''(x)
    effective_stiffness: float
    omega_eff: float
    x_zpf: float


def modal_params(geometry: CantileverGeometry,
                 material: MaterialParams) -> CantileverModal:
    """Modal spring constant, frequency, and effective mass of the lateral mode."""
    I = geometry.thickness * geometry.width**3 / 12.0
    k = 3.0 * material.young_modulus * I / geometry.length**3
    omega_c = MODE_FREQ_COEFF * math.sqrt(
        material.young_modulus * geometry.width**2
        / (material.density * geometry.length**4))
    m_eff = k / omega_c**2
    return CantileverModal(spring_constant=k, effective_mass=m_eff,
                           omega_c=omega_c, moment_of_inertia=I)


def bias_state(modal: CantileverModal, potential: SurfacePotential,
               x: float) -> BiasState:
    """Operating state at gap ``x``: force balance, stiffness, zero-point motion.

    Raises
    ------
    ContactRegimeError
        for a Lennard-Jones potential with x <= 1.1 sigma.
    SnapInError
        if the attractive force gradient exceeds the spring constant
        (k_eff <= 0), i.e. past the static pull-in instability.
    """
    if isinstance(potential, LennardJones) and x <= CONTACT_GUARD * potential.sigma:
        raise ContactRegimeError(
            f"gap {x:.4e} m inside contact region (<= 1.1 sigma "
            f"= {CONTACT_GUARD * potential.sigma:.4e} m)")
    k = modal.spring_constant
    force = -potential.derivative(x, 1)          # surface force on the cantilever
    x_c = -force / k                             # k x_c + F = 0
    v2 = potential.derivative(x, 2)
    k_eff = k + v2
    if k_eff <= 0:
        raise SnapInError(
            f"k_eff = {k_eff:.4e} N/m <= 0 at gap {x:.4e} m (snap-in: "
            "attractive gradient exceeds spring constant)")
    omega_eff = math.sqrt(k_eff / modal.effective_mass)
    x_zpf = math.sqrt(hbar / (2.0 * modal.effective_mass * omega_eff))
    return BiasState(gap=x, equilibrium_offset=x_c, lj_stiffness=v2,
                     effective_stiffness=k_eff, omega_eff=omega_eff,
                     x_zpf=x_zpf)


def snap_in_threshold(modal: CantileverModal, potential: SurfacePotential,
                      search, samples: int = 4096):
    """Largest gap in ``search`` where k + V''(x) crosses zero.

    Returns None when the combined stiffness never changes sign over the
    interval (no instability in range). The root is bisected to a
    relative tolerance of 1e-9.
    """
    lo, hi = float(search[0]), float(search[1])
    xs = np.linspace(lo, hi, samples)
    f = modal.spring_constant + np.asarray(potential.derivative(xs, 2))
    sign_change = np.nonzero(np.diff(np.signbit(f)))[0]
    if sign_change.size == 0:
        return None
    i = sign_change[-1]                          # rightmost bracket
    a, b = xs[i], xs[i + 1]
    fa = modal.spring_constant + potential.derivative(a, 2)
    for _ in range(200):
        mid = 0.5 * (a + b)
        fm = modal.spring_constant + potential.derivative(mid, 2)
        if np.sign(fm) == np.sign(fa):
            a, fa = mid, fm
        else:
            b = mid
        if b - a <= 1e-9 * abs(mid):
            break
    return 0.5 * (a + b)
