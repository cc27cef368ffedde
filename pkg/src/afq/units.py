"""Physical constants and display-unit conversions.

Internal computations are strict SI (J, m, kg, rad/s). Display units
(meV, angstrom, nm, MHz, mK, GPa) are converted only at the I/O
boundary; the multipliers below define those conversions in one place.
"""

from scipy.constants import e as _e_charge
from scipy.constants import hbar, k as k_B  # noqa: F401  (re-exported)

TWO_PI = 6.283185307179586

# multipliers: value_in_display_unit * UNIT == value in SI
MEV = 1e-3 * _e_charge      # meV -> J
ANGSTROM = 1e-10            # angstrom -> m
NM = 1e-9                   # nm -> m
PM = 1e-12                  # pm -> m
FM = 1e-15                  # fm -> m
GPA = 1e9                   # GPa -> Pa
MK = 1e-3                   # mK -> K

# frequencies: display units are ordinary (Hz-like), internal are angular
HZ = TWO_PI                 # Hz -> rad/s
KHZ = TWO_PI * 1e3
MHZ = TWO_PI * 1e6
GHZ = TWO_PI * 1e9


def angular(frequency_hz):
    """Ordinary frequency in Hz to angular frequency in rad/s."""
    return TWO_PI * frequency_hz


def cycles(omega):
    """Angular frequency in rad/s to ordinary frequency in Hz."""
    return omega / TWO_PI
