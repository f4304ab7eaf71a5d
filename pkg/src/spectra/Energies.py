"""Closed-form spectra: hydrogenic, Madelung-regular, Dirac-Coulomb and its
fine-structure expansion, plus a bisection oracle for the Dirac levels."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import optimize

from errors import DomainError, SolverError

from .Config import Config
from .Levels import EnergyValue, RelativisticLevel, Units, effective_principal

__all__ = [
    "RadialMap",
    "hydrogen_energy",
    "madelung_energy",
    "dirac_energy",
    "dirac_binding_energy",
    "dirac_energy_bisection",
    "fine_structure_expansion",
    "radial_map",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RadialMap:
    """Radial variables at a bound-state energy (hbar = c = m = 1).

    :ivar mu: sqrt(1 - E^2)
    :type mu: float
    :ivar rho: 2 mu r
    :type rho: float
    :ivar omega: 4 Z alpha E / mu
    :type omega: float
    """

    mu: float
    rho: float
    omega: float


def _check_quantum_numbers(z: int, n_r: int, l: int) -> None:
    if z < 1:
        raise DomainError(f"nuclear charge must be at least 1, got {z}")
    if n_r < 0 or l < 0:
        raise DomainError(f"need n_r >= 0 and l >= 0, got n_r={n_r}, l={l}")


def hydrogen_energy(z: int, n_r: int, l: int) -> EnergyValue:
    """Schrodinger binding energy -Z^2 / (2 n~^2) with n~ = n_r + l + 1.

    :param z: Nuclear charge
    :type z: int
    :param n_r: Radial quantum number
    :type n_r: int
    :param l: Orbital angular momentum
    :type l: int
    :return: Energy in hartree
    :rtype: EnergyValue
    """
    _check_quantum_numbers(z, n_r, l)
    n_tilde = n_r + l + 1
    return EnergyValue(-z * z / (2.0 * n_tilde * n_tilde), Units.HARTREE)


def madelung_energy(z: int, n_r: int, l: int) -> EnergyValue:
    """Madelung-regular binding energy -Z^2 / (2 (n~ + l)^2).

    Levels are degenerate in n + l, which orders 4s below 3d.

    :param z: Nuclear charge
    :type z: int
    :param n_r: Radial quantum number
    :type n_r: int
    :param l: Orbital angular momentum
    :type l: int
    :return: Binding part in hartree; the rest mass is not included
    :rtype: EnergyValue
    """
    _check_quantum_numbers(z, n_r, l)
    N = n_r + 2 * l + 1
    return EnergyValue(-z * z / (2.0 * N * N), Units.HARTREE)


def dirac_energy(level: RelativisticLevel) -> EnergyValue:
    """Dirac-Coulomb energy E/mc^2 = [1 + (alpha Z / N~)^2]^(-1/2).

    :param level: The level
    :type level: RelativisticLevel
    :return: Energy in rest-mass units, inside (0, 1] and equal to 1 at alpha = 0
    :rtype: EnergyValue
    """
    ratio = level.alpha * level.z / effective_principal(level)
    return EnergyValue(1.0 / math.sqrt(1.0 + ratio * ratio), Units.REST_MASS)


def dirac_binding_energy(level: RelativisticLevel) -> EnergyValue:
    """Binding part (E - mc^2) / (alpha^2 mc^2) of a Dirac level.

    Evaluated as expm1(-log1p(x) / 2) / alpha^2 so that small alpha loses no
    digits; at alpha = 0 it is the hydrogenic value.

    :param level: The level
    :type level: RelativisticLevel
    :return: Energy in hartree
    :rtype: EnergyValue
    """
    n_eff = effective_principal(level)
    if level.alpha == 0:
        return EnergyValue(-level.z ** 2 / (2.0 * n_eff * n_eff), Units.HARTREE)
    x = (level.alpha * level.z / n_eff) ** 2
    return EnergyValue(math.expm1(-0.5 * math.log1p(x)) / level.alpha ** 2, Units.HARTREE)


def dirac_energy_bisection(level: RelativisticLevel) -> EnergyValue:
    """Solve omega/4 = N~ for E by bisection on (0, 1).

    omega/4 = Z alpha E / sqrt(1 - E^2) grows monotonically from 0 to
    infinity on the interval, so the root is bracketed.

    :param level: The level
    :type level: RelativisticLevel
    :return: Energy in rest-mass units
    :rtype: EnergyValue
    :raises SolverError: If the bracket fails
    """
    if level.alpha == 0:
        return EnergyValue(1.0, Units.REST_MASS)
    n_eff = effective_principal(level)
    coupling = level.z * level.alpha

    def mismatch(e: float) -> float:
        return coupling * e / math.sqrt((1.0 - e) * (1.0 + e)) - n_eff

    upper = float(np.nextafter(1.0, 0.0))
    try:
        root = optimize.bisect(
            mismatch, 0.0, upper, xtol=Config.values["BISECTION_XTOL"], maxiter=200
        )
    except (ValueError, RuntimeError) as e:
        raise SolverError(f"bisection failed for {level}: {e}")
    logger.debug("bisection root %.17g for %s", root, level)
    return EnergyValue(root, Units.REST_MASS)


def fine_structure_expansion(
    z: int, n_tilde: int, j: Fraction | float, alpha: float = Config.values["ALPHA"]
) -> EnergyValue:
    """Expansion of the Dirac energy through order alpha^4.

    E/mc^2 = 1 - (aZ)^2 / (2 n~^2) - (aZ)^4 / (2 n~^4) [n~ / (j + 1/2) - 3/4]

    :param z: Nuclear charge
    :type z: int
    :param n_tilde: Principal number
    :type n_tilde: int
    :param j: Total angular momentum, a half-integer in [1/2, n~ - 1/2]
    :type j: Fraction | float
    :param alpha: Fine-structure constant
    :type alpha: float
    :return: Energy in rest-mass units
    :rtype: EnergyValue
    :raises DomainError: If j is not an admissible half-integer
    """
    twice = 2 * Fraction(j)
    if twice.denominator != 1 or twice.numerator % 2 != 1:
        raise DomainError(f"j must be a half-integer, got {j}")
    if n_tilde < 1 or not 1 <= twice.numerator <= 2 * n_tilde - 1:
        raise DomainError(f"need 1/2 <= j <= n~ - 1/2, got j={j}, n~={n_tilde}")
    a2 = (alpha * z) ** 2
    j_half = (twice.numerator + 1) / 2.0
    value = (
        1.0
        - a2 / (2.0 * n_tilde ** 2)
        - a2 * a2 / (2.0 * n_tilde ** 4) * (n_tilde / j_half - 0.75)
    )
    return EnergyValue(value, Units.REST_MASS)


def radial_map(level: RelativisticLevel, r: float = 1.0) -> RadialMap:
    """Radial variables mu, rho, omega at the level's Dirac energy.

    :param level: The level
    :type level: RelativisticLevel
    :param r: Radius, positive
    :type r: float
    :return: The map
    :rtype: RadialMap
    :raises DomainError: If r is not positive or alpha is zero (no bound state)
    """
    if r <= 0:
        raise DomainError(f"radius must be positive, got {r}")
    if level.alpha == 0:
        raise DomainError("alpha = 0 leaves mu = 0; the radial map needs a bound state")
    e = dirac_energy(level).value
    mu = math.sqrt((1.0 - e) * (1.0 + e))
    return RadialMap(mu=mu, rho=2.0 * mu * r, omega=4.0 * level.z * level.alpha * e / mu)
