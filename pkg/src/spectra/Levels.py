"""Relativistic level bookkeeping: kappa, gamma-kappa and energy values."""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from errors import DomainError

from .Config import Config

__all__ = [
    "Units",
    "EnergyValue",
    "RelativisticLevel",
    "kappa_decode",
    "gamma_kappa",
    "l_of_gamma_kappa",
    "effective_principal",
]


class Units(Enum):
    """Unit system of an energy: full rest-mass units or hartree binding energy."""

    REST_MASS = "rest-mass-units"
    HARTREE = "hartree"


@dataclass(frozen=True)
class EnergyValue:
    """An energy tagged with its unit system.

    Rest-mass values are full energies E/mc^2; hartree values carry the
    binding part only. The two are never added together.

    :ivar value: The number
    :type value: float
    :ivar units: Its unit system
    :type units: Units
    """

    value: float
    units: Units

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class RelativisticLevel:
    """A Dirac-Coulomb level (n_r, kappa) for nuclear charge z.

    :ivar n_r: Radial quantum number, at least 0
    :type n_r: int
    :ivar kappa: Dirac quantum number, nonzero
    :type kappa: int
    :ivar z: Nuclear charge, at least 1
    :type z: int
    :ivar alpha: Fine-structure constant
    :type alpha: float
    :raises DomainError: On kappa == 0, negative n_r, z < 1, negative alpha
        or a supercritical charge alpha * z >= |kappa|
    """

    n_r: int
    kappa: int
    z: int
    alpha: float = Config.values["ALPHA"]

    def __post_init__(self):
        if self.kappa == 0:
            raise DomainError("kappa = 0 is excluded")
        if self.n_r < 0:
            raise DomainError(f"n_r must be non-negative, got {self.n_r}")
        if self.z < 1:
            raise DomainError(f"nuclear charge must be at least 1, got {self.z}")
        if self.alpha < 0:
            raise DomainError(f"alpha must be non-negative, got {self.alpha}")
        if (self.alpha * self.z) ** 2 >= self.kappa ** 2:
            raise DomainError(
                f"supercritical charge: alpha*Z = {self.alpha * self.z:.6g} >= |kappa| = {abs(self.kappa)}"
            )


def kappa_decode(kappa: int) -> tuple[int, Fraction]:
    """Orbital and total angular momentum encoded by kappa.

    :param kappa: Nonzero Dirac quantum number
    :type kappa: int
    :return: ``(l, j)`` with l = kappa for kappa > 0, |kappa| - 1 otherwise,
        and j = |kappa| - 1/2
    :rtype: tuple[int, Fraction]
    :raises DomainError: If kappa is zero
    """
    if kappa == 0:
        raise DomainError("kappa = 0 is excluded")
    l = kappa if kappa > 0 else -kappa - 1
    return l, Fraction(2 * abs(kappa) - 1, 2)


def gamma_kappa(level: RelativisticLevel) -> float:
    """The relativistic deformation sign(kappa) * sqrt(kappa^2 - (alpha Z)^2).

    :param level: The level
    :type level: RelativisticLevel
    :return: gamma-kappa
    :rtype: float
    """
    root = math.sqrt(level.kappa ** 2 - (level.alpha * level.z) ** 2)
    return math.copysign(root, level.kappa)


def l_of_gamma_kappa(level: RelativisticLevel) -> float:
    """Effective orbital number: gamma-kappa on the positive branch,
    |gamma-kappa| - 1 on the negative one.

    :param level: The level
    :type level: RelativisticLevel
    :return: l(gamma-kappa)
    :rtype: float
    """
    g = gamma_kappa(level)
    return g if level.kappa > 0 else abs(g) - 1.0


def effective_principal(level: RelativisticLevel) -> float:
    """n_r + l(gamma-kappa) + 1, the relativistic principal number.

    Summed as (integer part) + |gamma-kappa| on both branches, so the
    degenerate pairs (n_r + 1, -k) and (n_r, +k) agree bit for bit.

    :param level: The level
    :type level: RelativisticLevel
    :return: The effective principal number
    :rtype: float
    """
    whole = level.n_r if level.kappa < 0 else level.n_r + 1
    return float(whole) + abs(gamma_kappa(level))
