"""Nuclear-charge scan of the curvature/harmonic inequality margin on S^3."""

import logging
import math
from dataclasses import dataclass
from functools import cache

import numpy as np
from numpy.polynomial import Legendre, legendre

from errors import DomainError

from .Config import Config
from .Gegenbauer import gegenbauer_polynomial
from .Levels import RelativisticLevel, l_of_gamma_kappa

__all__ = ["ScanPoint", "harmonic_quartic_integral", "sw_discreteness_scan", "scan_sign_changes"]

logger = logging.getLogger(__name__)

SPHERE_VOLUME = 2.0 * math.pi ** 2


@dataclass(frozen=True)
class ScanPoint:
    """Margin at one nuclear charge; ``margin`` is None when supercritical."""

    z: int
    margin: float | None


@cache
def harmonic_quartic_integral(n_r: int, l: int, nodes: int) -> float:
    """Integral of |psi|^4 over S^3 for the unit-normalized harmonic
    psi ~ sin^l(chi) C_{n_r}^(l+1)(cos chi) P_l(cos theta), m = 0.

    Product Gauss-Legendre in (chi, theta); the phi integral is 2 pi.

    :param n_r: Gegenbauer degree
    :type n_r: int
    :param l: Orbital number
    :type l: int
    :param nodes: Quadrature nodes per angle
    :type nodes: int
    :return: The quartic integral
    :rtype: float
    """
    x, w = legendre.leggauss(nodes)
    angle = 0.5 * math.pi * (x + 1.0)
    weight = 0.5 * math.pi * w
    chi, theta = np.meshgrid(angle, angle, indexing="ij")
    measure = 2.0 * math.pi * np.outer(weight, weight) * np.sin(chi) ** 2 * np.sin(theta)
    psi = (
        np.sin(chi) ** l
        * gegenbauer_polynomial(n_r, l + 1)(np.cos(chi))
        * Legendre.basis(l)(np.cos(theta))
    )
    norm = np.sum(measure * psi ** 2)
    return float(np.sum(measure * psi ** 4) / norm ** 2)


def sw_discreteness_scan(
    n_r: int, l: int, kappa: int, z_max: int, alpha: float = Config.values["ALPHA"]
) -> list[ScanPoint]:
    """Margin(Z) = 2 pi^2 I(Z)^2 - (1/2) integral |psi|^4 for Z = 1..z_max.

    I(Z) = (n_r + l(gamma-kappa) + 1)^2 carries the nuclear charge; the
    harmonic uses l. At alpha = 0 every margin is identical.

    :param n_r: Radial quantum number
    :type n_r: int
    :param l: Orbital number of the harmonic
    :type l: int
    :param kappa: Dirac quantum number for the curvature term
    :type kappa: int
    :param z_max: Last nuclear charge, at most 137
    :type z_max: int
    :param alpha: Fine-structure constant
    :type alpha: float
    :return: One point per Z, in increasing Z
    :rtype: list[ScanPoint]
    :raises DomainError: On out-of-range arguments
    """
    if not 1 <= z_max <= Config.values["SW_MAX_Z"]:
        raise DomainError(f"z_max must lie in 1..{Config.values['SW_MAX_Z']}, got {z_max}")
    if n_r < 0 or l < 0 or kappa == 0:
        raise DomainError(f"need n_r >= 0, l >= 0, kappa != 0; got {n_r}, {l}, {kappa}")
    quartic = harmonic_quartic_integral(n_r, l, Config.values["QUADRATURE_NODES"])
    points = []
    for z in range(1, z_max + 1):
        try:
            level = RelativisticLevel(n_r, kappa, z, alpha)
        except DomainError:
            points.append(ScanPoint(z, None))
            continue
        curvature = (n_r + l_of_gamma_kappa(level) + 1.0) ** 2
        points.append(ScanPoint(z, SPHERE_VOLUME * curvature ** 2 - 0.5 * quartic))
    logger.debug("scanned %d charges, %d undefined", z_max, sum(p.margin is None for p in points))
    return points


def scan_sign_changes(points: list[ScanPoint]) -> list[int]:
    """Charges at which the margin changes sign from the previous defined point.

    :param points: Output of :func:`sw_discreteness_scan`
    :type points: list[ScanPoint]
    :return: The charges, in increasing order
    :rtype: list[int]
    """
    changes, previous = [], None
    for point in points:
        if point.margin is None:
            continue
        if previous is not None and np.sign(point.margin) != np.sign(previous):
            changes.append(point.z)
        previous = point.margin
    return changes
