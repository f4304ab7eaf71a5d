"""The conformally deformed fish-eye potential and its Coulomb link."""

from dataclasses import dataclass

import numpy as np

from errors import DomainError

__all__ = ["FisheyeParams", "fisheye_potential", "coulomb_to_fisheye"]


@dataclass(frozen=True)
class FisheyeParams:
    """Shape of the deformed fish-eye potential.

    :ivar a: Length scale, positive
    :type a: float
    :ivar n0: Refractive amplitude, positive
    :type n0: float
    :ivar gamma: Deformation exponent; 1 gives Maxwell's fish-eye
    :type gamma: float
    """

    a: float
    n0: float
    gamma: float = 1.0

    def __post_init__(self):
        if self.a <= 0 or self.n0 <= 0:
            raise DomainError(f"need a > 0 and n0 > 0, got a={self.a}, n0={self.n0}")


def fisheye_potential(r, p: FisheyeParams):
    """V(r) = -(a/r)^2 [n0 / ((r/a)^-gamma + (r/a)^gamma)]^2.

    :param r: Radius or array of radii, all positive
    :type r: float | numpy.ndarray
    :param p: Potential shape
    :type p: FisheyeParams
    :return: The potential, with the shape of r
    :rtype: float | numpy.ndarray
    :raises DomainError: If any radius is not positive
    """
    x = np.asarray(r, dtype=float)
    if np.any(x <= 0):
        raise DomainError("fish-eye radius must be positive")
    s = x / p.a
    v = -((1.0 / s) ** 2) * (p.n0 / (s ** -p.gamma + s ** p.gamma)) ** 2
    return float(v) if v.ndim == 0 else v


def coulomb_to_fisheye(z: int, e_n: float) -> float:
    """Sturmian coupling beta_n = (Z e / E_n)^2 with e = 1.

    :param z: Nuclear charge
    :type z: int
    :param e_n: Level energy in hartree, nonzero
    :type e_n: float
    :return: beta_n, positive
    :rtype: float
    :raises DomainError: If e_n is zero
    """
    if e_n == 0:
        raise DomainError("level energy must be nonzero")
    return (z / e_n) ** 2
