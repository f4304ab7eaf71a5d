"""Mean-field pairing: quasiparticle energies, the BdG block and the gap equation."""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import optimize

from errors import DomainError
from fock import PairingModel

from .Config import Config
from .Exceptions import BracketError

__all__ = [
    "BdGBlock",
    "BdGEigen",
    "bcs_quasiparticle",
    "bdg_eigen",
    "chemical_potential",
    "gap_self_consistent",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BdGBlock:
    """The particle-hole block [[epsilon, -delta], [-delta, -epsilon]].

    :ivar epsilon: Single-particle energy
    :type epsilon: float
    :ivar delta: Off-diagonal coupling
    :type delta: float
    """

    epsilon: float
    delta: float

    def matrix(self) -> np.ndarray:
        return np.array([[self.epsilon, -self.delta], [-self.delta, -self.epsilon]])


class BdGEigen(NamedTuple):
    e_plus: float
    e_minus: float
    u: float
    v: float


def bcs_quasiparticle(epsilon: float, delta: float) -> float:
    """E = sqrt(epsilon^2 + |delta|^2)."""
    return math.hypot(epsilon, abs(delta))


def bdg_eigen(block: BdGBlock) -> BdGEigen:
    """Eigenvalues +/-E and the normalized E_plus eigenvector (u, v).

    Uses u^2 = (E + eps) / 2E and v^2 = (E - eps) / 2E, taking whichever of
    E + eps and E - eps is larger directly and the other as R^2 over it, so
    neither sign of epsilon cancels. u >= 0 and v = -sign(R) |v| follow from
    the eigen-equation; when u = 0, v = 1.

    :param block: The block
    :type block: BdGBlock
    :return: ``(e_plus, e_minus, u, v)``
    :rtype: BdGEigen
    """
    eps, r = block.epsilon, block.delta
    e = math.hypot(eps, r)
    if e == 0:
        return BdGEigen(0.0, 0.0, 1.0, 0.0)
    if eps >= 0:
        a = e + eps
        b = r * r / a
    else:
        b = e - eps
        a = r * r / b
    u = math.sqrt(a / (2.0 * e))
    v = -math.copysign(1.0, r) * math.sqrt(b / (2.0 * e))
    norm = math.hypot(u, v)
    u, v = u / norm, v / norm
    if u == 0:
        v = 1.0
    v += 0.0  # no negative zero
    return BdGEigen(e, -e, u, v)


def chemical_potential(model: PairingModel, n_pairs: int) -> float:
    """Chemical potential for n_pairs pairs at g = 0.

    The midpoint between the highest filled and the lowest empty level; a
    partly filled level pins it to its own energy.

    :raises DomainError: If n_pairs exceeds the capacity
    """
    levels = model.grouped()
    if not 0 <= n_pairs <= model.capacity:
        raise DomainError(f"n_pairs must lie in 0..{model.capacity}, got {n_pairs}")
    if n_pairs == 0:
        return levels[0][0]
    filled = 0
    for index, (epsilon, omega) in enumerate(levels):
        filled += omega
        if filled > n_pairs:
            return epsilon
        if filled == n_pairs:
            if index + 1 == len(levels):
                return epsilon
            return 0.5 * (epsilon + levels[index + 1][0])
    return levels[-1][0]


def gap_self_consistent(model: PairingModel, n_pairs: int | None = None) -> float:
    """Solve 1 = g sum_f omega_f / (2 sqrt(xi_f^2 + Delta^2)) for Delta >= 0.

    xi_f = eps_f - mu with mu from :func:`chemical_potential`. The left side
    decreases in Delta and is at most g sum(omega) / (2 Delta), so a positive
    root, when one exists, lies below g sum(omega) / 2.

    :param model: The model; g must be positive
    :type model: PairingModel
    :param n_pairs: Number of pairs; half the capacity, rounded down, by default
    :type n_pairs: int | None
    :return: The gap, 0 in the normal state
    :rtype: float
    :raises DomainError: If g is zero
    """
    if model.g <= 0:
        raise DomainError("the gap equation needs g > 0")
    if n_pairs is None:
        n_pairs = model.capacity // 2
    mu = chemical_potential(model, n_pairs)
    levels = np.array(model.grouped())
    xi, omega = levels[:, 0] - mu, levels[:, 1]

    def strength(delta: float) -> float:
        with np.errstate(divide="ignore"):
            return float(model.g * np.sum(omega / (2.0 * np.sqrt(xi * xi + delta * delta))))

    if strength(0.0) <= 1.0:
        return 0.0
    upper = 0.5 * model.g * float(np.sum(omega))
    if strength(upper) >= 1.0:
        # every level sits at mu
        return upper
    try:
        delta = optimize.bisect(
            lambda d: strength(d) - 1.0, 0.0, upper, xtol=Config.values["BISECTION_XTOL"], maxiter=400
        )
    except (ValueError, RuntimeError) as e:
        raise BracketError(f"gap equation not bracketed on [0, {upper:.15g}]: {e}")
    logger.debug("gap %.15g at g=%.6g, mu=%.6g", delta, model.g, mu)
    return float(delta)
