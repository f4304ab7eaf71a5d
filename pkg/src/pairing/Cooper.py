"""Cooper's one-pair bound state and the single-level closed form."""

import logging

import numpy as np
from scipy import optimize

from errors import DomainError
from fock import PairingModel

from .Config import Config
from .Exceptions import BracketError

__all__ = ["pair_function", "cooper_pair_energy", "single_level_energy"]

logger = logging.getLogger(__name__)


def pair_function(model: PairingModel, energy):
    """F(E) = sum_n omega_n / (2 eps_n - E) over the model's levels."""
    levels = np.array(model.grouped())
    return np.sum(levels[:, 1] / (2.0 * levels[:, 0] - energy))


def cooper_pair_energy(model: PairingModel) -> float:
    """The bound pair energy: the root of F(E) = 1/g below 2 min(eps).

    F is increasing on (-inf, 2 eps_min), so the root is bracketed by
    2 eps_min - 2 g sum(omega), where F <= 1/(2g), and 2 eps_min - g omega_min / 2,
    where F >= 2/g.

    :param model: The model; g must be positive
    :type model: PairingModel
    :return: The pair energy
    :rtype: float
    :raises DomainError: If g is zero
    :raises BracketError: If the bracket does not change sign
    """
    if model.g <= 0:
        raise DomainError("a bound pair needs g > 0")
    lowest, omega_lowest = model.grouped()[0]
    lower = 2.0 * lowest - 2.0 * model.g * model.capacity
    upper = 2.0 * lowest - 0.5 * model.g * omega_lowest

    def mismatch(energy: float) -> float:
        return pair_function(model, energy) - 1.0 / model.g

    try:
        root = optimize.bisect(
            mismatch, lower, upper, xtol=Config.values["BISECTION_XTOL"], maxiter=400
        )
    except (ValueError, RuntimeError) as e:
        raise BracketError(f"no Cooper root in [{lower:.15g}, {upper:.15g}]: {e}")
    logger.debug("Cooper pair energy %.15g for g=%.6g", root, model.g)
    return float(root)


def single_level_energy(epsilon: float, omega: int, n_pairs: int, g: float) -> float:
    """Exact ground energy of n_pairs pairs in one level of degeneracy omega.

    E = 2 k eps - g k (omega - k + 1).

    :raises DomainError: If the level cannot hold n_pairs pairs
    """
    if not 0 <= n_pairs <= omega:
        raise DomainError(f"a level of degeneracy {omega} cannot hold {n_pairs} pairs")
    return 2.0 * n_pairs * epsilon - g * n_pairs * (omega - n_pairs + 1)
