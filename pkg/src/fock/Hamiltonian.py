"""The constant-coupling pairing Hamiltonian and its exact diagonalization."""

import logging
from itertools import combinations

import numpy as np
from scipy import linalg, sparse

from errors import DomainError

from .Model import PairingModel
from .Space import (
    AlgebraReport,
    FockSpace,
    Spin,
    annihilation,
    commutator,
    creation,
    identity,
    max_deviation,
)

__all__ = [
    "number_operator",
    "level_number",
    "total_number",
    "pair_annihilation",
    "seniority",
    "pairing_hamiltonian",
    "pair_commutators_check",
    "pair_sector_matrix",
    "exact_ground_state",
    "sector_spectrum",
    "spectrum_by_sectors",
    "full_spectrum",
]

logger = logging.getLogger(__name__)


def number_operator(space: FockSpace, f: int, sigma):
    """Occupation n_(f, sigma) = a^+ a."""
    return creation(space, f, sigma) @ annihilation(space, f, sigma)


def level_number(space: FockSpace, f: int):
    """Pair number of a level, N_f = (n_(f,+) + n_(f,-)) / 2."""
    return 0.5 * (number_operator(space, f, Spin.UP) + number_operator(space, f, Spin.DOWN))


def total_number(space: FockSpace):
    """N = sum over levels of N_f."""
    total = level_number(space, 0)
    for f in range(1, space.L):
        total = total + level_number(space, f)
    return total


def pair_annihilation(space: FockSpace, f: int):
    """Pair annihilator b_f = a_(f,-) a_(f,+)."""
    return annihilation(space, f, Spin.DOWN) @ annihilation(space, f, Spin.UP)


def seniority(space: FockSpace, f: int):
    """Seniority nu_f = n_(f,+) - n_(f,-) of level f, with eigenvalues -1, 0 and 1.

    It vanishes on empty and paired levels and is +1 or -1 on a lone spin.

    :raises DomainError: If the level does not exist
    """
    up, down = number_operator(space, f, Spin.UP), number_operator(space, f, Spin.DOWN)
    return up - down


def pairing_hamiltonian(space: FockSpace, model: PairingModel):
    """H = sum_f 2 eps_f N_f - g sum_(f, f') b_f^+ b_f'.

    Degenerate levels are expanded into sublevels, so the model must have
    exactly L sublevels.

    :param space: The space
    :type space: FockSpace
    :param model: The model
    :type model: PairingModel
    :return: Real symmetric matrix
    :raises DomainError: If the sublevel count differs from L
    """
    energies = model.expanded()
    if len(energies) != space.L:
        raise DomainError(
            f"model has {len(energies)} sublevels but the space has L={space.L}"
        )
    h = 0.0 * identity(space, dtype=float)
    pairs = 0 * identity(space)
    for f, epsilon in enumerate(energies):
        h = h + 2.0 * epsilon * level_number(space, f)
        pairs = pairs + pair_annihilation(space, f)
    h = h - model.g * (pairs.T @ pairs)
    return space.store(h)


def pair_commutators_check(space: FockSpace) -> AlgebraReport:
    """Check [b_f, N_f'] = delta b_f and [b_f, b_f'^+] = delta (1 - 2 N_f').

    Also records how far [b_f, b_f^+] is from the identity an ideal boson
    would give; that contrast is nonzero on every state with N_f = 1.
    """
    one = sparse.identity(space.dimension, format="csr")
    worst_number = worst_pair = ideal = 0.0
    b = [sparse.csr_matrix(pair_annihilation(space, f)) for f in range(space.L)]
    n = [sparse.csr_matrix(level_number(space, f)) for f in range(space.L)]
    for f in range(space.L):
        for other in range(space.L):
            expected_number = b[f] if f == other else 0 * b[f]
            expected_pair = one - 2 * n[other] if f == other else 0 * one
            worst_number = max(worst_number, max_deviation(commutator(b[f], n[other]) - expected_number))
            worst_pair = max(worst_pair, max_deviation(commutator(b[f], b[other].T) - expected_pair))
        ideal = max(ideal, max_deviation(commutator(b[f], b[f].T) - one))
    return AlgebraReport(
        "pair commutators",
        deviations={
            "[b_f, N_f'] - delta b_f": worst_number,
            "[b_f, b_f'^+] - delta (1 - 2 N_f')": worst_pair,
        },
        contrasts={"[b_f, b_f^+] - 1 (ideal boson)": ideal},
    )


def pair_sector_matrix(
    model: PairingModel, n_pairs: int, blocked: tuple[int, ...] = ()
) -> np.ndarray:
    """Hamiltonian block for n_pairs pairs with the given sublevels singly occupied.

    The basis is the set of n_pairs-subsets of the unblocked sublevels. Each
    blocked sublevel adds its energy eps once and takes no part in pair
    scattering.

    :param model: The model
    :type model: PairingModel
    :param n_pairs: Number of pairs
    :type n_pairs: int
    :param blocked: Indices into ``model.expanded()`` holding one fermion
    :type blocked: tuple[int, ...]
    :return: Dense symmetric matrix of size C(L - len(blocked), n_pairs)
    :rtype: numpy.ndarray
    :raises DomainError: If the sector is empty or a blocked index is invalid
    """
    energies = model.expanded()
    blocked = tuple(sorted(set(blocked)))
    if any(not 0 <= b < len(energies) for b in blocked):
        raise DomainError(f"blocked sublevels {blocked} out of range")
    free = [f for f in range(len(energies)) if f not in blocked]
    if not 0 <= n_pairs <= len(free):
        raise DomainError(
            f"no states with {n_pairs} pairs in {len(free)} free sublevels"
        )
    basis = list(combinations(free, n_pairs))
    index = {state: i for i, state in enumerate(basis)}
    offset = sum(energies[b] for b in blocked)
    matrix = np.zeros((len(basis), len(basis)))
    for i, state in enumerate(basis):
        matrix[i, i] = offset + sum(2.0 * energies[f] - model.g for f in state)
        occupied = set(state)
        for f in state:
            for target in free:
                if target in occupied:
                    continue
                moved = tuple(sorted((occupied - {f}) | {target}))
                matrix[index[moved], i] -= model.g
    return matrix


def exact_ground_state(model: PairingModel, n_pairs: int) -> tuple[float, int]:
    """Lowest energy of the seniority-zero sector with n_pairs pairs.

    :param model: The model; degenerate levels are expanded into sublevels
    :type model: PairingModel
    :param n_pairs: Number of pairs, 0..capacity
    :type n_pairs: int
    :return: ``(energy, sector_dimension)``
    :rtype: tuple[float, int]
    :raises DomainError: If the sector is empty
    """
    matrix = pair_sector_matrix(model, n_pairs)
    energy = float(linalg.eigvalsh(matrix, subset_by_index=[0, 0])[0])
    logger.debug("exact ground state %.15g in a sector of dimension %d", energy, len(matrix))
    return energy, len(matrix)


def sector_spectrum(
    model: PairingModel, n_pairs: int, blocked: tuple[int, ...] = ()
) -> np.ndarray:
    """All eigenvalues of one (pair number, blocking) sector, ascending."""
    return linalg.eigvalsh(pair_sector_matrix(model, n_pairs, blocked))


def spectrum_by_sectors(model: PairingModel) -> np.ndarray:
    """Full spectrum assembled from seniority sectors.

    Each singly occupied sublevel may hold either spin, so a sector with b
    blocked sublevels contributes its eigenvalues 2^b times. The result has
    4^L entries and equals the spectrum of :func:`pairing_hamiltonian`.

    :param model: The model
    :type model: PairingModel
    :return: Sorted eigenvalues
    :rtype: numpy.ndarray
    """
    count = len(model.expanded())
    values = []
    for size in range(count + 1):
        for blocked in combinations(range(count), size):
            for n_pairs in range(count - size + 1):
                spectrum = sector_spectrum(model, n_pairs, blocked)
                values.extend(np.repeat(spectrum, 2 ** size))
    return np.sort(np.array(values))


def full_spectrum(space: FockSpace, model: PairingModel) -> np.ndarray:
    """Eigenvalues of the full-space Hamiltonian, ascending."""
    h = pairing_hamiltonian(space, model)
    dense = h.toarray() if sparse.issparse(h) else h
    return linalg.eigvalsh(dense)
