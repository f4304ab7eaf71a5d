"""Fermionic Fock space over paired levels with Jordan-Wigner operators.

Level f carries the two modes (f, +) and (f, -). Modes are numbered
k = 2f for + and k = 2f + 1 for -, and mode k is stored in bit 2L - 1 - k
of a basis index, so mode 0 is the most significant bit.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cache
from itertools import combinations

import numpy as np
from scipy import sparse

from errors import DomainError

__all__ = [
    "MAX_LEVELS",
    "DENSE_LEVELS",
    "Spin",
    "FockSpace",
    "AlgebraReport",
    "build_space",
    "creation",
    "annihilation",
    "identity",
    "parity",
    "anticommutator",
    "commutator",
    "max_deviation",
    "clifford_operators",
    "mixed_signature_operators",
    "clifford_relations_check",
    "car_check",
    "exterior_sign_check",
]

MAX_LEVELS = 12
DENSE_LEVELS = 4


class Spin(Enum):
    UP = "+"
    DOWN = "-"

    @classmethod
    def parse(cls, sigma) -> "Spin":
        """Accept a Spin, ``"+"``/``"-"`` or ``+1``/``-1``."""
        if isinstance(sigma, Spin):
            return sigma
        if sigma in ("+", 1):
            return cls.UP
        if sigma in ("-", -1):
            return cls.DOWN
        raise DomainError(f"unknown spin label {sigma!r}")


@dataclass(frozen=True)
class FockSpace:
    """Occupation-number basis over L paired levels.

    :ivar L: Number of paired levels, 1..12
    :type L: int
    """

    L: int

    @property
    def n_modes(self) -> int:
        return 2 * self.L

    @property
    def dimension(self) -> int:
        return 1 << self.n_modes

    @property
    def dense(self) -> bool:
        """Whether operators are handed out as dense arrays."""
        return self.L <= DENSE_LEVELS

    @property
    def modes(self) -> list[tuple[int, Spin]]:
        return [(f, s) for f in range(self.L) for s in (Spin.UP, Spin.DOWN)]

    def mode_index(self, f: int, sigma) -> int:
        """Position of mode (f, sigma) in the Jordan-Wigner string.

        :raises DomainError: If the level does not exist
        """
        if not 0 <= f < self.L:
            raise DomainError(f"level {f} does not exist in a space with L={self.L}")
        return 2 * f + (0 if Spin.parse(sigma) is Spin.UP else 1)

    def bit(self, k: int) -> int:
        return 1 << (self.n_modes - 1 - k)

    def store(self, matrix):
        """Convert to the storage this space uses: dense for L <= 4."""
        if self.dense:
            return matrix.toarray() if sparse.issparse(matrix) else np.asarray(matrix)
        return sparse.csr_matrix(matrix)


@dataclass
class AlgebraReport:
    """Outcome of an operator identity check.

    ``deviations`` must not exceed ``tolerance``; ``contrasts`` are identities
    that are expected to fail and must exceed it.

    :ivar name: What was checked
    :type name: str
    :ivar deviations: Largest entrywise deviation per identity
    :type deviations: dict[str, float]
    :ivar contrasts: Largest deviation of identities that should not hold
    :type contrasts: dict[str, float]
    :ivar tolerance: Allowed deviation; 0 means exact
    :type tolerance: float
    """

    name: str
    deviations: dict[str, float] = field(default_factory=dict)
    contrasts: dict[str, float] = field(default_factory=dict)
    tolerance: float = 0.0

    @property
    def passed(self) -> bool:
        return all(d <= self.tolerance for d in self.deviations.values()) and all(
            c > self.tolerance for c in self.contrasts.values()
        )

    @property
    def worst(self) -> float:
        return max(self.deviations.values(), default=0.0)


def build_space(L: int) -> FockSpace:
    """Fock space over L paired levels.

    :param L: Number of levels, 1..12
    :type L: int
    :return: The space, of dimension 4^L
    :rtype: FockSpace
    :raises DomainError: If L is out of range
    """
    if not 1 <= L <= MAX_LEVELS:
        raise DomainError(f"number of levels must lie in 1..{MAX_LEVELS}, got {L}")
    return FockSpace(L)


@cache
def _annihilators(n_modes: int) -> tuple[sparse.csr_matrix, ...]:
    id2 = sparse.identity(2, dtype=np.int64, format="csr")
    z = sparse.csr_matrix(np.array([[1, 0], [0, -1]], dtype=np.int64))
    lower = sparse.csr_matrix(np.array([[0, 1], [0, 0]], dtype=np.int64))
    ops = []
    for i in range(n_modes):
        a = sparse.identity(1, dtype=np.int64, format="csr")
        for j in range(n_modes):
            if j < i:
                a = sparse.kron(a, z, format="csr")
            elif j == i:
                a = sparse.kron(a, lower, format="csr")
            else:
                a = sparse.kron(a, id2, format="csr")
        a.eliminate_zeros()
        ops.append(a)
    return tuple(ops)


def annihilation(space: FockSpace, f: int, sigma):
    """Annihilation operator of mode (f, sigma).

    :param space: The space
    :type space: FockSpace
    :param f: Level index
    :type f: int
    :param sigma: Spin, ``"+"`` or ``"-"``
    :return: Integer matrix with entries in {-1, 0, 1}
    :raises DomainError: If the mode does not exist
    """
    k = space.mode_index(f, sigma)
    return space.store(_annihilators(space.n_modes)[k].copy())


def creation(space: FockSpace, f: int, sigma):
    """Creation operator of mode (f, sigma), the transpose of the annihilator.

    :raises DomainError: If the mode does not exist
    """
    k = space.mode_index(f, sigma)
    return space.store(_annihilators(space.n_modes)[k].T.tocsr())


def identity(space: FockSpace, dtype=np.int64):
    return space.store(sparse.identity(space.dimension, dtype=dtype, format="csr"))


def parity(space: FockSpace):
    """Fermion parity (-1)^N as a diagonal matrix."""
    counts = np.array([bin(s).count("1") for s in range(space.dimension)])
    return space.store(sparse.diags(np.where(counts % 2 == 0, 1, -1).astype(np.int64)))


def anticommutator(a, b):
    return a @ b + b @ a


def commutator(a, b):
    return a @ b - b @ a


def max_deviation(matrix) -> float:
    """Largest absolute entry, for dense or sparse matrices."""
    if sparse.issparse(matrix):
        data = matrix.tocsr().data
        return float(np.max(np.abs(data))) if data.size else 0.0
    matrix = np.asarray(matrix)
    return float(np.max(np.abs(matrix))) if matrix.size else 0.0


def _all_modes(space: FockSpace):
    return [annihilation(space, f, s) for f, s in space.modes]


def _sparse(matrix) -> sparse.csr_matrix:
    return sparse.csr_matrix(matrix)


def car_check(space: FockSpace) -> AlgebraReport:
    """Check {a_i, a_j^+} = delta_ij and {a_i, a_j} = 0 for every pair of modes."""
    a = [_sparse(op) for op in _all_modes(space)]
    adag = [op.T.tocsr() for op in a]
    one = sparse.identity(space.dimension, dtype=np.int64, format="csr")
    report = AlgebraReport("canonical anticommutation relations")
    mixed = same = 0.0
    for i, j in combinations(range(len(a)), 2):
        mixed = max(mixed, max_deviation(anticommutator(a[i], adag[j])))
        same = max(same, max_deviation(anticommutator(a[i], a[j])))
    for i in range(len(a)):
        mixed = max(mixed, max_deviation(anticommutator(a[i], adag[i]) - one))
        same = max(same, max_deviation(a[i] @ a[i]))
    report.deviations = {"{a_i, a_j^+} - delta_ij": mixed, "{a_i, a_j}": same}
    return report


def clifford_operators(space: FockSpace) -> list[tuple[object, object]]:
    """Auxiliary operators e_i = a_i - a_i^+ and e_i^+ = a_i + a_i^+.

    They satisfy {e_i, e_j} = -2 delta_ij, {e_i^+, e_j^+} = 2 delta_ij and
    {e_i, e_j^+} = 0.

    :param space: The space
    :type space: FockSpace
    :return: ``(e_i, e_i^+)`` for every mode in Jordan-Wigner order
    :rtype: list[tuple]
    """
    pairs = []
    for op in _all_modes(space):
        pairs.append((op - op.T, op + op.T))
    return pairs


def mixed_signature_operators(space: FockSpace) -> list[tuple[object, object]]:
    """Mixed-signature generators c(e_i) = e_i and E(e_i) = i P e_i^+.

    P is the parity operator. The factor i P makes every c commute with every
    E while keeping {E_i, E_j} = 2 delta_ij and E Hermitian.

    :param space: The space
    :type space: FockSpace
    :return: ``(c_i, E_i)`` for every mode
    :rtype: list[tuple]
    """
    p = parity(space)
    return [(e, 1j * (p @ e_dag)) for e, e_dag in clifford_operators(space)]


def clifford_relations_check(space: FockSpace) -> AlgebraReport:
    """Check the auxiliary-operator algebra and its mixed-signature form.

    The undressed e_i and e_j^+ anticommute rather than commute; that gap is
    recorded as a contrast, as is the closure of the flipped convention
    e'_i = i e_i with {e'_i, e'_j} = +2 delta_ij.
    """
    ops = [(_sparse(e), _sparse(ed)) for e, ed in clifford_operators(space)]
    mixed = [(_sparse(c), _sparse(E)) for c, E in mixed_signature_operators(space)]
    one = sparse.identity(space.dimension, dtype=np.int64, format="csr")
    worst = {
        "{e_i, e_j} + 2 delta_ij": 0.0,
        "{e_i^+, e_j^+} - 2 delta_ij": 0.0,
        "{e_i, e_j^+}": 0.0,
        "{c_i, c_j} + 2 delta_ij": 0.0,
        "{E_i, E_j} - 2 delta_ij": 0.0,
        "[c_i, E_j]": 0.0,
        "{e'_i, e'_j} - 2 delta_ij": 0.0,
    }
    undressed = 0.0
    for i in range(len(ops)):
        for j in range(len(ops)):
            delta = 2 * one if i == j else 0 * one
            e_i, ed_i = ops[i]
            e_j, ed_j = ops[j]
            c_i, E_i = mixed[i]
            c_j, E_j = mixed[j]
            updates = {
                "{e_i, e_j} + 2 delta_ij": anticommutator(e_i, e_j) + delta,
                "{e_i^+, e_j^+} - 2 delta_ij": anticommutator(ed_i, ed_j) - delta,
                "{e_i, e_j^+}": anticommutator(e_i, ed_j),
                "{c_i, c_j} + 2 delta_ij": anticommutator(c_i, c_j) + delta,
                "{E_i, E_j} - 2 delta_ij": anticommutator(E_i, E_j) - delta,
                "[c_i, E_j]": commutator(c_i, E_j),
                "{e'_i, e'_j} - 2 delta_ij": anticommutator(1j * e_i, 1j * e_j) - delta,
            }
            for key, matrix in updates.items():
                worst[key] = max(worst[key], max_deviation(matrix))
            undressed = max(undressed, max_deviation(commutator(e_i, ed_j)))
    return AlgebraReport(
        "Clifford auxiliary operators",
        deviations=worst,
        contrasts={"[e_i, e_j^+] (undressed)": undressed},
    )


def exterior_sign_check(space: FockSpace) -> AlgebraReport:
    """Check that a_k^+ acts on basis bitmasks as exterior multiplication.

    Wedging e_k in front of e_i1 ^ ... ^ e_im (ascending) and sorting costs one
    sign per occupied mode before k; the annihilator, as the transpose, is
    the matching interior product. Reports the number of mismatched entries.
    """
    mismatches = 0
    for f, s in space.modes:
        k = space.mode_index(f, s)
        adag = sparse.csc_matrix(creation(space, f, s))
        for state in range(space.dimension):
            occupied = [m for m in range(space.n_modes) if state & space.bit(m)]
            column = adag[:, state]
            if k in occupied:
                mismatches += column.nnz != 0
                continue
            wedge = [k] + occupied
            inversions = sum(
                1 for x in range(len(wedge)) for y in range(x + 1, len(wedge)) if wedge[x] > wedge[y]
            )
            target = state | space.bit(k)
            expected = -1 if inversions % 2 else 1
            mismatches += column.nnz != 1 or column[target, 0] != expected
    return AlgebraReport("exterior multiplication", deviations={"mismatched entries": float(mismatches)})
