import math
from dataclasses import dataclass

from errors import DomainError

__all__ = ["PairingModel"]


@dataclass(frozen=True)
class PairingModel:
    """Single-particle levels with pair degeneracies and a constant coupling.

    A level (epsilon, omega) stands for omega degenerate sublevels, each
    holding one time-reversed pair.

    :ivar levels: ``(epsilon, omega)`` pairs, omega a positive integer
    :type levels: tuple[tuple[float, int], ...]
    :ivar g: Pairing strength, non-negative
    :type g: float
    :raises DomainError: On an empty level list, a non-positive or
        non-integer degeneracy, a non-finite energy or a negative g
    """

    levels: tuple[tuple[float, int], ...]
    g: float

    def __post_init__(self):
        levels = tuple((float(e), omega) for e, omega in self.levels)
        if not levels:
            raise DomainError("a pairing model needs at least one level")
        for epsilon, omega in levels:
            if not math.isfinite(epsilon):
                raise DomainError(f"level energy must be finite, got {epsilon}")
            if isinstance(omega, bool) or int(omega) != omega or omega < 1:
                raise DomainError(f"pair degeneracy must be a positive integer, got {omega}")
        if not math.isfinite(self.g) or self.g < 0:
            raise DomainError(f"coupling must be finite and non-negative, got {self.g}")
        object.__setattr__(self, "levels", tuple((e, int(omega)) for e, omega in levels))

    @classmethod
    def from_lists(cls, energies, degeneracies, g: float) -> "PairingModel":
        """Build a model from parallel lists of energies and degeneracies.

        :raises DomainError: If the lists differ in length
        """
        energies, degeneracies = list(energies), list(degeneracies)
        if len(energies) != len(degeneracies):
            raise DomainError(
                f"{len(energies)} level energies but {len(degeneracies)} degeneracies"
            )
        return cls(tuple(zip(energies, degeneracies)), g)

    @property
    def capacity(self) -> int:
        """Total number of pairs the model holds."""
        return sum(omega for _, omega in self.levels)

    def grouped(self) -> list[tuple[float, int]]:
        """Levels with equal energy merged, in increasing energy."""
        merged: dict[float, int] = {}
        for epsilon, omega in self.levels:
            merged[epsilon] = merged.get(epsilon, 0) + omega
        return sorted(merged.items())

    def expanded(self) -> list[float]:
        """One energy per sublevel, in increasing energy."""
        return [epsilon for epsilon, omega in self.grouped() for _ in range(omega)]

    def with_coupling(self, g: float) -> "PairingModel":
        return PairingModel(self.levels, g)
