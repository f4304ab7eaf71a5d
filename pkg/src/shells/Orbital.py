"""Orbitals and the three filling rules of the aufbau construction."""

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering

from errors import DomainError

__all__ = [
    "LETTERS",
    "MAX_N",
    "Orbital",
    "FillingRule",
    "ALL_ORBITALS",
    "madelung_key",
    "filling_order",
    "period_lengths",
    "period_orbitals",
]

# Spectroscopic letters for l = 0, 1, 2, ... ("j" is skipped by convention)
LETTERS = "spdfghik"
MAX_N = 8


@total_ordering
@dataclass(frozen=True)
class Orbital:
    """A hydrogen-like (n, l) subshell.

    Orbitals compare by their Madelung key, so ``sorted`` yields the
    Madelung order.

    :ivar n: Principal quantum number, at least 1
    :type n: int
    :ivar l: Orbital angular momentum, between 0 and n - 1
    :type l: int
    """

    n: int
    l: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"principal number must be positive, got n={self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise DomainError(f"need 0 <= l <= n - 1, got n={self.n}, l={self.l}")

    @property
    def capacity(self) -> int:
        """Number of electrons the subshell holds, 2(2l + 1).

        :return: Subshell capacity
        :rtype: int
        """
        return 2 * (2 * self.l + 1)

    @property
    def label(self) -> str:
        """Spectroscopic label such as ``4d``.

        :return: The label
        :rtype: str
        :raises DomainError: If l has no spectroscopic letter
        """
        if self.l >= len(LETTERS):
            raise DomainError(f"no spectroscopic letter for l={self.l}")
        return f"{self.n}{LETTERS[self.l]}"

    @classmethod
    def from_label(cls, label: str) -> "Orbital":
        """Build an orbital from a label such as ``3d``.

        :param label: Principal number followed by one letter
        :type label: str
        :return: The orbital
        :rtype: Orbital
        :raises DomainError: If the label is malformed
        """
        if len(label) < 2 or not label[:-1].isdigit() or label[-1] not in LETTERS:
            raise DomainError(f"malformed orbital label '{label}'")
        return cls(int(label[:-1]), LETTERS.index(label[-1]))

    def __lt__(self, other: "Orbital") -> bool:
        return madelung_key(self) < madelung_key(other)

    def __str__(self) -> str:
        return self.label


def madelung_key(o: Orbital) -> tuple[int, int]:
    """Return the Madelung key (n + l, n) of an orbital.

    Lexicographic comparison of keys realizes the Madelung order.

    :param o: The orbital
    :type o: Orbital
    :return: The pair (n + l, n)
    :rtype: tuple[int, int]
    """
    return (o.n + o.l, o.n)


class FillingRule(Enum):
    """The three orbital filling rules.

    ``FOCK_N`` fills by increasing n, breaking ties by increasing l;
    ``HYDROGENIC_NL`` fills by increasing n then l; ``MADELUNG`` fills by
    increasing n + l then n.
    """

    FOCK_N = "fock-n"
    HYDROGENIC_NL = "hydrogenic-nl"
    MADELUNG = "madelung"

    def key(self, o: Orbital) -> tuple[int, int]:
        """Sort key realizing this rule's total order.

        :param o: The orbital
        :type o: Orbital
        :return: Key tuple
        :rtype: tuple[int, int]
        """
        if self is FillingRule.MADELUNG:
            return madelung_key(o)
        return (o.n, o.l)

    @classmethod
    def parse(cls, text: str) -> "FillingRule":
        """Look a rule up by its command line name.

        :param text: One of ``fock-n``, ``hydrogenic-nl``, ``madelung``
        :type text: str
        :return: The rule
        :rtype: FillingRule
        :raises DomainError: If the name is unknown
        """
        try:
            return cls(text.lower())
        except ValueError:
            names = ", ".join(rule.value for rule in cls)
            raise DomainError(f"unknown filling rule '{text}' (expected one of {names})")


ALL_ORBITALS: tuple[Orbital, ...] = tuple(
    Orbital(n, l) for n in range(1, MAX_N + 1) for l in range(n)
)


def filling_order(rule: FillingRule, count: int) -> list[Orbital]:
    """First ``count`` orbitals in the order of a filling rule.

    :param rule: The filling rule
    :type rule: FillingRule
    :param count: How many orbitals to return, at least 1
    :type count: int
    :return: Orbitals in filling order
    :rtype: list[Orbital]
    :raises DomainError: If count is not positive
    """
    if count < 1:
        raise DomainError(f"count must be at least 1, got {count}")
    return sorted(ALL_ORBITALS, key=rule.key)[:count]


def period_lengths(rule: FillingRule, max_N: int) -> list[int]:
    """Total capacity of every Madelung period N = n + l up to ``max_N``.

    :param rule: Must be the Madelung rule
    :type rule: FillingRule
    :param max_N: Last period to report, at least 1
    :type max_N: int
    :return: Period lengths for N = 1..max_N
    :rtype: list[int]
    :raises DomainError: For a rule other than Madelung or a bad max_N
    """
    if rule is not FillingRule.MADELUNG:
        raise DomainError(f"period lengths are defined for the Madelung rule, not {rule.value}")
    if max_N < 1:
        raise DomainError(f"max_N must be at least 1, got {max_N}")
    return [
        sum(2 * (2 * l + 1) for l in range((N - 1) // 2 + 1))
        for N in range(1, max_N + 1)
    ]


def period_orbitals(N: int) -> list[Orbital]:
    """Orbitals with n + l == N, in increasing n.

    :param N: The period index, at least 1
    :type N: int
    :return: The period's orbitals
    :rtype: list[Orbital]
    """
    if N < 1:
        raise DomainError(f"period index must be at least 1, got {N}")
    return [Orbital(N - l, l) for l in range((N - 1) // 2, -1, -1)]
