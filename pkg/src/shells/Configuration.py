"""Electron configurations: construction, aufbau filling, text notation."""

import re
from dataclasses import dataclass
from typing import Mapping

from errors import DomainError

from .Exceptions import ConfigurationParseError
from .Orbital import ALL_ORBITALS, FillingRule, Orbital, madelung_key

__all__ = [
    "MAX_Z",
    "NOBLE_GASES",
    "Configuration",
    "fill",
    "noble_core_configuration",
    "noble_core",
    "parse_configuration",
    "format_configuration",
    "strip_orbital",
]

MAX_Z = 118

NOBLE_GASES = {"He": 2, "Ne": 10, "Ar": 18, "Kr": 36, "Xe": 54, "Rn": 86, "Og": 118}

TOKEN = re.compile(r"(\d+)([a-z])(\d+)")
CORE = re.compile(r"\[([A-Z][a-z]?)\]")


@dataclass(frozen=True)
class Configuration:
    """Occupations of orbitals, stored in Madelung order.

    Orbitals with zero electrons never appear. Two configurations are equal
    exactly when their occupation maps are equal.

    :ivar occupations: ``(orbital, count)`` pairs sorted by Madelung key
    :type occupations: tuple[tuple[Orbital, int], ...]
    """

    occupations: tuple[tuple[Orbital, int], ...]

    def __post_init__(self):
        seen = set()
        for orbital, count in self.occupations:
            if orbital in seen:
                raise DomainError(f"orbital {orbital} listed twice")
            seen.add(orbital)
            if not 1 <= count <= orbital.capacity:
                raise DomainError(
                    f"{orbital} holds 1..{orbital.capacity} electrons, got {count}"
                )
        ordered = tuple(sorted(self.occupations, key=lambda item: madelung_key(item[0])))
        object.__setattr__(self, "occupations", ordered)
        if self.z < 1:
            raise DomainError("a configuration needs at least one electron")

    @classmethod
    def from_counts(cls, counts: Mapping[Orbital, int]) -> "Configuration":
        """Build a configuration from an orbital to count mapping.

        Zero counts are dropped.

        :param counts: Electrons per orbital
        :type counts: Mapping[Orbital, int]
        :return: The configuration
        :rtype: Configuration
        """
        return cls(tuple((o, c) for o, c in counts.items() if c != 0))

    @property
    def z(self) -> int:
        """Total number of electrons.

        :return: The electron count
        :rtype: int
        """
        return sum(count for _, count in self.occupations)

    def as_dict(self) -> dict[Orbital, int]:
        """Occupations as a plain dictionary in Madelung order.

        :return: Electrons per orbital
        :rtype: dict[Orbital, int]
        """
        return dict(self.occupations)

    def __getitem__(self, orbital: Orbital) -> int:
        return self.as_dict().get(orbital, 0)

    def __str__(self) -> str:
        return format_configuration(self)


def fill(rule: FillingRule, z: int) -> Configuration:
    """Fill orbitals greedily in rule order until z electrons are placed.

    :param rule: The filling rule
    :type rule: FillingRule
    :param z: Atomic number, 1..118
    :type z: int
    :return: The predicted ground-state configuration
    :rtype: Configuration
    :raises DomainError: If z is out of range
    """
    if not 1 <= z <= MAX_Z:
        raise DomainError(f"atomic number must lie in 1..{MAX_Z}, got {z}")
    counts = {}
    remaining = z
    for orbital in sorted(ALL_ORBITALS, key=rule.key):
        if remaining == 0:
            break
        placed = min(orbital.capacity, remaining)
        counts[orbital] = placed
        remaining -= placed
    return Configuration.from_counts(counts)


def noble_core_configuration(symbol: str) -> Configuration:
    """Configuration of a noble-gas core such as ``Kr``.

    :param symbol: Noble-gas symbol
    :type symbol: str
    :return: Its Madelung configuration
    :rtype: Configuration
    :raises DomainError: If the symbol is not a noble gas
    """
    if symbol not in NOBLE_GASES:
        raise DomainError(f"unknown core symbol '{symbol}'")
    return fill(FillingRule.MADELUNG, NOBLE_GASES[symbol])


def _contains(c: Configuration, core: Configuration) -> bool:
    return all(c[o] >= count for o, count in core.occupations)


def noble_core(c: Configuration) -> str | None:
    """Largest noble-gas core contained in a configuration.

    The core must hold fewer electrons than the configuration itself, so
    krypton prints as ``[Ar] 3d10 4s2 4p6``.

    :param c: The configuration
    :type c: Configuration
    :return: Core symbol, or None when not even helium fits
    :rtype: str | None
    """
    best = None
    for symbol, z in NOBLE_GASES.items():
        if z < c.z and _contains(c, noble_core_configuration(symbol)):
            best = symbol
    return best


def parse_configuration(text: str) -> Configuration:
    """Read ASCII configuration notation.

    Accepts an optional leading noble-gas core, e.g. ``[Kr] 4d5 5s1``, or a
    fully explicit list such as ``1s2 2s2 2p3``.

    :param text: The notation
    :type text: str
    :return: The configuration with the core expanded
    :rtype: Configuration
    :raises ConfigurationParseError: On a malformed token, unknown core,
        repeated orbital or over-full orbital
    """
    counts: dict[Orbital, int] = {}
    tokens = list(re.finditer(r"\S+", text))
    if not tokens:
        raise ConfigurationParseError("empty configuration", 0)
    for index, match in enumerate(tokens):
        token, position = match.group(), match.start()
        core = CORE.fullmatch(token)
        if core:
            if index != 0:
                raise ConfigurationParseError("core must come first", position)
            if core.group(1) not in NOBLE_GASES:
                raise ConfigurationParseError(f"unknown core symbol '{core.group(1)}'", position)
            counts.update(noble_core_configuration(core.group(1)).as_dict())
            continue
        parts = TOKEN.fullmatch(token)
        if not parts:
            raise ConfigurationParseError(f"malformed token '{token}'", position)
        n, letter, count = int(parts.group(1)), parts.group(2), int(parts.group(3))
        try:
            orbital = Orbital.from_label(f"{n}{letter}")
        except DomainError as e:
            raise ConfigurationParseError(str(e), position)
        if orbital in counts:
            raise ConfigurationParseError(f"orbital {orbital} repeated", position)
        if not 1 <= count <= orbital.capacity:
            raise ConfigurationParseError(
                f"{orbital} holds 1..{orbital.capacity} electrons, got {count}", position
            )
        counts[orbital] = count
    return Configuration.from_counts(counts)


def format_configuration(
    c: Configuration, core: str | None = None, order: str = "standard"
) -> str:
    """Write a configuration in ASCII notation.

    ``order="standard"`` lists orbitals by (n, l), the way reference tables
    print them (``[Kr] 4d5 5s1``); ``order="madelung"`` lists them by
    (n + l, n).

    :param c: The configuration
    :type c: Configuration
    :param core: Optional noble-gas core to factor out
    :type core: str | None
    :param order: ``standard`` or ``madelung``
    :type order: str
    :return: The notation
    :rtype: str
    :raises DomainError: If the core is not contained in c or order is unknown
    """
    counts = c.as_dict()
    prefix = []
    if core is not None:
        core_config = noble_core_configuration(core)
        if not _contains(c, core_config):
            raise DomainError(f"core [{core}] is not contained in {format_configuration(c)}")
        for o, count in core_config.occupations:
            counts[o] -= count
        prefix = [f"[{core}]"]
    if order == "standard":
        key = lambda o: (o.n, o.l)
    elif order == "madelung":
        key = madelung_key
    else:
        raise DomainError(f"unknown orbital order '{order}'")
    body = [f"{o.label}{counts[o]}" for o in sorted(counts, key=key) if counts[o] > 0]
    return " ".join(prefix + body)


def strip_orbital(c: Configuration, orbital: Orbital) -> Configuration:
    """Remove every electron from one subshell.

    Stripping 4d from experimental molybdenum leaves the rubidium
    configuration; stripping 3d from chromium leaves potassium.

    :param c: The configuration
    :type c: Configuration
    :param orbital: The subshell to empty
    :type orbital: Orbital
    :return: The reduced configuration
    :rtype: Configuration
    :raises DomainError: If the subshell is empty or nothing would remain
    """
    counts = c.as_dict()
    if orbital not in counts:
        raise DomainError(f"{orbital} is not occupied")
    del counts[orbital]
    return Configuration.from_counts(counts)
