"""Long-form flag parsing and the validated run configuration.

Numbers are read in C-locale notation only: a period decimal separator,
no digit grouping, no ``nan`` or ``inf``.
"""

import os
import re
from dataclasses import dataclass, field
from typing import Mapping

from .Config import Config
from .Exceptions import InvalidArgumentsException, InvalidCommandException

__all__ = ["RunConfig", "parse_flags", "parse_int", "parse_float"]

INTEGER = re.compile(r"[+-]?\d+")
DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def parse_flags(tokens: list[str]) -> dict[str, str | None]:
    """Collect ``--name value`` and ``--name=value`` pairs.

    A flag followed by another flag, or by nothing, is a bare switch and maps
    to None. Values may be empty or start with a single minus sign.

    Example:
        ``["--z", "42", "--classify"]`` gives ``{"z": "42", "classify": None}``

    :param tokens: Arguments after the command name
    :type tokens: list[str]
    :return: Raw flag values by flag name
    :rtype: dict[str, str | None]
    :raises InvalidArgumentsException: On a positional argument, a short flag
        or a repeated flag
    """
    flags: dict[str, str | None] = {}
    position = 0
    while position < len(tokens):
        token = tokens[position]
        if not token.startswith("--") or len(token) == 2:
            raise InvalidArgumentsException(
                f"unexpected argument '{token}' (flags are long-form: --name value)"
            )
        name, value = token[2:], None
        position += 1
        if "=" in name:
            name, value = name.split("=", 1)
        elif position < len(tokens) and not tokens[position].startswith("--"):
            value = tokens[position]
            position += 1
        if name in flags:
            raise InvalidArgumentsException(f"flag --{name} given twice")
        flags[name] = value
    return flags


def parse_int(name: str, text: str) -> int:
    if not INTEGER.fullmatch(text.strip()):
        raise InvalidArgumentsException(f"--{name} expects an integer, got '{text}'")
    return int(text)


def parse_float(name: str, text: str) -> float:
    if not DECIMAL.fullmatch(text.strip()):
        raise InvalidArgumentsException(
            f"--{name} expects a number with a period decimal separator, got '{text}'"
        )
    return float(text)


def _items(name: str, text: str) -> list[str]:
    items = [item.strip() for item in text.split(",")]
    if not text.strip() or any(not item for item in items):
        raise InvalidArgumentsException(f"--{name} expects a comma-separated list, got '{text}'")
    return items


def _convert(name: str, kind: str, text: str | None):
    if kind == "switch":
        if text is not None:
            raise InvalidArgumentsException(f"--{name} is a switch and takes no value")
        return True
    if text is None:
        raise InvalidArgumentsException(f"--{name} needs a value")
    if kind == "int":
        return parse_int(name, text)
    if kind == "float":
        return parse_float(name, text)
    if kind == "ints":
        return [parse_int(name, item) for item in _items(name, text)]
    if kind == "floats":
        return [parse_float(name, item) for item in _items(name, text)]
    return text


@dataclass(frozen=True)
class RunConfig:
    """A validated command invocation.

    :ivar command: Command name
    :type command: str
    :ivar parameters: Converted flag values keyed by Python name
        (``n-r`` becomes ``n_r``), defaults filled in
    :type parameters: dict
    :ivar output_format: ``json`` or ``csv``
    :type output_format: str
    :ivar dataset_path: Element dataset; None selects the bundled one and
        an empty string disables dataset access
    :type dataset_path: str | None
    """

    command: str
    parameters: dict = field(default_factory=dict)
    output_format: str = Config.values["DEFAULT_FORMAT"]
    dataset_path: str | None = None

    @classmethod
    def build(
        cls, command: str, flags: Mapping[str, str | None], environ: Mapping[str, str] | None = None
    ) -> "RunConfig":
        """Validate raw flags against the command's schema.

        :param command: Command name
        :type command: str
        :param flags: Output of :func:`parse_flags`
        :type flags: Mapping[str, str | None]
        :param environ: Environment consulted for the dataset override,
            ``os.environ`` by default
        :type environ: Mapping[str, str] | None
        :return: The configuration
        :rtype: RunConfig
        :raises InvalidCommandException: For an unknown command
        :raises InvalidArgumentsException: For an unknown, missing or
            malformed flag
        """
        schemas = Config.values["COMMANDS"]
        if command not in schemas:
            raise InvalidCommandException(
                f"unknown command '{command}' (expected one of {', '.join(schemas)})"
            )
        environ = os.environ if environ is None else environ
        schema = schemas[command]
        flags = dict(flags)
        output_format = flags.pop("format", Config.values["DEFAULT_FORMAT"])
        if output_format not in Config.values["FORMATS"]:
            raise InvalidArgumentsException(
                f"--format must be one of {', '.join(Config.values['FORMATS'])}, got '{output_format}'"
            )
        unknown = sorted(set(flags) - set(schema))
        if unknown:
            raise InvalidArgumentsException(
                f"unknown flag(s) for {command}: {', '.join('--' + name for name in unknown)}"
            )
        parameters = {}
        for name, spec in schema.items():
            if name in flags:
                value = _convert(name, spec["type"], flags[name])
            elif "default" in spec:
                value = spec["default"]
            else:
                raise InvalidArgumentsException(f"{command} needs --{name}")
            parameters[name.replace("-", "_")] = value
        dataset_path = parameters.pop("dataset_path", None)
        if "dataset-path" in schema and Config.values["ENV_DATASET"] in environ:
            dataset_path = environ[Config.values["ENV_DATASET"]]
        return cls(command, parameters, output_format, dataset_path)
