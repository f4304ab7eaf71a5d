"""Command dispatch, exit statuses and the console entry points."""

import logging
import os
import sys
from typing import TextIO

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from errors import DomainError, SolverError
from fock import PairingModel, exact_ground_state
from pairing import (
    BdGBlock,
    bcs_quasiparticle,
    bdg_eigen,
    cooper_pair_energy,
    richardson_solve,
)
from shells import (
    FillingRule,
    Orbital,
    Status,
    classify,
    classify_all,
    dataset_metadata,
    fill,
    filling_order,
    format_configuration,
    load_elements,
    madelung_key,
    noble_core,
    period_lengths,
)
from spectra import (
    Config as SpectraConfig,
    RelativisticLevel,
    coulomb_to_fisheye,
    dirac_binding_energy,
    dirac_energy,
    dirac_energy_bisection,
    effective_principal,
    fine_structure_expansion,
    gamma_kappa,
    hydrogen_energy,
    kappa_decode,
    l_of_gamma_kappa,
    madelung_energy,
    radial_map,
    scan_sign_changes,
    sw_discreteness_scan,
)

from .Config import Config
from .Exceptions import InvalidCommandException
from .Flags import RunConfig, parse_flags
from .Report import Report
from .Verify import FAIL, PASS, SKIP, verify_all

__all__ = ["Run", "run", "execute", "configure_logging", "cmd", "umbrella"]

load_dotenv()

console = Console(stderr=True)
logger = logging.getLogger(__name__)


def configure_logging() -> None:
    """Route library logging to standard error through rich."""
    level = os.getenv(Config.values["ENV_LOG_LEVEL"], "WARNING").upper()
    logging.basicConfig(
        level=level if isinstance(logging.getLevelName(level), int) else "WARNING",
        format="%(message)s",
        handlers=[RichHandler(console=console, show_time=False, show_path=False)],
        force=True,
    )


def _configuration_entry(c) -> dict:
    return {
        "notation": format_configuration(c, core=noble_core(c)),
        "orbitals": [
            {"orbital": str(o), "n": o.n, "l": o.l, "electrons": count}
            for o, count in sorted(c.occupations, key=lambda item: madelung_key(item[0]))
        ],
    }


def _classification_entry(z: int, symbol: str, classification, record) -> dict:
    predicted = fill(FillingRule.MADELUNG, z)
    return {
        "z": z,
        "symbol": symbol,
        "status": classification.status,
        "predicted": format_configuration(predicted, core=noble_core(predicted)),
        "experimental": format_configuration(
            record.experimental, core=noble_core(record.experimental)
        ),
        "diff": [
            {"orbital": str(d.orbital), "predicted": d.predicted, "experimental": d.experimental}
            for d in classification.diff
        ],
    }


class Run:
    """One command execution, dispatched on the command name.

    :ivar config: The validated invocation
    :type config: RunConfig
    """

    def __init__(self, config: RunConfig):
        """Initialize with a validated configuration.

        :param config: The invocation
        :type config: RunConfig
        """
        self.config = config
        self.parameters = config.parameters
        self.warnings: list[str] = []

    def __call__(self) -> Report:
        """Compute the command's report.

        :return: The report
        :rtype: Report
        :raises DomainError: On invalid input
        :raises SolverError: On a numerical failure
        """
        results = getattr(self, f"_Run__{self.config.command}")()
        ok = results.pop("_ok", True)
        inputs = dict(self.parameters)
        if "dataset-path" in Config.values["COMMANDS"][self.config.command]:
            inputs["dataset_path"] = self.config.dataset_path
        return Report(self.config.command, inputs, results, self.warnings, ok)

    def __dataset(self):
        if self.config.dataset_path == "":
            raise DomainError("this command needs the element dataset; the dataset path is empty")
        return load_elements(self.config.dataset_path)

    def __alpha(self) -> float:
        alpha = self.parameters.get("alpha")
        return SpectraConfig.values["ALPHA"] if alpha is None else alpha

    def __aufbau(self) -> dict:
        rule = FillingRule.parse(self.parameters["rule"])
        predicted = fill(rule, self.parameters["z"])
        results = {"rule": rule, "predicted": _configuration_entry(predicted)}
        if self.parameters["classify"]:
            if rule is not FillingRule.MADELUNG:
                self.warnings.append("classification compares the Madelung filling, not the requested rule")
            dataset = self.__dataset()
            z = self.parameters["z"]
            record = next((r for r in dataset if r.z == z), None)
            classification = classify(z, dataset)
            results["classification"] = _classification_entry(z, record.symbol, classification, record)
        return results

    def __classify(self) -> dict:
        dataset = self.__dataset()
        by_z = {record.z: record for record in dataset}
        z = self.parameters["z"]
        if z is None:
            table = classify_all(dataset)
        else:
            classification = classify(z, dataset)
            table = [(z, by_z[z].symbol, classification)]
        elements = [_classification_entry(z, symbol, c, by_z[z]) for z, symbol, c in table]
        return {
            "elements": elements,
            "exceptional": sum(e["status"] is Status.EXCEPTIONAL for e in elements),
            "metadata": dataset_metadata(self.config.dataset_path),
        }

    def __spectrum(self) -> dict:
        z, n_max = self.parameters["z"], self.parameters["n_max"]
        if not 1 <= n_max <= 8:
            raise DomainError(f"--n-max must lie in 1..8, got {n_max}")
        rows = []
        for n in range(1, n_max + 1):
            for l in range(n):
                orbital, n_r = Orbital(n, l), n - l - 1
                hydrogen = hydrogen_energy(z, n_r, l).value
                rows.append(
                    (orbital, {
                        "orbital": str(orbital),
                        "n_r": n_r,
                        "l": l,
                        "hydrogen_hartree": hydrogen,
                        "madelung_hartree": madelung_energy(z, n_r, l).value,
                        "fisheye_beta": coulomb_to_fisheye(z, hydrogen),
                    })
                )
        levels = [entry for _, entry in sorted(rows, key=lambda row: madelung_key(row[0]))]
        count = n_max * (n_max + 1) // 2
        return {
            "levels": levels,
            "madelung_order": [str(o) for o in filling_order(FillingRule.MADELUNG, count)],
            "period_lengths": period_lengths(FillingRule.MADELUNG, n_max),
        }

    def __dirac(self) -> dict:
        p = self.parameters
        level = RelativisticLevel(p["n_r"], p["kappa"], p["z"], self.__alpha())
        l, j = kappa_decode(level.kappa)
        n_tilde = level.n_r + l + 1
        results = {
            "l": l,
            "j": j,
            "gamma_kappa": gamma_kappa(level),
            "l_gamma_kappa": l_of_gamma_kappa(level),
            "effective_principal": effective_principal(level),
            "energy_rest_mass": dirac_energy(level).value,
            "bisection_rest_mass": dirac_energy_bisection(level).value,
            "binding_hartree": dirac_binding_energy(level).value,
            "hydrogen_hartree": hydrogen_energy(level.z, level.n_r, l).value,
            "expansion_rest_mass": fine_structure_expansion(level.z, n_tilde, j, level.alpha).value,
            "radial_map": None,
        }
        if level.alpha > 0:
            m = radial_map(level)
            results["radial_map"] = {"mu": m.mu, "rho": m.rho, "omega": m.omega}
        else:
            self.warnings.append("alpha = 0: no radial map")
        return results

    def __richardson(self) -> dict:
        p = self.parameters
        degeneracies = p["degeneracies"] or [1] * len(p["levels"])
        model = PairingModel.from_lists(p["levels"], degeneracies, p["g"])
        solution = richardson_solve(model, p["pairs"])
        results = {
            "pair_energies": list(solution.pair_energies),
            "total_energy": solution.total_energy,
            "residual": solution.residual,
            "steps": solution.steps,
            "pole_distance": solution.pole_distance,
            "exact": None,
            "cooper_pair_energy": None,
        }
        if len(model.expanded()) <= Config.values["ORACLE_MAX_SUBLEVELS"]:
            exact, dimension = exact_ground_state(model, p["pairs"])
            results["exact"] = {
                "energy": exact,
                "sector_dimension": dimension,
                "relative_difference": abs(solution.total_energy - exact) / max(1.0, abs(exact)),
            }
        else:
            self.warnings.append("model too large for the exact diagonalization check")
        if p["pairs"] == 1 and model.g > 0:
            results["cooper_pair_energy"] = cooper_pair_energy(model)
        return results

    def __bdg(self) -> dict:
        eigen = bdg_eigen(BdGBlock(self.parameters["epsilon"], self.parameters["delta"]))
        return {
            "e_plus": eigen.e_plus,
            "e_minus": eigen.e_minus,
            "u": eigen.u,
            "v": eigen.v,
            "quasiparticle_energy": bcs_quasiparticle(self.parameters["epsilon"], self.parameters["delta"]),
        }

    def __verify(self) -> dict:
        properties = verify_all(self.config.dataset_path)
        summary = {status: sum(r.status == status for r in properties) for status in (PASS, FAIL, SKIP)}
        for result in properties:
            if result.status == SKIP:
                self.warnings.append(f"{result.name} skipped: {result.message}")
        return {
            "properties": [r.as_dict() for r in properties],
            "summary": summary,
            "_ok": summary[FAIL] == 0,
        }

    def __swscan(self) -> dict:
        p = self.parameters
        points = sw_discreteness_scan(p["n_r"], p["l"], p["kappa"], p["z_max"], self.__alpha())
        undefined = [point.z for point in points if point.margin is None]
        if undefined:
            self.warnings.append(f"supercritical for Z >= {undefined[0]}: margin undefined")
        return {
            "points": [{"z": point.z, "margin": point.margin} for point in points],
            "sign_changes": scan_sign_changes(points),
        }


def _fail(message: str) -> None:
    console.print(f"[bold red]error:[/bold red] {escape(message)}")


def run(config: RunConfig, stream: TextIO | None = None) -> int:
    """Execute a command and write its report.

    :param config: The invocation
    :type config: RunConfig
    :param stream: Where the report goes, standard output by default
    :type stream: TextIO | None
    :return: 0 on success, 1 on a domain error or a failed check, 2 on a
        solver error
    :rtype: int
    """
    try:
        report = Run(config)()
    except SolverError as e:
        _fail(f"solver error: {e}")
        return 2
    except (DomainError, LookupError, OSError) as e:
        _fail(str(e))
        return 1
    (stream or sys.stdout).write(report.serialize(config.output_format))
    return 0 if report.ok else 1


def execute(argv: list[str], stream: TextIO | None = None) -> int:
    """Parse ``command --flag value ...`` and run it.

    :param argv: Command name followed by its flags
    :type argv: list[str]
    :param stream: Where the report goes
    :type stream: TextIO | None
    :return: The exit status
    :rtype: int
    """
    configure_logging()
    try:
        if not argv:
            raise InvalidCommandException(
                f"a command is required (one of {', '.join(Config.values['COMMANDS'])})"
            )
        config = RunConfig.build(argv[0], parse_flags(argv[1:]))
    except DomainError as e:
        _fail(str(e))
        return 1
    logger.debug("running %s with %s", config.command, config.parameters)
    return run(config, stream)


def cmd():
    """Command entry point for the per-command scripts.

    The script name selects the command, so ``aufbau --z 42`` runs
    ``aufbau``.

    :raises SystemExit: Always, with the run's exit status
    """
    command = os.path.splitext(os.path.basename(sys.argv[0]))[0]
    sys.exit(execute([command] + sys.argv[1:]))


def umbrella():
    """Command entry point for ``madelung <command> ...``.

    :raises SystemExit: Always, with the run's exit status
    """
    sys.exit(execute(sys.argv[1:]))
