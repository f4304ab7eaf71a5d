"""The invariant suite behind the ``verify`` command.

Each property measures one quantity and compares it with a tolerance.
Randomized properties draw from their own generator seeded with
``VERIFY_SEED``, so reports are identical from run to run.
"""

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

import numpy as np

from errors import DomainError, SolverError
from fock import (
    PairingModel,
    bogoliubov_check,
    build_space,
    car_check,
    clifford_relations_check,
    commutator,
    exact_ground_state,
    exterior_sign_check,
    full_spectrum,
    max_deviation,
    pair_commutators_check,
    pairing_hamiltonian,
    seniority,
    spectrum_by_sectors,
    total_number,
)
from pairing import (
    BdGBlock,
    bcs_quasiparticle,
    bdg_eigen,
    cooper_pair_energy,
    gap_self_consistent,
    richardson_solve,
    single_level_energy,
)
from shells import (
    ALL_ORBITALS,
    MAX_Z,
    Configuration,
    FillingRule,
    Status,
    classify,
    classify_all,
    fill,
    filling_order,
    format_configuration,
    load_elements,
    noble_core,
    parse_configuration,
    period_lengths,
)
from spectra import (
    RelativisticLevel,
    dirac_binding_energy,
    dirac_energy,
    dirac_energy_bisection,
    fine_structure_expansion,
    gegenbauer_residual,
    hydrogen_energy,
    kappa_decode,
    madelung_energy,
    scan_sign_changes,
    sw_discreteness_scan,
)

from .Config import Config
from .Flags import RunConfig
from .Report import Report, flatten

__all__ = ["PropertyResult", "Measurement", "verify_all", "PROPERTIES"]

logger = logging.getLogger(__name__)

PASS, FAIL, SKIP = "pass", "fail", "skip"

EXEMPLARS = {24: "Cr", 29: "Cu", 41: "Nb", 42: "Mo", 44: "Ru", 45: "Rh", 46: "Pd", 57: "La", 90: "Th"}


@dataclass(frozen=True)
class Measurement:
    """What a property measured, the bound it was held to, and the verdict."""

    measured: float
    tolerance: float | None
    passed: bool
    message: str = ""


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of one property.

    :ivar name: ``package.property``
    :type name: str
    :ivar status: ``pass``, ``fail`` or ``skip``
    :type status: str
    :ivar measured: The measured quantity, None when skipped or errored
    :type measured: float | None
    :ivar tolerance: The bound it was held to; None for pure sign checks
    :type tolerance: float | None
    :ivar message: What was measured, or why the property failed or was skipped
    :type message: str
    """

    name: str
    status: str
    measured: float | None
    tolerance: float | None
    message: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "message": self.message,
        }


@dataclass
class Context:
    dataset: list | None = None
    dataset_error: str | None = None
    skip_dataset: bool = False
    cache: dict = field(default_factory=dict)

    def rng(self, name: str) -> np.random.Generator:
        return np.random.default_rng([Config.values["VERIFY_SEED"], sum(map(ord, name))])


PROPERTIES: list[tuple[str, bool, Callable[[Context], Measurement]]] = []


def _property(name: str, needs_dataset: bool = False):
    def register(check: Callable[[Context], Measurement]):
        PROPERTIES.append((name, needs_dataset, check))
        return check

    return register


def _bounded(measured: float, tolerance: float, message: str = "") -> Measurement:
    return Measurement(float(measured), tolerance, bool(measured <= tolerance), message)


# shells


@_property("shells.fill_electron_count")
def _fill_electron_count(ctx: Context) -> Measurement:
    violations = 0
    for rule in FillingRule:
        for z in range(1, MAX_Z + 1):
            c = fill(rule, z)
            violations += c.z != z
            violations += sum(count > o.capacity for o, count in c.occupations)
    return _bounded(violations, 0, "fills with a wrong electron count or an over-full orbital")


@_property("shells.fill_monotone")
def _fill_monotone(ctx: Context) -> Measurement:
    violations = 0
    for rule in FillingRule:
        previous = fill(rule, 1).as_dict()
        for z in range(2, MAX_Z + 1):
            current = fill(rule, z).as_dict()
            steps = [current.get(o, 0) - previous.get(o, 0) for o in set(current) | set(previous)]
            violations += sorted(s for s in steps if s) != [1]
            previous = current
    return _bounded(violations, 0, "steps z -> z + 1 that do not add exactly one electron")


@_property("shells.madelung_total_order")
def _madelung_total_order(ctx: Context) -> Measurement:
    violations = 0
    for a, b in combinations(ALL_ORBITALS, 2):
        violations += (a < b) == (b < a)
    for a, b, c in combinations(sorted(ALL_ORBITALS), 3):
        violations += not (a < b and b < c and a < c)
    return _bounded(violations, 0, f"order violations over {len(ALL_ORBITALS)} orbitals with n <= 8")


@_property("shells.fock_matches_hydrogenic")
def _fock_matches_hydrogenic(ctx: Context) -> Measurement:
    count = len(ALL_ORBITALS)
    fock_n = filling_order(FillingRule.FOCK_N, count)
    hydrogenic = filling_order(FillingRule.HYDROGENIC_NL, count)
    return _bounded(sum(a != b for a, b in zip(fock_n, hydrogenic)), 0, "positions where the orders differ")


@_property("shells.period_lengths")
def _period_lengths(ctx: Context) -> Measurement:
    lengths = period_lengths(FillingRule.MADELUNG, 8)
    expected = [2, 2, 8, 8, 18, 18, 32, 32]
    return _bounded(sum(a != b for a, b in zip(lengths, expected)), 0, f"lengths {lengths}")


@_property("shells.notation_roundtrip")
def _notation_roundtrip(ctx: Context) -> Measurement:
    rng = ctx.rng("shells.notation_roundtrip")
    mismatches = 0
    for _ in range(500):
        picked = rng.choice(len(ALL_ORBITALS), size=int(rng.integers(1, 8)), replace=False)
        counts = {}
        for index in picked:
            orbital = ALL_ORBITALS[int(index)]
            counts[orbital] = int(rng.integers(1, orbital.capacity + 1))
        c = Configuration.from_counts(counts)
        for order in ("standard", "madelung"):
            mismatches += parse_configuration(format_configuration(c, order=order)) != c
        core = noble_core(c)
        if core is not None:
            mismatches += parse_configuration(format_configuration(c, core=core)) != c
    for z in range(1, MAX_Z + 1):
        c = fill(FillingRule.MADELUNG, z)
        mismatches += parse_configuration(format_configuration(c, core=noble_core(c))) != c
    return _bounded(mismatches, 0, "configurations that do not survive format then parse")


@_property("shells.classify_consistency", needs_dataset=True)
def _classify_consistency(ctx: Context) -> Measurement:
    mismatches = 0
    for z, symbol, classification in classify_all(ctx.dataset):
        record = next(r for r in ctx.dataset if r.z == z)
        equal = fill(FillingRule.MADELUNG, z).as_dict() == record.experimental.as_dict()
        mismatches += equal != (classification.status is Status.REGULAR)
    return _bounded(mismatches, 0, f"{len(ctx.dataset)} records; regular must mean predicted == experimental")


@_property("shells.classify_exemplars", needs_dataset=True)
def _classify_exemplars(ctx: Context) -> Measurement:
    failures = []
    for z, symbol in EXEMPLARS.items():
        if classify(z, ctx.dataset).status is not Status.EXCEPTIONAL:
            failures.append(symbol)
    mo = [(str(d.orbital), d.predicted, d.experimental) for d in classify(42, ctx.dataset).diff]
    if mo != [("5s", 2, 1), ("4d", 4, 5)]:
        failures.append(f"Mo diff {mo}")
    message = "not flagged: " + ", ".join(failures) if failures else "Cr Cu Nb Mo Ru Rh Pd La Th exceptional"
    return _bounded(len(failures), 0, message)


# spectra


@_property("spectra.hydrogen_ground_state")
def _hydrogen_ground_state(ctx: Context) -> Measurement:
    return _bounded(abs(hydrogen_energy(1, 0, 0).value + 0.5), 0.0, "Z = 1 ground state against -1/2 hartree")


@_property("spectra.alpha_continuity")
def _alpha_continuity(ctx: Context) -> Measurement:
    scaled, errors = [], []
    for alpha in (1e-2, 1e-3, 1e-4):
        worst = 0.0
        for n_r in range(4):
            for kappa in (-4, -3, -2, -1, 1, 2, 3, 4):
                l, _ = kappa_decode(kappa)
                exact = hydrogen_energy(1, n_r, l).value
                binding = dirac_binding_energy(RelativisticLevel(n_r, kappa, 1, alpha)).value
                worst = max(worst, abs(binding - exact) / abs(exact))
        errors.append(worst)
        scaled.append(worst / alpha ** 2)
    shrinking = all(b < a for a, b in zip(errors, errors[1:]))
    measured = max(scaled)
    return Measurement(
        measured,
        5.0,
        measured <= 5.0 and shrinking,
        "largest relative error over alpha^2 at alpha in {1e-2, 1e-3, 1e-4}, Z = 1",
    )


@_property("spectra.expansion_consistency")
def _expansion_consistency(ctx: Context) -> Measurement:
    worst = 0.0
    for z in range(1, 41):
        for n_tilde in range(1, 5):
            for twice_j in range(1, 2 * n_tilde, 2):
                j = Fraction(twice_j, 2)
                kappa = -(twice_j + 1) // 2
                n_r = n_tilde - (twice_j + 1) // 2
                level = RelativisticLevel(n_r, kappa, z)
                gap = abs(fine_structure_expansion(z, n_tilde, j).value - dirac_energy(level).value)
                worst = max(worst, gap / (10.0 * (level.alpha * z) ** 6))
    return _bounded(worst, 1.0, "largest |expansion - exact| in units of 10 (alpha Z)^6, Z <= 40, n~ <= 4")


@_property("spectra.level_degeneracies")
def _level_degeneracies(ctx: Context) -> Measurement:
    worst = 0.0
    for z in (1, 3, 26):
        hydrogen, madelung = {}, {}
        for n_r in range(7):
            for l in range(7):
                hydrogen.setdefault(n_r + l + 1, set()).add(hydrogen_energy(z, n_r, l).value)
                madelung.setdefault(n_r + 2 * l + 1, set()).add(madelung_energy(z, n_r, l).value)
        for group in list(hydrogen.values()) + list(madelung.values()):
            worst = max(worst, max(group) - min(group))
        for n_r in range(6):
            for k in range(1, 7):
                lower = dirac_energy(RelativisticLevel(n_r + 1, -k, z)).value
                upper = dirac_energy(RelativisticLevel(n_r, k, z)).value
                worst = max(worst, abs(lower - upper))
    split = abs(dirac_energy(RelativisticLevel(0, 1, 1)).value - dirac_energy(RelativisticLevel(0, -2, 1)).value)
    return Measurement(
        worst,
        0.0,
        worst == 0.0 and split > 0.0,
        f"spread within degenerate groups; j-splitting at n~ = 2 is {split:.3e}",
    )


@_property("spectra.bound_window")
def _bound_window(ctx: Context) -> Measurement:
    violations = checked = 0
    for z in range(1, 138):
        for kappa in (-3, -2, -1, 1, 2, 3):
            for n_r in range(4):
                try:
                    level = RelativisticLevel(n_r, kappa, z)
                except DomainError:
                    continue
                e = dirac_energy(level).value
                checked += 1
                violations += not 0.0 < e < 1.0
    return _bounded(violations, 0, f"{checked} levels checked for 0 < E/mc^2 < 1")


@_property("spectra.gegenbauer")
def _gegenbauer(ctx: Context) -> Measurement:
    worst = max(gegenbauer_residual(n, l, 64) for n in range(11) for l in range(11))
    return _bounded(worst, 1e-10, "largest residual for n, l <= 10")


@_property("spectra.bisection_oracle")
def _bisection_oracle(ctx: Context) -> Measurement:
    rng = ctx.rng("spectra.bisection_oracle")
    worst, sampled = 0.0, 0
    while sampled < 50:
        z = int(rng.integers(1, 101))
        kappa = int(rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]))
        n_r = int(rng.integers(0, 6))
        try:
            level = RelativisticLevel(n_r, kappa, z)
        except DomainError:
            continue
        exact = dirac_energy(level).value
        worst = max(worst, abs(dirac_energy_bisection(level).value - exact) / exact)
        sampled += 1
    return _bounded(worst, 1e-12, "largest relative difference over 50 sampled levels")


@_property("spectra.sw_scan_alpha_zero")
def _sw_scan_alpha_zero(ctx: Context) -> Measurement:
    worst = 0.0
    for n_r, l, kappa in ((0, 0, -1), (1, 1, 1), (2, 0, -2)):
        margins = [p.margin for p in sw_discreteness_scan(n_r, l, kappa, 137, alpha=0.0)]
        worst = max(worst, max(margins) - min(margins))
    return _bounded(worst, 1e-10, "largest spread of the margin over Z = 1..137")


@_property("spectra.sw_scan_finite")
def _sw_scan_finite(ctx: Context) -> Measurement:
    increases, changes = 0, []
    for n_r, l, kappa in ((0, 0, -1), (1, 1, 1), (2, 0, -2)):
        points = sw_discreteness_scan(n_r, l, kappa, 137)
        margins = [p.margin for p in points if p.margin is not None]
        increases += sum(b > a for a, b in zip(margins, margins[1:]))
        changes.extend(scan_sign_changes(points))
    return _bounded(increases, 0, f"margin increases with Z; {len(changes)} sign changes found")


# fock


def _algebra(reports) -> tuple[float, bool]:
    reports = list(reports)
    return max(r.worst for r in reports), all(r.passed for r in reports)


@_property("fock.car_exact")
def _car_exact(ctx: Context) -> Measurement:
    worst, passed = _algebra(car_check(build_space(L)) for L in range(1, 5))
    return Measurement(worst, 0.0, passed, "CAR deviations for L <= 4")


@_property("fock.car_large")
def _car_large(ctx: Context) -> Measurement:
    worst, passed = _algebra(car_check(build_space(L)) for L in (5, 6))
    return Measurement(worst, 1e-12, passed and worst <= 1e-12, "CAR deviations for L = 5, 6")


@_property("fock.clifford_relations")
def _clifford_relations(ctx: Context) -> Measurement:
    worst, passed = _algebra(clifford_relations_check(build_space(L)) for L in range(1, 5))
    return Measurement(worst, 0.0, passed, "auxiliary and mixed-signature relations for L <= 4")


@_property("fock.pair_commutators")
def _pair_commutators(ctx: Context) -> Measurement:
    worst, passed = _algebra(pair_commutators_check(build_space(L)) for L in range(1, 5))
    return Measurement(worst, 0.0, passed, "hard-core boson relations of b_f for L <= 4")


def _random_uniform_model(rng: np.random.Generator, L: int) -> PairingModel:
    energies = np.sort(rng.uniform(-2.0, 2.0, size=L))
    return PairingModel.from_lists(energies, [1] * L, float(rng.uniform(0.1, 1.0)))


@_property("fock.hamiltonian_symmetries")
def _hamiltonian_symmetries(ctx: Context) -> Measurement:
    rng = ctx.rng("fock.hamiltonian_symmetries")
    worst = 0.0
    for _ in range(20):
        L = int(rng.integers(1, 5))
        space = build_space(L)
        h = pairing_hamiltonian(space, _random_uniform_model(rng, L))
        worst = max(worst, max_deviation(commutator(h, total_number(space))))
        for f in range(L):
            worst = max(worst, max_deviation(commutator(h, seniority(space, f))))
    return _bounded(worst, 0.0, "[H, N] and [H, nu_f] over 20 random models, L <= 4")


@_property("fock.sector_union")
def _sector_union(ctx: Context) -> Measurement:
    rng = ctx.rng("fock.sector_union")
    worst = 0.0
    for L in (1, 2, 3):
        for _ in range(3):
            model = _random_uniform_model(rng, L)
            full = full_spectrum(build_space(L), model)
            worst = max(worst, float(np.max(np.abs(full - spectrum_by_sectors(model)))))
    return _bounded(worst, 1e-10, "full spectrum against the union of sector spectra, L <= 3")


@_property("fock.exterior_algebra")
def _exterior_algebra(ctx: Context) -> Measurement:
    worst, passed = _algebra(exterior_sign_check(build_space(L)) for L in (1, 2, 3))
    return Measurement(worst, 0.0, passed, "creation operators against exterior multiplication")


@_property("fock.bogoliubov")
def _bogoliubov(ctx: Context) -> Measurement:
    angles = (0.0, 0.3, math.pi / 4, 1.2, math.pi / 2)
    worst, passed = _algebra(bogoliubov_check(math.cos(t), math.sin(t)) for t in angles)
    return Measurement(worst, 1e-12, passed, "fermion algebra of Bogoliubov quasiparticles")


# pairing


@_property("pairing.cooper_oracle")
def _cooper_oracle(ctx: Context) -> Measurement:
    model = PairingModel.from_lists([0.0, 1.0], [1, 1], 0.5)
    energy = cooper_pair_energy(model)
    exact, _ = exact_ground_state(model, 1)
    worst = max(abs(energy - (1.0 - math.sqrt(5.0)) / 2.0), abs(energy - exact))
    return _bounded(worst, 1e-9, "eps = {0, 1}, g = 1/2 against (1 - sqrt 5)/2 and diagonalization")


@_property("pairing.single_level")
def _single_level(ctx: Context) -> Measurement:
    worst = 0.0
    for omega in range(1, 5):
        for k in range(omega + 1):
            model = PairingModel(((0.25, omega),), 0.3)
            exact, _ = exact_ground_state(model, k)
            worst = max(worst, abs(single_level_energy(0.25, omega, k, 0.3) - exact))
    return _bounded(worst, 1e-10, "closed form against diagonalization, omega <= 4")


def _random_pairing_model(rng: np.random.Generator) -> tuple[PairingModel, int]:
    count = int(rng.integers(1, 5))
    degeneracies = []
    for _ in range(count):
        if sum(degeneracies) >= 6:
            break
        degeneracies.append(int(rng.integers(1, min(2, 6 - sum(degeneracies)) + 1)))
    energies = float(rng.uniform(-1.0, 1.0)) + np.cumsum(rng.uniform(0.5, 1.5, size=len(degeneracies)))
    model = PairingModel.from_lists(energies, degeneracies, float(rng.uniform(0.01, 0.06)))
    return model, int(rng.integers(1, min(3, model.capacity) + 1))


def _richardson_sweep(ctx: Context) -> dict:
    if "richardson" not in ctx.cache:
        rng = ctx.rng("pairing.richardson")
        error = residual = closure = 0.0
        pole = math.inf
        for _ in range(100):
            model, n_pairs = _random_pairing_model(rng)
            solution = richardson_solve(model, n_pairs)
            exact, _ = exact_ground_state(model, n_pairs)
            error = max(error, abs(solution.total_energy - exact) / max(1.0, abs(exact)))
            residual = max(residual, solution.residual)
            pole = min(pole, solution.pole_distance)
            closure = max(closure, solution.closure_defect)
        ctx.cache["richardson"] = {"error": error, "residual": residual, "pole": pole, "closure": closure}
    return ctx.cache["richardson"]


@_property("pairing.richardson_oracle")
def _richardson_oracle(ctx: Context) -> Measurement:
    sweep = _richardson_sweep(ctx)
    return _bounded(sweep["error"], 1e-8, "relative gap to exact diagonalization over 100 random models")


@_property("pairing.richardson_residual")
def _richardson_residual(ctx: Context) -> Measurement:
    sweep = _richardson_sweep(ctx)
    return _bounded(sweep["residual"], 1e-10, "largest residual over 100 random models")


@_property("pairing.pole_avoidance")
def _pole_avoidance(ctx: Context) -> Measurement:
    sweep = _richardson_sweep(ctx)
    return Measurement(sweep["pole"], 1e-12, sweep["pole"] > 1e-12, "smallest distance from a pair energy to any 2 eps")


def _strong_coupling_models() -> list[tuple[PairingModel, int]]:
    ladder = PairingModel.from_lists(np.arange(6.0), [1] * 6, 1.0)
    square = PairingModel.from_lists(np.arange(4.0), [1] * 4, 1.0)
    return [(ladder, 3), (square, 2), (square.with_coupling(2.0), 2), (square.with_coupling(5.0), 2)]


@_property("pairing.richardson_strong_coupling")
def _richardson_strong_coupling(ctx: Context) -> Measurement:
    worst = 0.0
    for model, n_pairs in _strong_coupling_models():
        solution = richardson_solve(model, n_pairs)
        exact, _ = exact_ground_state(model, n_pairs)
        worst = max(worst, abs(solution.total_energy - exact) / max(1.0, abs(exact)))
    return _bounded(worst, 1e-8, "relative gap to diagonalization past the first pair collision")


@_property("pairing.conjugation_closure")
def _conjugation_closure(ctx: Context) -> Measurement:
    worst = _richardson_sweep(ctx)["closure"]
    for model, n_pairs in _strong_coupling_models():
        worst = max(worst, richardson_solve(model, n_pairs).closure_defect)
    return _bounded(worst, 1e-8, "worst conjugate mismatch over every continuation step")


def _bdg_samples(ctx: Context, name: str):
    rng = ctx.rng(name)
    return rng.uniform(-10.0, 10.0, size=(1000, 2))


@_property("pairing.bdg_eigenpairs")
def _bdg_eigenpairs(ctx: Context) -> Measurement:
    worst = 0.0
    for epsilon, delta in _bdg_samples(ctx, "pairing.bdg_eigenpairs"):
        block = BdGBlock(float(epsilon), float(delta))
        eigen = bdg_eigen(block)
        m = block.matrix()
        plus = np.array([eigen.u, eigen.v])
        minus = np.array([-eigen.v, eigen.u])
        scale = max(1.0, eigen.e_plus)
        worst = max(
            worst,
            float(np.max(np.abs(m @ plus - eigen.e_plus * plus))) / scale,
            float(np.max(np.abs(m @ minus - eigen.e_minus * minus))) / scale,
            abs(eigen.e_plus - math.sqrt(epsilon * epsilon + delta * delta)) / scale,
        )
    return _bounded(worst, 1e-12, "eigen-equation residual over 1000 random blocks")


@_property("pairing.bdg_normalization")
def _bdg_normalization(ctx: Context) -> Measurement:
    worst = 0.0
    for epsilon, delta in _bdg_samples(ctx, "pairing.bdg_normalization"):
        eigen = bdg_eigen(BdGBlock(float(epsilon), float(delta)))
        worst = max(worst, abs(eigen.u ** 2 + eigen.v ** 2 - 1.0))
    return _bounded(worst, 1e-14, "|u^2 + v^2 - 1| over 1000 random blocks")


@_property("pairing.bdg_symmetry")
def _bdg_symmetry(ctx: Context) -> Measurement:
    mismatches = 0
    for epsilon, delta in _bdg_samples(ctx, "pairing.bdg_symmetry"):
        a = bdg_eigen(BdGBlock(float(epsilon), float(delta)))
        b = bdg_eigen(BdGBlock(float(epsilon), float(-delta)))
        mismatches += (a.e_plus, a.e_minus) != (b.e_plus, b.e_minus)
    return _bounded(mismatches, 0, "blocks whose spectrum changes under delta -> -delta")


@_property("pairing.quasiparticle_identity")
def _quasiparticle_identity(ctx: Context) -> Measurement:
    worst = 0.0
    for epsilon, delta in _bdg_samples(ctx, "pairing.quasiparticle_identity"):
        e_plus = bdg_eigen(BdGBlock(float(epsilon), float(delta))).e_plus
        worst = max(worst, abs(bcs_quasiparticle(float(epsilon), float(delta)) - e_plus) / max(1.0, e_plus))
    return _bounded(worst, 1e-14, "BCS quasiparticle energy against the BdG upper eigenvalue")


@_property("pairing.gap_monotone")
def _gap_monotone(ctx: Context) -> Measurement:
    model = PairingModel.from_lists(np.arange(8.0), [1] * 8, 0.1)
    gaps = [gap_self_consistent(model.with_coupling(0.1 * step), 4) for step in range(1, 21)]
    decreases = sum(b < a for a, b in zip(gaps, gaps[1:]))
    return Measurement(
        decreases,
        0,
        decreases == 0 and gaps[0] == 0.0 and gaps[-1] > 0.0,
        f"gap from {gaps[0]:.6g} to {gaps[-1]:.6g} as g runs over 0.1..2",
    )


# cli

_REPORT_SAMPLES = [
    ("aufbau", {"z": "42", "classify": None}),
    ("dirac", {"z": "80", "n-r": "1", "kappa": "2"}),
    ("richardson", {"levels": "0,1,2", "degeneracies": "2,1,1", "g": "0.05", "pairs": "2"}),
    ("spectrum", {"z": "3"}),
    ("bdg", {"epsilon": "3", "delta": "4"}),
]


def _sample_report(command: str, flags: dict) -> Report:
    from .main import Run

    return Run(RunConfig.build(command, flags, environ={}))()


def _cell_matches(cell: str, value) -> bool:
    if value is None:
        return cell == ""
    if isinstance(value, bool):
        return cell == ("true" if value else "false")
    if isinstance(value, float):
        return float(cell) == value
    return cell == str(value)


@_property("cli.format_agreement")
def _format_agreement(ctx: Context) -> Measurement:
    mismatches = 0
    for command, flags in _REPORT_SAMPLES:
        report = _sample_report(command, flags)
        expected = flatten(json.loads(report.to_json()))
        rows = list(csv.reader(io.StringIO(report.to_csv())))[1:]
        mismatches += [path for path, _ in rows] != [path for path, _ in expected]
        mismatches += sum(not _cell_matches(cell, value) for (_, cell), (_, value) in zip(rows, expected))
    return _bounded(mismatches, 0, "CSV cells that differ from the JSON leaves they flatten")


@_property("cli.repeatable_output")
def _repeatable_output(ctx: Context) -> Measurement:
    differing = 0
    for command, flags in _REPORT_SAMPLES:
        for output_format in ("json", "csv"):
            first = _sample_report(command, flags).serialize(output_format)
            differing += first != _sample_report(command, flags).serialize(output_format)
    return _bounded(differing, 0, "reports whose bytes change between identical runs")


def verify_all(dataset_path: str | None = None) -> list[PropertyResult]:
    """Run every property.

    :param dataset_path: Element dataset for the classification properties;
        the bundled file when None, and an empty string skips them
    :type dataset_path: str | None
    :return: One result per property, in suite order
    :rtype: list[PropertyResult]
    """
    ctx = Context(skip_dataset=dataset_path == "")
    if not ctx.skip_dataset:
        try:
            ctx.dataset = load_elements(dataset_path)
        except (DomainError, OSError) as e:
            ctx.dataset_error = str(e)
    results = []
    for name, needs_dataset, check in PROPERTIES:
        if needs_dataset and ctx.skip_dataset:
            results.append(PropertyResult(name, SKIP, None, None, "no dataset path given"))
            continue
        if needs_dataset and ctx.dataset_error is not None:
            results.append(PropertyResult(name, FAIL, None, None, f"dataset unusable: {ctx.dataset_error}"))
            continue
        try:
            m = check(ctx)
        except (DomainError, SolverError, LookupError, ArithmeticError) as e:
            results.append(PropertyResult(name, FAIL, None, None, f"{type(e).__name__}: {e}"))
            continue
        results.append(PropertyResult(name, PASS if m.passed else FAIL, m.measured, m.tolerance, m.message))
        logger.info("%s: %s (measured %s)", name, results[-1].status, m.measured)
    return results
