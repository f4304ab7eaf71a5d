import math

import numpy as np
import pytest

from conftest import random_pairing_model
from errors import DomainError
from fock import PairingModel, exact_ground_state
from pairing import (
    BdGBlock,
    ContinuationError,
    RichardsonSolution,
    bcs_quasiparticle,
    bdg_eigen,
    chemical_potential,
    cooper_pair_energy,
    gap_self_consistent,
    level_seeds,
    pair_function,
    richardson_residual,
    richardson_solve,
    single_level_energy,
)
from pairing.Richardson import _jacobian, _scaled_residual

GOLDEN = (1.0 - math.sqrt(5.0)) / 2.0


def two_levels(g=0.5):
    return PairingModel.from_lists([0.0, 1.0], [1, 1], g)


def test_cooper_pair_two_levels():
    assert cooper_pair_energy(two_levels()) == pytest.approx(GOLDEN, abs=1e-9)


def test_cooper_pair_is_bound_below_lowest_pole(rng):
    for _ in range(50):
        model, _ = random_pairing_model(rng)
        energy = cooper_pair_energy(model)
        assert energy < 2.0 * model.grouped()[0][0]
        assert pair_function(model, energy) == pytest.approx(1.0 / model.g, rel=1e-9)


def test_cooper_pair_matches_exact_single_pair(rng):
    for _ in range(20):
        model, _ = random_pairing_model(rng)
        exact, _ = exact_ground_state(model, 1)
        assert cooper_pair_energy(model) == pytest.approx(exact, abs=1e-9 * max(1.0, abs(exact)))


def test_cooper_needs_coupling():
    with pytest.raises(DomainError):
        cooper_pair_energy(two_levels(0.0))


@pytest.mark.parametrize("omega, n_pairs", [(1, 1), (2, 1), (2, 2), (4, 3)])
def test_single_level_against_exact(omega, n_pairs):
    model = PairingModel.from_lists([0.3], [omega], 0.2)
    exact, _ = exact_ground_state(model, n_pairs)
    assert single_level_energy(0.3, omega, n_pairs, 0.2) == pytest.approx(exact, abs=1e-12)


def test_single_level_capacity():
    with pytest.raises(DomainError):
        single_level_energy(0.0, 2, 3, 0.1)


def test_level_seeds_two_pairs():
    seeds = sorted(level_seeds(2, 2), key=lambda y: y.imag)
    assert seeds[0] == pytest.approx(1 - 1j)
    assert seeds[1] == pytest.approx(1 + 1j)


def test_level_seeds_one_pair():
    assert level_seeds(3, 1) == pytest.approx([3.0])


def test_richardson_two_levels():
    solution = richardson_solve(two_levels(), 1)
    assert isinstance(solution, RichardsonSolution)
    assert solution.total_energy == pytest.approx(-0.618034, abs=1e-6)
    assert solution.total_energy == pytest.approx(GOLDEN, abs=1e-9)
    assert solution.residual <= 1e-10


def test_richardson_without_coupling():
    model = PairingModel.from_lists([0.0, 1.0, 2.0], [1, 2, 1], 0.0)
    solution = richardson_solve(model, 2)
    assert solution.total_energy == 2.0
    assert solution.pair_energies == (0j, 2 + 0j)


@pytest.mark.parametrize("n_pairs", [0, 3])
def test_richardson_pair_count(n_pairs):
    with pytest.raises(DomainError):
        richardson_solve(two_levels(), n_pairs)


def test_richardson_degenerate_level_goes_complex():
    solution = richardson_solve(PairingModel.from_lists([0.0, 2.0], [2, 1], 0.05), 2)
    imaginary = sorted(e.imag for e in solution.pair_energies)
    assert imaginary[0] < 0 < imaginary[1]
    assert imaginary[0] == -imaginary[1]
    exact, _ = exact_ground_state(PairingModel.from_lists([0.0, 2.0], [2, 1], 0.05), 2)
    assert solution.total_energy == pytest.approx(exact, abs=1e-8)


def test_richardson_random_models_match_exact(rng):
    for _ in range(100):
        model, n_pairs = random_pairing_model(rng)
        solution = richardson_solve(model, n_pairs)
        exact, _ = exact_ground_state(model, n_pairs)
        assert abs(solution.total_energy - exact) <= 1e-8 * max(1.0, abs(exact))
        assert solution.residual <= 1e-10
        assert solution.pole_distance > 1e-12
        key = lambda e: (e.real, e.imag)
        conjugates = sorted((e.conjugate() for e in solution.pair_energies), key=key)
        assert conjugates == pytest.approx(sorted(solution.pair_energies, key=key))


def test_richardson_residual_detects_wrong_energies():
    model = two_levels()
    good = richardson_solve(model, 1)
    bad = RichardsonSolution((complex(good.total_energy + 0.1),), 0.0, good.total_energy + 0.1, model.g)
    assert richardson_residual(model, good) <= 1e-10
    assert richardson_residual(model, bad) > 1e-3


def test_richardson_residual_on_a_pole():
    model = two_levels()
    on_pole = RichardsonSolution((0j,), 0.0, 0.0, model.g)
    assert richardson_residual(model, on_pole) == math.inf


def test_richardson_residual_needs_coupling():
    with pytest.raises(DomainError):
        richardson_residual(two_levels(0.0), RichardsonSolution((0j,), 0.0, 0.0, 0.0))


def test_continuation_error_remembers_last_coupling():
    error = ContinuationError("stalled", 0.25)
    assert error.last_good_g == 0.25
    assert "0.25" in str(error)


def test_bdg_pythagorean_block():
    eigen = bdg_eigen(BdGBlock(3.0, 4.0))
    assert eigen.e_plus == 5.0
    assert eigen.e_minus == -5.0
    assert eigen.u == pytest.approx(math.sqrt(0.8))
    assert eigen.v == pytest.approx(-math.sqrt(0.2))


def test_bdg_random_eigenpairs(rng):
    for _ in range(1000):
        block = BdGBlock(float(rng.uniform(-10, 10)), float(rng.uniform(-10, 10)))
        eigen = bdg_eigen(block)
        vector = np.array([eigen.u, eigen.v])
        scale = max(1.0, abs(eigen.e_plus))
        assert np.max(np.abs(block.matrix() @ vector - eigen.e_plus * vector)) <= 1e-12 * scale
        assert abs(eigen.u ** 2 + eigen.v ** 2 - 1.0) <= 1e-14
        assert eigen.e_plus == -eigen.e_minus
        assert eigen.e_plus == pytest.approx(bcs_quasiparticle(block.epsilon, block.delta))


def test_bdg_agrees_with_eigh(rng):
    for _ in range(50):
        block = BdGBlock(float(rng.normal()), float(rng.normal()))
        values = np.linalg.eigvalsh(block.matrix())
        eigen = bdg_eigen(block)
        assert values == pytest.approx([eigen.e_minus, eigen.e_plus], abs=1e-12)


def test_bdg_deep_hole_has_zero_u():
    eigen = bdg_eigen(BdGBlock(-2.0, 0.0))
    assert eigen.u == 0.0
    assert eigen.v == 1.0
    assert eigen.e_plus == 2.0


def test_bdg_zero_block():
    assert bdg_eigen(BdGBlock(0.0, 0.0)) == (0.0, 0.0, 1.0, 0.0)


def test_quasiparticle_uses_gap_magnitude():
    assert bcs_quasiparticle(3.0, -4.0) == 5.0


def test_chemical_potential():
    model = PairingModel.from_lists([0.0, 1.0, 2.0], [1, 2, 1], 0.1)
    assert chemical_potential(model, 0) == 0.0
    assert chemical_potential(model, 1) == 0.5
    assert chemical_potential(model, 2) == 1.0
    assert chemical_potential(model, 4) == 2.0
    with pytest.raises(DomainError):
        chemical_potential(model, 5)


def ladder(g):
    return PairingModel.from_lists(list(range(8)), [1] * 8, g)


def test_gap_vanishes_below_threshold():
    assert gap_self_consistent(ladder(0.1), 4) == 0.0


def test_gap_solves_gap_equation():
    model = ladder(1.0)
    delta = gap_self_consistent(model, 4)
    xi = np.arange(8) - 3.5
    assert delta > 0
    assert np.sum(model.g / (2.0 * np.sqrt(xi ** 2 + delta ** 2))) == pytest.approx(1.0, abs=1e-10)


def test_gap_grows_with_coupling():
    gaps = [gap_self_consistent(ladder(g), 4) for g in np.linspace(0.1, 2.0, 20)]
    assert all(b >= a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] > 0


def test_gap_defaults_to_half_filling():
    assert gap_self_consistent(ladder(1.0)) == gap_self_consistent(ladder(1.0), 4)


def test_gap_needs_coupling():
    with pytest.raises(DomainError):
        gap_self_consistent(ladder(0.0), 4)


@pytest.mark.parametrize("g", [0.3, 0.5])
def test_gap_single_level_is_half_coupling(g):
    assert gap_self_consistent(PairingModel.from_lists([0.0], [1], g), 0) == pytest.approx(g / 2, rel=1e-12)


def test_richardson_residual_sees_small_shifts():
    model = PairingModel.from_lists([0.0, 1.0, 2.5], [1, 1, 1], 0.3)
    good = richardson_solve(model, 2)
    shifted = list(good.pair_energies)
    shifted[0] += 1e-3
    bad = RichardsonSolution(tuple(shifted), 0.0, good.total_energy + 1e-3, model.g)
    assert richardson_residual(model, bad) > 1e-4


def test_newton_matrices_stay_finite_off_the_axis():
    E = np.array([0.4 + 0.3j, 0.4 - 0.3j, 1.7 + 0j])
    eps2, omega = np.array([0.0, 2.0, 4.0]), np.array([1.0, 1.0, 1.0])
    assert np.all(np.isfinite(_scaled_residual(E, 0.5, eps2, omega)))
    assert np.all(np.isfinite(_jacobian(E, 0.5, eps2, omega)))


@pytest.mark.parametrize(
    "energies, degeneracies, n_pairs, g",
    [
        (range(6), [1] * 6, 3, 1.0),
        (range(4), [1] * 4, 2, 1.0),
        (range(4), [1] * 4, 2, 2.0),
        (range(4), [1] * 4, 2, 5.0),
        ([0.0, 1.0], [2, 2], 2, 1.0),
        ([0.0, 0.5, 1.5], [1, 2, 1], 2, 0.8),
    ],
)
def test_richardson_past_pair_collisions(energies, degeneracies, n_pairs, g):
    model = PairingModel.from_lists(list(energies), degeneracies, g)
    solution = richardson_solve(model, n_pairs)
    exact, _ = exact_ground_state(model, n_pairs)
    assert solution.total_energy == pytest.approx(exact, abs=1e-8 * max(1.0, abs(exact)))
    assert solution.residual <= 1e-9
    assert solution.closure_defect <= 1e-8


def test_richardson_six_level_ladder():
    solution = richardson_solve(PairingModel.from_lists(list(range(6)), [1] * 6, 1.0), 3)
    assert solution.total_energy == pytest.approx(-0.18916, abs=1e-4)


def test_richardson_strong_coupling_goes_complex():
    solution = richardson_solve(PairingModel.from_lists(list(range(4)), [1] * 4, 5.0), 2)
    first, second = solution.pair_energies
    assert first.imag < 0 < second.imag
    assert first == second.conjugate()


def test_richardson_strong_random_models(rng):
    for _ in range(20):
        count = int(rng.integers(2, 6))
        energies = np.cumsum(rng.uniform(0.5, 1.5, size=count))
        model = PairingModel.from_lists(energies, [1] * count, float(rng.uniform(0.3, 1.5)))
        n_pairs = int(rng.integers(1, count + 1))
        solution = richardson_solve(model, n_pairs)
        exact, _ = exact_ground_state(model, n_pairs)
        assert abs(solution.total_energy - exact) <= 1e-8 * max(1.0, abs(exact))
        assert solution.closure_defect <= 1e-8
