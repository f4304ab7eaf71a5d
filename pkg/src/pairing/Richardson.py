"""Richardson's coupled pair equations, solved by continuation in the coupling.

The ground state places pairs in the lowest levels. Near g = 0 the pairs of a
level holding k of its omega slots sit at E = 2 eps - g y, where the y are the
roots of the polynomial solution of y P'' + (y - omega) P' - k P = 0. Newton in
complex arithmetic settles the pair energies at a small starting coupling.

The pair energies themselves are a poor continuation variable: two real roots
collide on a pole 2 eps_n and leave the axis as a conjugate pair. The moments

    u_(m,k) = (-1)^k sum_i (g / (2 eps_m - E_i))^(k+1),  k < omega_m,

stay real and smooth through those collisions, so the solver follows them
instead, along real g. At every accepted step the pair energies are recovered
as the roots of the real polynomial prod_i (z - E_i) the moments determine,
and a final Newton pass polishes them at the target coupling.
"""

import logging
from dataclasses import dataclass
from math import comb

import numpy as np

from errors import DomainError, SolverError
from fock import PairingModel

from .Config import Config
from .Exceptions import ContinuationError

__all__ = [
    "RichardsonSolution",
    "level_seeds",
    "richardson_solve",
    "richardson_residual",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RichardsonSolution:
    """Converged pair energies of one Richardson eigenstate.

    :ivar pair_energies: Complex pair energies, closed under conjugation,
        sorted by real then imaginary part
    :type pair_energies: tuple[complex, ...]
    :ivar residual: Largest residual of the equations in their g_i form
    :type residual: float
    :ivar total_energy: Sum of the pair energies
    :type total_energy: float
    :ivar g: Coupling the solution belongs to
    :type g: float
    :ivar steps: Accepted continuation steps
    :type steps: int
    :ivar pole_distance: Smallest distance from a pair energy to any 2 eps_n
    :type pole_distance: float
    :ivar closure_defect: Worst relative distance between a pair energy and
        the nearest conjugate partner, over every accepted step
    :type closure_defect: float
    """

    pair_energies: tuple[complex, ...]
    residual: float
    total_energy: float
    g: float
    steps: int = 0
    pole_distance: float = float("inf")
    closure_defect: float = 0.0


def level_seeds(omega: int, k: int) -> np.ndarray:
    """Roots y of the small-coupling polynomial for k pairs in a level of degeneracy omega.

    Coefficients follow c_0 = 1, c_(m+1) = (k - m) c_m / ((m + 1)(m - omega)).
    """
    coefficients = [1.0]
    for m in range(k):
        coefficients.append(coefficients[-1] * (k - m) / ((m + 1) * (m - omega)))
    return np.roots(coefficients[::-1]).astype(complex)


def _occupation(levels: list[tuple[float, int]], n_pairs: int) -> list[int]:
    occupied, remaining = [], n_pairs
    for _, omega in levels:
        k = min(omega, remaining)
        occupied.append(k)
        remaining -= k
    return occupied


def _scaled_residual(E, g, eps2, omega):
    poles = omega[None, :] / (eps2[None, :] - E[:, None])
    gaps = E[None, :] - E[:, None]
    np.fill_diagonal(gaps, 1.0)
    inverse = 1.0 / gaps
    np.fill_diagonal(inverse, 0.0)
    return g * (poles.sum(axis=1) - 2.0 * inverse.sum(axis=1)) - 1.0


def _jacobian(E, g, eps2, omega):
    poles = omega[None, :] / (eps2[None, :] - E[:, None]) ** 2
    gaps = E[None, :] - E[:, None]
    np.fill_diagonal(gaps, 1.0)
    inverse_sq = 1.0 / gaps ** 2
    np.fill_diagonal(inverse_sq, 0.0)
    jac = 2.0 * g * inverse_sq
    np.fill_diagonal(jac, g * (poles.sum(axis=1) - 2.0 * inverse_sq.sum(axis=1)))
    return jac


def _norm(r) -> float:
    return float(np.max(np.abs(r))) if np.all(np.isfinite(r)) else np.inf


def _newton(E, g, eps2, omega, iterations: int, tol: float):
    """Damped Newton on the pair energies; returns (E, converged)."""
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        E = np.array(E, dtype=complex)
        r = _scaled_residual(E, g, eps2, omega)
        current = _norm(r)
        for _ in range(iterations):
            if current <= tol:
                return E, True
            if not np.isfinite(current):
                return E, False
            try:
                delta = np.linalg.solve(_jacobian(E, g, eps2, omega), -r)
            except np.linalg.LinAlgError:
                return E, False
            if not np.all(np.isfinite(delta)):
                return E, False
            damping = 1.0
            while damping >= 1.0 / 64:
                trial = E + damping * delta
                trial_r = _scaled_residual(trial, g, eps2, omega)
                if _norm(trial_r) < current:
                    E, r, current = trial, trial_r, _norm(trial_r)
                    break
                damping /= 2
            else:
                # rounding floor
                return E, current <= 1e3 * tol
        return E, current <= tol


def _offsets(omega) -> np.ndarray:
    return np.concatenate(([0], np.cumsum(omega.astype(int))))


def _moments(E, g, eps2, omega) -> np.ndarray:
    """u_(m,k) for k < omega_m, flattened level by level."""
    values = []
    for e, w in zip(eps2, omega):
        ratio = g / (e - E)
        values.extend((-1) ** k * np.sum(ratio ** (k + 1)) for k in range(int(w)))
    return np.real(np.array(values, dtype=complex))


def _moment_system(u, g, eps2, omega, offsets):
    """Residual and Jacobian of the moment equations at coupling g.

    Order j of level m reads
    sum_p u_p u_(j-p) + (j + 1 - omega_m) u_(j+1) - u_j
    + sum_(n != m) omega_n [sum_(k <= j) u_k r^(j-k+1) - u_(n,0) r^(j+1)] = 0
    with r = g / (2 eps_n - 2 eps_m).
    """
    size = len(u)
    residual = np.zeros(size)
    jac = np.zeros((size, size))
    count = len(eps2)
    for m in range(count):
        width, base = int(omega[m]), offsets[m]
        um = u[base:base + width]
        ratios = [(n, g / (eps2[n] - eps2[m])) for n in range(count) if n != m]
        for j in range(width):
            row = base + j
            value = sum(um[p] * um[j - p] for p in range(j + 1)) - um[j]
            jac[row, base + j] -= 1.0
            for p in range(j + 1):
                jac[row, base + p] += 2.0 * um[j - p]
            if j + 1 < width:
                value += (j + 1 - width) * um[j + 1]
                jac[row, base + j + 1] += j + 1 - width
            for n, r in ratios:
                for k in range(j + 1):
                    weight = omega[n] * r ** (j - k + 1)
                    value += weight * um[k]
                    jac[row, base + k] += weight
                weight = omega[n] * r ** (j + 1)
                value -= weight * u[offsets[n]]
                jac[row, offsets[n]] -= weight
            residual[row] = value
    return residual, jac


def _moment_newton(u, g, eps2, omega, offsets, iterations: int, tol: float):
    """Plain Newton on the moments; returns (u, converged)."""
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(iterations):
            r, jac = _moment_system(u, g, eps2, omega, offsets)
            current = _norm(r)
            if current <= tol * max(1.0, _norm(u)):
                return u, True
            if not np.isfinite(current):
                return u, False
            try:
                delta = np.linalg.solve(jac, -r)
            except np.linalg.LinAlgError:
                return u, False
            if not np.all(np.isfinite(delta)):
                return u, False
            u = u + delta
        r, _ = _moment_system(u, g, eps2, omega, offsets)
        return u, _norm(r) <= tol * max(1.0, _norm(u))


def _pair_energies(u, g, eps2, omega, offsets, n_pairs: int) -> np.ndarray:
    """Roots of the monic real polynomial P with P'/P matching the moments at every pole.

    Works in t = (z - center) / scale so the power basis stays well scaled.
    """
    center = float(np.mean(eps2))
    scale = max(1.0, float(eps2.max() - eps2.min()))
    powers = np.arange(n_pairs + 1)
    rows, rhs = [], []
    for m, (e, w) in enumerate(zip(eps2, omega)):
        width = int(w)
        t = (e - center) / scale
        # Taylor coefficients of t^tau about t_m, one row per order
        taylor = np.array(
            [[comb(int(tau), q) * t ** (tau - q) if tau >= q else 0.0 for tau in powers] for q in range(width + 1)]
        )
        a = [u[offsets[m] + k] * (scale / g) ** (k + 1) for k in range(width)]
        for j in range(width):
            row = (j + 1) * taylor[j + 1] - sum(a[k] * taylor[j - k] for k in range(j + 1))
            size = max(1.0, float(np.max(np.abs(row))))
            rows.append(row[:n_pairs] / size)
            rhs.append(-row[n_pairs] / size)
    coefficients, *_ = np.linalg.lstsq(np.array(rows), np.array(rhs), rcond=None)
    roots = np.roots(np.concatenate(([1.0], coefficients[::-1]))).astype(complex)
    return center + scale * roots


def _closure_defect(E) -> float:
    """Worst relative distance from a pair energy to the conjugate of its nearest partner."""
    worst = 0.0
    for e in E:
        if e.imag == 0:
            continue
        nearest = float(np.min(np.abs(E - e.conjugate())))
        worst = max(worst, nearest / (1.0 + abs(e)))
    return worst


def _closed_under_conjugation(E, tol: float) -> bool:
    remaining = list(E)
    while remaining:
        e = remaining.pop()
        scale = tol * (1.0 + abs(e))
        if abs(e.imag) <= scale:
            continue
        if not remaining:
            return False
        j = int(np.argmin([abs(x - e.conjugate()) for x in remaining]))
        if abs(remaining[j] - e.conjugate()) > scale:
            return False
        remaining.pop(j)
    return True


def _symmetrize(E, pair_tol: float, snap_tol: float = 1e-12) -> np.ndarray:
    """Snap conjugate partners to exact conjugates and near-real roots to the axis."""
    remaining = sorted(E, key=lambda x: (x.real, x.imag))
    result = []
    while remaining:
        e = remaining.pop(0)
        if abs(e.imag) <= snap_tol * (1.0 + abs(e)):
            result.append(complex(e.real, 0.0))
            continue
        j = int(np.argmin([abs(x - e.conjugate()) for x in remaining])) if remaining else -1
        if j < 0 or abs(remaining[j] - e.conjugate()) > pair_tol * (1.0 + abs(e)):
            result.append(complex(e))
            continue
        mean = 0.5 * (e + remaining.pop(j).conjugate())
        result.extend([mean, mean.conjugate()])
    return np.array(sorted(result, key=lambda x: (x.real, x.imag)), dtype=complex)


def _pole_distance(E, eps2) -> float:
    return float(np.min(np.abs(E[:, None] - eps2[None, :])))


def richardson_solve(model: PairingModel, n_pairs: int) -> RichardsonSolution:
    """Ground-state solution of the Richardson equations.

    Solves sum_n omega_n / (2 eps_n - E_i) - 2 sum_(j != i) 1 / (E_j - E_i) = 1/g
    for n_pairs pair energies by continuation from g near zero. Couplings past
    the collisions of real pair energies are reached along the real g axis.

    :param model: The model
    :type model: PairingModel
    :param n_pairs: Number of pairs, 1..capacity
    :type n_pairs: int
    :return: The solution
    :rtype: RichardsonSolution
    :raises DomainError: If n_pairs is out of range
    :raises ContinuationError: If the continuation step underflows or the
        final polish does not converge
    :raises SolverError: If the converged roots break conjugation closure
    """
    if not 1 <= n_pairs <= model.capacity:
        raise DomainError(f"n_pairs must lie in 1..{model.capacity}, got {n_pairs}")
    levels = model.grouped()
    eps2 = np.array([2.0 * e for e, _ in levels])
    omega = np.array([float(w) for _, w in levels])
    occupied = _occupation(levels, n_pairs)
    if model.g == 0:
        E = np.repeat(eps2, occupied).astype(complex)
        return RichardsonSolution(tuple(E), 0.0, float(E.real.sum()), 0.0, 0, 0.0)

    cfg = Config.values
    g_target = model.g
    g_now = g_target * cfg["START_FRACTION"]
    seeds = [
        eps2[n] - g_now * level_seeds(int(omega[n]), k)
        for n, k in enumerate(occupied)
        if k > 0
    ]
    E, ok = _newton(np.concatenate(seeds), g_now, eps2, omega, cfg["NEWTON_MAX_ITER"], cfg["NEWTON_TOL"])
    if not ok:
        raise ContinuationError("Newton failed at the starting coupling", 0.0)
    E = _symmetrize(E, cfg["CONJUGATE_TOL"])

    offsets = _offsets(omega)
    u = _moments(E, g_now, eps2, omega)
    history = [(g_now, u)]
    defect = _closure_defect(E)
    step = g_target * cfg["INITIAL_STEP_FRACTION"]
    steps = 0
    while g_now < g_target:
        g_next = min(g_target, g_now + step)
        if len(history) > 1:
            (g0, u0), (g1, u1) = history[-2], history[-1]
            guess = u1 + (u1 - u0) * (g_next - g1) / (g1 - g0)
        else:
            guess = history[-1][1]
        trial, ok = _moment_newton(
            guess, g_next, eps2, omega, offsets, cfg["NEWTON_MAX_ITER"], cfg["NEWTON_TOL"]
        )
        jump = _norm(trial - guess) if ok else np.inf
        if jump > cfg["JUMP_FRACTION"] * (1.0 + _norm(history[-1][1])):
            step /= 2
            logger.debug("halving continuation step to %.3g at g=%.15g", step, g_now)
            if step < g_target * cfg["MIN_STEP_FRACTION"]:
                raise ContinuationError("continuation step underflow", g_now)
            continue
        g_now, u = g_next, trial
        history = [history[-1], (g_now, u)]
        defect = max(defect, _closure_defect(_pair_energies(u, g_now, eps2, omega, offsets, n_pairs)))
        steps += 1
        step = min(1.5 * step, g_target * cfg["MAX_STEP_FRACTION"])

    E = _pair_energies(u, g_target, eps2, omega, offsets, n_pairs)
    E, ok = _newton(E, g_target, eps2, omega, cfg["NEWTON_MAX_ITER"], cfg["NEWTON_TOL"])
    if not ok:
        raise ContinuationError("pair energies did not polish at the target coupling", g_now)
    E, _ = _newton(E, g_target, eps2, omega, cfg["POLISH_ITER"], 0.0)
    total = complex(np.sum(E))
    if not _closed_under_conjugation(E, cfg["CONJUGATE_TOL"]):
        raise SolverError(f"pair energies are not closed under conjugation: {E}")
    if abs(total.imag) > cfg["IMAG_TOL"] * max(1.0, abs(total)):
        raise SolverError(f"total energy keeps an imaginary part {total.imag:.3g}")
    defect = max(defect, _closure_defect(E))
    E = _symmetrize(E, cfg["CONJUGATE_TOL"])
    solution = RichardsonSolution(
        pair_energies=tuple(complex(e) for e in E),
        residual=0.0,
        total_energy=float(np.sum(E).real),
        g=g_target,
        steps=steps,
        pole_distance=_pole_distance(E, eps2),
    )
    residual = richardson_residual(model, solution)
    logger.debug("Richardson solved in %d steps, residual %.3g", steps, residual)
    return RichardsonSolution(
        solution.pair_energies, residual, solution.total_energy, g_target, steps, solution.pole_distance, defect
    )


def richardson_residual(model: PairingModel, solution: RichardsonSolution) -> float:
    """Largest |F(E_i) - 1/g_i| with g_i = g / (1 + 2 g sum_(j != i) 1/(E_j - E_i)).

    This is the original form of the equations, evaluated independently of the
    rearranged system the solver iterates on.

    :param model: The model; g must be positive
    :type model: PairingModel
    :param solution: Pair energies to test
    :type solution: RichardsonSolution
    :return: The residual; infinite when a pair energy sits on a pole
        2 eps_n or two pair energies coincide
    :rtype: float
    :raises DomainError: If g is zero or the pair count exceeds the capacity
    """
    if model.g <= 0:
        raise DomainError("the residual is defined for g > 0")
    energies = [complex(e) for e in solution.pair_energies]
    if not 1 <= len(energies) <= model.capacity:
        raise DomainError(f"{len(energies)} pair energies for a capacity of {model.capacity}")
    levels = model.grouped()
    worst = 0.0
    for i, e in enumerate(energies):
        if any(e == 2.0 * eps for eps, _ in levels):
            return float("inf")
        F = sum(omega / (2.0 * eps - e) for eps, omega in levels)
        interaction = 0j
        for j, other in enumerate(energies):
            if j == i:
                continue
            if other == e:
                return float("inf")
            interaction += 1.0 / (other - e)
        denominator = 1.0 + 2.0 * model.g * interaction
        inverse_g_i = 0j if denominator == 0 else 1.0 / (model.g / denominator)
        worst = max(worst, abs(F - inverse_g_i))
    return float(worst)
