import math

from errors import DomainError

from .Space import AlgebraReport, Spin, anticommutator, annihilation, build_space, identity, max_deviation

__all__ = ["NORMALIZATION_TOL", "bogoliubov_operators", "bogoliubov_check"]

NORMALIZATION_TOL = 1e-12


def bogoliubov_operators(u: float, v: float):
    """Quasiparticle annihilators on one paired level.

    gamma_1 = u a_+ - v a_-^+ and gamma_2 = u a_- + v a_+^+.

    :param u: Particle amplitude
    :type u: float
    :param v: Hole amplitude
    :type v: float
    :return: ``(gamma_1, gamma_2)`` as dense matrices
    """
    space = build_space(1)
    up, down = annihilation(space, 0, Spin.UP), annihilation(space, 0, Spin.DOWN)
    return u * up - v * down.T, u * down + v * up.T


def bogoliubov_check(u: float, v: float) -> AlgebraReport:
    """Verify that a Bogoliubov transform preserves the fermion algebra.

    Amplitudes are renormalized to u^2 + v^2 = 1 before the check.

    :param u: Particle amplitude
    :type u: float
    :param v: Hole amplitude
    :type v: float
    :return: Largest deviations of {gamma_i, gamma_j^+} = delta_ij and
        {gamma_i, gamma_j} = 0
    :rtype: AlgebraReport
    :raises DomainError: If |u^2 + v^2 - 1| exceeds 1e-12
    """
    if abs(u * u + v * v - 1.0) > NORMALIZATION_TOL:
        raise DomainError(f"u^2 + v^2 = {u * u + v * v:.17g}, expected 1")
    norm = math.hypot(u, v)
    u, v = u / norm, v / norm
    gammas = bogoliubov_operators(u, v)
    one = identity(build_space(1), dtype=float)
    mixed = same = 0.0
    for i, gamma_i in enumerate(gammas):
        for j, gamma_j in enumerate(gammas):
            expected = one if i == j else 0 * one
            mixed = max(mixed, max_deviation(anticommutator(gamma_i, gamma_j.T) - expected))
            same = max(same, max_deviation(anticommutator(gamma_i, gamma_j)))
    return AlgebraReport(
        f"Bogoliubov transform (u={u:.15g}, v={v:.15g})",
        deviations={"{gamma_i, gamma_j^+} - delta_ij": mixed, "{gamma_i, gamma_j}": same},
        tolerance=NORMALIZATION_TOL,
    )
