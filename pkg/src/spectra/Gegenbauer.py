"""Gegenbauer polynomials and the three-sphere eigenvalue check."""

import numpy as np
from numpy.polynomial import Polynomial, chebyshev

from errors import DomainError

__all__ = ["gegenbauer_polynomial", "sphere_eigenvalue", "gegenbauer_residual"]

MAX_DEGREE = 30


def gegenbauer_polynomial(n: int, lam: float) -> Polynomial:
    """C_n^(lam)(x) from the three-term recurrence.

    C_0 = 1, C_1 = 2 lam x,
    k C_k = 2 x (k + lam - 1) C_{k-1} - (k + 2 lam - 2) C_{k-2}.

    :param n: Degree, at least 0
    :type n: int
    :param lam: Index lambda, positive
    :type lam: float
    :return: The polynomial in the power basis
    :rtype: numpy.polynomial.Polynomial
    """
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    x = Polynomial([0.0, 1.0])
    previous, current = Polynomial([1.0]), Polynomial([0.0, 2.0 * lam])
    if n == 0:
        return previous
    for k in range(2, n + 1):
        previous, current = current, (
            2.0 * (k + lam - 1) * x * current - (k + 2 * lam - 2) * previous
        ) / k
    return current


def sphere_eigenvalue(n: int, l: int) -> int:
    """I_nl = (n + l + 1)^2 - 1."""
    return (n + l + 1) ** 2 - 1


def gegenbauer_residual(n: int, l: int, sample_count: int = 64) -> float:
    """Largest residual of C_n^(l+1) in the three-sphere radial equation.

    Substitutes F = C_n^(l+1) into
    (1 - x^2) F'' - (2l + 3) x F' + [I_nl - l(l + 2)] F
    and samples the result at Chebyshev points of the first kind.

    :param n: Polynomial degree, 0..30
    :type n: int
    :param l: Orbital number, 0..30
    :type l: int
    :param sample_count: Number of sample points, at least 10
    :type sample_count: int
    :return: Maximum absolute residual divided by the largest coefficient of F
    :rtype: float
    :raises DomainError: On out-of-range arguments
    """
    if not (0 <= n <= MAX_DEGREE and 0 <= l <= MAX_DEGREE):
        raise DomainError(f"need 0 <= n, l <= {MAX_DEGREE}, got n={n}, l={l}")
    if sample_count < 10:
        raise DomainError(f"need at least 10 samples, got {sample_count}")
    f = gegenbauer_polynomial(n, l + 1)
    x = Polynomial([0.0, 1.0])
    residual = (
        (1 - x * x) * f.deriv(2)
        - (2 * l + 3) * x * f.deriv(1)
        + (sphere_eigenvalue(n, l) - l * (l + 2)) * f
    )
    points = chebyshev.chebpts1(sample_count)
    scale = np.max(np.abs(f.coef))
    return float(np.max(np.abs(residual(points))) / scale)
