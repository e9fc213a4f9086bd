"""Plain rational substitution into the defining formulas, used as an independent oracle."""

from __future__ import annotations

from fractions import Fraction as F
from math import factorial


def nu(omega, k, n):
    return F((omega - 2 * k + 2) * (n + omega - 2 * k))


def d(omega, k, n):
    w2 = (omega + 2) ** 2
    return 4 * ((n - 1) * (n - 2) * nu(omega, k, n) - n * (n - 2) ** 2 + w2 * (n * n + n + 2))


def u(omega, k, n):
    w2 = (omega + 2) ** 2
    v = nu(omega, k, n)
    return (F(n - 3, 4 * (n - 2)) - F((n - 1) ** 2 + (n - 1) * w2) / (4 * (n - 2) * (v - n + 1))) * v


def delta(omega, k, n):
    v = nu(omega, k, n)
    return (n - 2) ** 2 - d(omega, k, n) * u(omega, k, n) / (v * v)


def quadratic(omega, k, n, c):
    v = nu(omega, k, n)
    return d(omega, k, n) / (2 * (n - 2)) * c * c - (n - 2) * c + (n - 2) * u(omega, k, n) / (2 * v * v)


def gamma_half(twice):
    """Gamma(twice/2) as (rational, power of sqrt(pi))."""
    if twice % 2 == 0:
        return F(factorial(twice // 2 - 1)), 0
    m = (twice - 1) // 2  # Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
    return F(factorial(2 * m), 4**m * factorial(m)), 1


def integral(a, b):
    """I_a^b as (rational, power of pi)."""
    g1, p1 = gamma_half(b + 1)
    g2, p2 = gamma_half(2 * a - b - 1)
    assert (p1 + p2) % 2 == 0
    return g1 * g2 / (2 * factorial(a - 1)), (p1 + p2) // 2
