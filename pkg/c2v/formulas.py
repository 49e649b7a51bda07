"""Closed-form dimension counts and coefficients.

These are the right-hand sides the checks compare the computed slices
against. Everything here is integer arithmetic on the level ``k`` and the
weight ``n``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Dict, Iterator, Tuple


def binomial(top: int, r: int) -> int:
    """Generalised binomial coefficient C(top, r) for any integer ``top`` and r >= 0."""
    if r < 0:
        return 0
    return prod(top - t for t in range(r)) // factorial(r)


# -- polynomial rings and 𝒜 ---------------------------------------------------


def dim_yz(n: int) -> int:
    return n // 2 + 1 if n >= 0 else 0


def dim_algebra(n: int) -> int:
    if n < 0 or n == 1:
        return 0
    if n == 0:
        return 1
    return n // 2


def dim_J(k: int, n: int) -> int:
    if n <= k:
        return 0
    if n <= 2 * k + 2:
        return n - k
    return dim_yz(n)


def dim_J_cap_A(k: int, n: int) -> int:
    if n <= k:
        return 0
    if n == k + 1:
        return 1
    if n <= 2 * k + 2:
        return n - k - 1
    return dim_algebra(n)


def dim_I2(k: int, n: int) -> int:
    if n <= k:
        return 0
    if n <= k + 2:
        return 1
    if n <= 2 * k + 2:
        return n - k - 2
    if n == 2 * k + 3:
        return k
    return dim_algebra(n)


def dim_I3(k: int, n: int) -> int:
    base = dim_I2(k, n)
    if n == k + 3 or k + 5 <= n <= 2 * k + 3:
        return base + 1
    return base


def dim_I4(k: int, n: int) -> int:
    return dim_I3(k, n) + (1 if n == k + 4 else 0)


def dim_syzygy(k: int, n: int) -> int:
    if n <= 2 * k + 2:
        return 0
    return (n - 2 * k - 3) // 2 + 1


def dim_module_free(k: int, n: int) -> int:
    """Weight-n part of the free module on generators of weight k+1 and k+2."""
    return dim_yz(n - k - 1) + dim_yz(n - k - 2)


DIMENSION_FORMULAS = {
    "C[y,z]": lambda k, n: dim_yz(n),
    "A": lambda k, n: dim_algebra(n),
    "J": dim_J,
    "J∩A": dim_J_cap_A,
    "I2": dim_I2,
    "I3": dim_I3,
    "I4": dim_I4,
}


def codim_yz_over_J(k: int) -> int:
    return (k + 1) * (k + 2) // 2


def codim_A_over_J_cap_A(k: int) -> int:
    return k * (k + 1) // 2


def codim_A_over_I2(k: int) -> int:
    return (k + 1) * (k + 2) // 2


def codim_A_over_I3(k: int) -> int:
    return k * (k + 1) // 2 + 1


def codim_A_over_I4(k: int) -> int:
    return k * (k + 1) // 2


CODIM_FORMULAS = {
    ("J", "C[y,z]"): codim_yz_over_J,
    ("J∩A", "A"): codim_A_over_J_cap_A,
    ("I2", "A"): codim_A_over_I2,
    ("I3", "A"): codim_A_over_I3,
    ("I4", "A"): codim_A_over_I4,
}


# -- the simple quotient ----------------------------------------------------


def rl_basis(k: int) -> Iterator[Tuple[int, int, int]]:
    """Exponents (p, q, r) of y0^p y1^q y2^r spanning the C₂-algebra of L(k,0)."""
    for r in range(k + 1):
        for p in range(k - r + 1):
            for q in range(k - p + 1):
                yield p, q, r


def rl_count(k: int) -> int:
    return (k + 1) * (k + 2) * (2 * k + 3) // 6


def charge_zero_basis(k: int, n: int) -> Iterator[Tuple[int, int]]:
    """Exponents (p, q) of y^p z^q with q <= k, p+q <= k, p+2q = n."""
    for q in range(min(k, n // 2) + 1):
        p = n - 2 * q
        if p + q <= k:
            yield p, q


def dim_rl_charge_zero(k: int, n: int) -> int:
    if n < 0 or n >= 2 * k + 1:
        return 0
    if n <= k:
        return n // 2 + 1
    return n // 2 + 1 - n + k


def dim_rw(k: int) -> int:
    return k * (k + 1) // 2


# -- combinatorics of the f(0) action ----------------------------------------


def q_brute(s: int, j: int) -> int:
    """Sum over 1 <= i_1 < … < i_j <= s with i_t >= 2t of Π (i_t − 2t + 1)."""
    total = 0
    for idx in combinations(range(1, s + 1), j):
        if all(i >= 2 * (t + 1) for t, i in enumerate(idx)):
            total += prod(i - 2 * t - 1 for t, i in enumerate(idx))
    return total


def q_closed(s: int, j: int) -> int:
    return factorial(s) // (2**j * factorial(s - 2 * j) * factorial(j))


def f0_action_range(n: int, s: int) -> range:
    return range(max(0, s - n), s // 2 + 1)


def f0_action_coefficient(n: int, s: int, j: int) -> int:
    """Coefficient of y0^{s-2j} y1^{n-s+j} y2^j in the reduction of f(0)^s e(-1)^n 1."""
    return (
        (-1) ** (s - j)
        * factorial(s)
        * factorial(n)
        // (factorial(s - 2 * j) * factorial(n - s + j) * factorial(j))
    )


def f0_action_terms(n: int, s: int) -> Dict[Tuple[int, int, int], int]:
    return {
        (s - 2 * j, n - s + j, j): f0_action_coefficient(n, s, j) for j in f0_action_range(n, s)
    }


def f0_coefficient(k: int, j: int) -> int:
    """Coefficient c_j of y^{k+1-2j} z^j in f₀."""
    return (-1) ** j * factorial(k + 1) // (factorial(k + 1 - 2 * j) * factorial(j) ** 2)


def singular_vector_normalisation(k: int) -> Fraction:
    """The scalar turning the reduced singular vector into f₀."""
    return Fraction((-1) ** (k + 1), factorial(k + 1))


def gaussian_bracket_holds(k: int, n: int) -> bool:
    return n // 2 == n - k - 2 - (n - 2 * k - 3) // 2


__all__ = [
    "CODIM_FORMULAS",
    "DIMENSION_FORMULAS",
    "binomial",
    "charge_zero_basis",
    "codim_A_over_I2",
    "codim_A_over_I3",
    "codim_A_over_I4",
    "codim_A_over_J_cap_A",
    "codim_yz_over_J",
    "dim_I2",
    "dim_I3",
    "dim_I4",
    "dim_J",
    "dim_J_cap_A",
    "dim_algebra",
    "dim_module_free",
    "dim_rl_charge_zero",
    "dim_rw",
    "dim_syzygy",
    "dim_yz",
    "f0_action_coefficient",
    "f0_action_range",
    "f0_action_terms",
    "f0_coefficient",
    "gaussian_bracket_holds",
    "q_brute",
    "q_closed",
    "rl_basis",
    "rl_count",
    "singular_vector_normalisation",
]
