"""Exact verification of a binomial determinant identity.

The matrix with entries C(n-r, k+1+c) for r, c in 0..k has determinant

    (-1)^(k(k+5)/2) * prod_{i=k+1}^{2k+1} C(n,i) / prod_{i=1}^{k} C(n,i),

nonzero throughout the range used here.  The determinant side is evaluated
by Bareiss fraction-free elimination over arbitrary-precision integers; the
closed form is evaluated directly; both are compared exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction


def comb_ext(p: int, l: int) -> int:
    """Binomial coefficient under the convention C(p, l) = 0 whenever l < 0
    or p < l (covers all integer arguments)."""
    if l < 0 or p < l:
        return 0
    return math.comb(p, l)


def helper_identity(p: int, l: int) -> bool:
    """Check (p+1) * C(p, l) == (l+1) * C(p+1, l+1) for any integers."""
    return (p + 1) * comb_ext(p, l) == (l + 1) * comb_ext(p + 1, l + 1)


def _check_params(n: int, k: int) -> None:
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")
    if n < 2 * k + 1:
        raise ValueError(f"need n >= 2k+1, got n={n}, k={k}")


def binom_matrix(n: int, k: int) -> list[list[int]]:
    """The (k+1)x(k+1) integer matrix with entries C(n-r, k+1+c)."""
    _check_params(n, k)
    return [[comb_ext(n - r, k + 1 + c) for c in range(k + 1)] for r in range(k + 1)]


def _bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free determinant; all intermediate divisions are exact."""
    m = [row[:] for row in matrix]
    size = len(m)
    sign = 1
    prev = 1
    for p in range(size - 1):
        if m[p][p] == 0:
            for r in range(p + 1, size):
                if m[r][p] != 0:
                    m[p], m[r] = m[r], m[p]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(p + 1, size):
            for c in range(p + 1, size):
                m[r][c] = (m[r][c] * m[p][p] - m[r][p] * m[p][c]) // prev
            m[r][p] = 0
        prev = m[p][p]
    return sign * m[size - 1][size - 1]


def binom_det(n: int, k: int) -> Fraction:
    """Exact determinant of the binomial matrix (an integer, returned as a
    rational for interface uniformity)."""
    return Fraction(_bareiss_det(binom_matrix(n, k)))


def binom_det_closed(n: int, k: int) -> Fraction:
    """Closed form (-1)^(k(k+5)/2) * prod_{i=k+1}^{2k+1} C(n,i) / prod_{i=1}^k C(n,i)."""
    _check_params(n, k)
    sign = -1 if (k * (k + 5) // 2) % 2 else 1
    numerator = math.prod(math.comb(n, i) for i in range(k + 1, 2 * k + 2))
    denominator = math.prod(math.comb(n, i) for i in range(1, k + 1))
    return Fraction(sign * numerator, denominator)


def check_identity(n: int, k: int) -> bool:
    """Exact equality of the eliminated determinant and the closed form."""
    return binom_det(n, k) == binom_det_closed(n, k)
