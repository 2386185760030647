"""Shared test utilities: strategies and independent reference oracles."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import hypothesis.strategies as st

from symquery import PolyV, SymPartialFn, from_string
from symquery.symfun import FnValue


def fn_strings(min_n: int = 1, max_n: int = 8):
    """Random weight-vector strings over 0/1/*."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(st.sampled_from("01*"), min_size=n + 1, max_size=n + 1).map(
            "".join
        )
    )


def sym_fns(min_n: int = 1, max_n: int = 8):
    return fn_strings(min_n, max_n).map(from_string)


def interpolation_profile(f: SymPartialFn) -> PolyV:
    """Independent feasibility oracle at degree n: triangular interpolation of
    the defined values (zero at undefined weights).

    Because C(w, k) vanishes for k > w and C(w, w) = 1, the coefficients are
    determined by forward substitution, and the profile reproduces a 0/1
    target at every weight, hence lies in [0, 1] everywhere.
    """
    targets = [
        Fraction(1) if v is FnValue.ONE else Fraction(0) for v in f.values
    ]
    coeffs: list[Fraction] = []
    for w in range(f.n + 1):
        acc = sum((coeffs[k] * comb(w, k) for k in range(w)), Fraction(0))
        coeffs.append(targets[w] - acc)
    return PolyV(tuple(coeffs))


def tree_search_depth(f: SymPartialFn) -> int:
    """Independent deterministic-query-complexity oracle: full minimax over
    index-choice decision trees, memoized on exact partial assignments.

    Makes no use of the symmetry reduction; exponential in n, for n <= 6.
    """
    n = f.n
    values = f.values
    promised = set(f.domain_weights)
    memo: dict[tuple[int | None, ...], int] = {}

    def depth(assign: tuple[int | None, ...]) -> int:
        if assign in memo:
            return memo[assign]
        ones = sum(1 for v in assign if v == 1)
        free = sum(1 for v in assign if v is None)
        seen = {values[w] for w in range(ones, ones + free + 1) if w in promised}
        if len(seen) <= 1:
            memo[assign] = 0
            return 0
        best = None
        for i, v in enumerate(assign):
            if v is not None:
                continue
            zero = depth(assign[:i] + (0,) + assign[i + 1 :])
            one = depth(assign[:i] + (1,) + assign[i + 1 :])
            cost = 1 + max(zero, one)
            if best is None or cost < best:
                best = cost
        memo[assign] = best
        return best

    return depth((None,) * n)
