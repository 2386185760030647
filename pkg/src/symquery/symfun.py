"""Symmetric partial Boolean functions stored as weight-indexed value vectors.

A function on n-bit strings that only depends on the Hamming weight |x| is
represented by the length-(n+1) vector of its values at weights 0..n, each
entry being 0, 1, or ``*`` (undefined, i.e. outside the promise).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

MAX_ENUM_N = 30  # 2^n input enumeration must stay at desk scale


class FnValue(Enum):
    """Value at one Hamming weight: defined 0/1, or undefined (prints as *)."""

    ZERO = "0"
    ONE = "1"
    UNDEFINED = "*"

    def __str__(self) -> str:
        return self.value

    @property
    def defined(self) -> bool:
        return self is not FnValue.UNDEFINED


ZERO = FnValue.ZERO
ONE = FnValue.ONE
UNDEFINED = FnValue.UNDEFINED


@dataclass(frozen=True)
class SymPartialFn:
    """A weight-promise problem on n-bit inputs.

    ``values[w]`` is the required output on inputs of weight w; entries equal
    to UNDEFINED mark weights outside the promise.  Instances are immutable
    and safe to share.
    """

    n: int
    values: tuple[FnValue, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"input length must be >= 1, got n={self.n}")
        if len(self.values) != self.n + 1:
            raise ValueError(
                f"need {self.n + 1} weight entries for n={self.n}, got {len(self.values)}"
            )
        if not all(isinstance(v, FnValue) for v in self.values):
            raise ValueError("vector entries must be FnValue")

    def __str__(self) -> str:
        return "".join(str(v) for v in self.values)

    @property
    def domain_weights(self) -> tuple[int, ...]:
        """Weights where the function is defined."""
        return tuple(w for w, v in enumerate(self.values) if v.defined)


# The four functions equal to f up to input/output negation (variable
# permutations are already quotiented out by the weight-vector form).
TRANSFORMS = ("identity", "reverse", "complement", "reverse_complement")


def reverse_fn(f: SymPartialFn) -> SymPartialFn:
    """Reverse the weight vector; equals precomposition with bitwise negation."""
    return SymPartialFn(f.n, f.values[::-1])


_FLIP = {ZERO: ONE, ONE: ZERO, UNDEFINED: UNDEFINED}


def complement_fn(f: SymPartialFn) -> SymPartialFn:
    """Negate the output, leaving undefined weights undefined."""
    return SymPartialFn(f.n, tuple(_FLIP[v] for v in f.values))


def isomorphs(f: SymPartialFn) -> list[SymPartialFn]:
    """The orbit [f, reverse, complement, reverse of complement], in the
    order of ``TRANSFORMS`` (duplicates possible for symmetric vectors)."""
    rc = reverse_fn(complement_fn(f))
    return [f, reverse_fn(f), complement_fn(f), rc]


def is_isomorphic(f: SymPartialFn, g: SymPartialFn) -> bool:
    """Exact vector equality of g with some member of f's orbit."""
    if f.n != g.n:
        raise ValueError(f"length mismatch: n={f.n} vs n={g.n}")
    return g in isomorphs(f)


def value_at_weight(f: SymPartialFn, w: int) -> FnValue:
    if not 0 <= w <= f.n:
        raise ValueError(f"weight {w} out of range 0..{f.n}")
    return f.values[w]


def domain_inputs(f: SymPartialFn) -> Iterator[str]:
    """All promised inputs as bitstrings, in lexicographic order."""
    if f.n > MAX_ENUM_N:
        raise ValueError(f"input enumeration capped at n={MAX_ENUM_N}, got n={f.n}")
    defined = set(f.domain_weights)
    for bits in itertools.product("01", repeat=f.n):
        if bits.count("1") in defined:
            yield "".join(bits)


def domain_size(f: SymPartialFn) -> int:
    """Number of promised inputs: sum of C(n, w) over defined weights."""
    return sum(math.comb(f.n, w) for w in f.domain_weights)


# ---------------------------------------------------------------------------
# Family constructors
# ---------------------------------------------------------------------------


def family_dj(n: int, k: int) -> SymPartialFn:
    """Balanced-vs-extreme promise: 1 at weight n/2, 0 at weights <= k or >= n-k."""
    if n < 2 or n % 2:
        raise ValueError(f"DJ needs even n >= 2, got n={n}")
    if not 0 <= k < n // 2:
        raise ValueError(f"DJ needs 0 <= k < n/2, got k={k} with n={n}")
    vals = [UNDEFINED] * (n + 1)
    for w in range(k + 1):
        vals[w] = ZERO
        vals[n - w] = ZERO
    vals[n // 2] = ONE
    return SymPartialFn(n, tuple(vals))


def family_f1(n: int, k: int) -> SymPartialFn:
    """0 at weight 0, 1 at weight k."""
    if not 0 < k <= n:
        raise ValueError(f"F1 needs 0 < k <= n, got k={k} with n={n}")
    vals = [UNDEFINED] * (n + 1)
    vals[0] = ZERO
    vals[k] = ONE
    return SymPartialFn(n, tuple(vals))


def family_f2(n: int, k: int) -> SymPartialFn:
    """0 at weight 0, 1 at weights k and k+1."""
    if not 0 < k < n:
        raise ValueError(f"F2 needs 0 < k < n, got k={k} with n={n}")
    vals = [UNDEFINED] * (n + 1)
    vals[0] = ZERO
    vals[k] = ONE
    vals[k + 1] = ONE
    return SymPartialFn(n, tuple(vals))


def family_f3(n: int, l: int) -> SymPartialFn:
    """0 at weights 0 and n, 1 at weight l."""
    if not 0 < l < n:
        raise ValueError(f"F3 needs 0 < l < n, got l={l} with n={n}")
    vals = [UNDEFINED] * (n + 1)
    vals[0] = ZERO
    vals[n] = ZERO
    vals[l] = ONE
    return SymPartialFn(n, tuple(vals))


def family_f4(n: int) -> SymPartialFn:
    """0 at weights 0 and n, 1 at the middle weight(s) floor(n/2), ceil(n/2).

    For even n this coincides with family_f3(n, n/2).
    """
    if n <= 1:
        raise ValueError(f"F4 needs n > 1, got n={n}")
    vals = [UNDEFINED] * (n + 1)
    vals[0] = ZERO
    vals[n] = ZERO
    vals[n // 2] = ONE
    vals[(n + 1) // 2] = ONE
    return SymPartialFn(n, tuple(vals))


def family_dw(n: int, k: int, l: int) -> SymPartialFn:
    """Two-weight discrimination: 0 at weight k, 1 at weight l."""
    if not 0 <= k < l <= n:
        raise ValueError(f"DW needs 0 <= k < l <= n, got k={k}, l={l} with n={n}")
    vals = [UNDEFINED] * (n + 1)
    vals[k] = ZERO
    vals[l] = ONE
    return SymPartialFn(n, tuple(vals))


def family_named(name: str, n: int, k: int | None = None) -> SymPartialFn:
    """Total symmetric functions: OR, AND, PARITY, MAJ, EXACT, THRESHOLD."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    name = name.upper()
    if name in ("EXACT", "THRESHOLD"):
        if k is None or not 0 <= k <= n:
            raise ValueError(f"{name} needs 0 <= k <= n, got k={k} with n={n}")
    elif k is not None:
        raise ValueError(f"{name} takes no k parameter")
    table = {
        "OR": lambda w: w >= 1,
        "AND": lambda w: w == n,
        "PARITY": lambda w: w % 2 == 1,
        "MAJ": lambda w: 2 * w > n,
        "EXACT": lambda w: w == k,
        "THRESHOLD": lambda w: w >= k,
    }
    if name not in table:
        raise ValueError(f"unknown named family {name!r}")
    pred = table[name]
    return SymPartialFn(n, tuple(ONE if pred(w) else ZERO for w in range(n + 1)))


_LITERAL_RE = re.compile(r"[01*]{2,}")

# family name -> (argument count, constructor)
_FAMILIES = {
    "DJ": (2, family_dj),
    "F1": (2, family_f1),
    "F2": (2, family_f2),
    "F3": (2, family_f3),
    "F4": (1, family_f4),
    "DW": (3, family_dw),
    "EXACT": (2, lambda n, k: family_named("EXACT", n, k)),
    "THRESHOLD": (2, lambda n, k: family_named("THRESHOLD", n, k)),
    "OR": (1, lambda n: family_named("OR", n)),
    "AND": (1, lambda n: family_named("AND", n)),
    "PARITY": (1, lambda n: family_named("PARITY", n)),
    "MAJ": (1, lambda n: family_named("MAJ", n)),
}


def from_string(spec: str) -> SymPartialFn:
    """Parse a function spec: a literal vector over {0,1,*} of length >= 2,
    or a family expression such as ``DJ:8,1``, ``F3:5,3``, ``OR:4``.
    """
    s = spec.strip()
    if _LITERAL_RE.fullmatch(s):
        return SymPartialFn(len(s) - 1, tuple(FnValue(ch) for ch in s))
    if ":" in s:
        name, _, argstr = s.partition(":")
        name = name.strip().upper()
        if name not in _FAMILIES:
            raise ValueError(f"unknown family {name!r} in {spec!r}")
        arity, ctor = _FAMILIES[name]
        parts = [p.strip() for p in argstr.split(",")] if argstr.strip() else []
        if len(parts) != arity:
            raise ValueError(f"{name} takes {arity} parameter(s), got {len(parts)} in {spec!r}")
        try:
            args = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"non-integer parameter in {spec!r}") from None
        return ctor(*args)
    raise ValueError(
        f"cannot parse function spec {spec!r}: expected a string over 0/1/* "
        f"of length >= 2 or NAME:params"
    )
