"""Exact-rational degree certification for symmetric promise problems.

A weight profile of degree d is stored in the binomial basis: on inputs of
weight w it evaluates to sum_k c_k * C(w, k) with rational coefficients
c_0..c_d.  Whether some degree-d profile fits a function within error eps is
a linear feasibility question, decided here by a Phase-I simplex over
``fractions.Fraction`` so that verdicts at eps = 0 are exact.  The least
feasible degree is found by binary search, and a complete catalogue matcher
identifies every function of degree at most 2 up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .symfun import (
    ONE,
    TRANSFORMS,
    UNDEFINED,
    ZERO,
    SymPartialFn,
    family_f1,
    family_f2,
    family_f3,
    family_f4,
    isomorphs,
)

RationalLike = Fraction | int | str


@dataclass(frozen=True)
class PolyV:
    """Weight profile in the binomial basis: coeffs = (c_0, ..., c_d)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("need at least the constant coefficient c_0")
        if not all(isinstance(c, Fraction) for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        return ", ".join(f"c{k}={c}" for k, c in enumerate(self.coeffs))


@dataclass(frozen=True)
class FeasibilityResult:
    """Verdict of a degree-d fit, with a witness profile when feasible."""

    feasible: bool
    witness: PolyV | None


class FamilyKind(Enum):
    CONSTANT_OR_EMPTY = "constant-or-empty"
    DEG1_F1NN = "deg1-f1nn"
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"


@dataclass(frozen=True)
class FamilyTag:
    """Catalogue match: which low-degree family, with which parameter, under
    which orbit transform."""

    kind: FamilyKind
    param: int | None
    transform: str

    def __str__(self) -> str:
        param = "" if self.param is None else f"({self.param})"
        return f"{self.kind.value}{param} via {self.transform}"


def eval_poly_at_weight(q: PolyV, w: int) -> Fraction:
    """Exact value sum_k c_k * C(w, k); terms with k > w vanish."""
    if w < 0:
        raise ValueError(f"weight must be >= 0, got {w}")
    return sum((c * comb(w, k) for k, c in enumerate(q.coeffs)), Fraction(0))


def _as_eps(eps: RationalLike) -> Fraction:
    eps = Fraction(eps)
    if not 0 <= eps < Fraction(1, 2):
        raise ValueError(f"error bound must satisfy 0 <= eps < 1/2, got {eps}")
    return eps


def check_representation(q: PolyV, f: SymPartialFn, eps: RationalLike) -> bool:
    """Exact check: q stays in [0,1] at every weight, is <= eps where f is 0
    and >= 1-eps where f is 1."""
    eps = _as_eps(eps)
    one = Fraction(1)
    for w, b in enumerate(f.values):
        val = eval_poly_at_weight(q, w)
        if val < 0 or val > one:
            return False
        if b is ZERO and val > eps:
            return False
        if b is ONE and val < one - eps:
            return False
    return True


# ---------------------------------------------------------------------------
# Phase-I simplex over exact rationals
# ---------------------------------------------------------------------------


def _pivot(tableau: list[list[Fraction]], r: int, c: int) -> None:
    piv = tableau[r][c]
    if piv != 1:
        tableau[r] = [v / piv for v in tableau[r]]
    prow = tableau[r]
    for i, row in enumerate(tableau):
        if i != r and row[c]:
            factor = row[c]
            tableau[i] = [a - factor * b for a, b in zip(row, prow)]


def _feasible_nonneg(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """Find y >= 0 with rows·y <= rhs exactly, or None when infeasible.

    Phase-I simplex with Bland's anti-cycling rule.  Rows with negative
    right-hand side are sign-flipped and given an artificial variable; the
    search drives the artificial total to zero.  Artificial columns never
    re-enter the basis.

    Reference formulation: the same verdict is reached by maximizing a slack
    z added to every constraint (rows·y + z <= rhs, z <= 0), feasible iff the
    optimum is z = 0; the direct phase-I basis used here decides that maximum
    without the extra variable and yields the witness immediately.
    """
    m = len(rows)
    nv = len(rows[0]) if m else 0
    art_base = nv + m
    zero = Fraction(0)

    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    n_art = 0
    for i in range(m):
        flip = -1 if rhs[i] < 0 else 1
        row = [zero] * art_base
        for j, a in enumerate(rows[i]):
            if a:
                row[j] = flip * a
        row[nv + i] = Fraction(flip)
        tableau.append(row)
        if flip < 0:
            basis.append(art_base + n_art)
            n_art += 1
        else:
            basis.append(nv + i)
    width = art_base + n_art
    for i in range(m):
        pad = [zero] * (n_art + 1)
        if basis[i] >= art_base:
            pad[basis[i] - art_base] = Fraction(1)
        pad[-1] = abs(rhs[i])
        tableau[i] = tableau[i] + pad

    while True:
        art_rows = [r for r in range(m) if basis[r] >= art_base]
        if not art_rows:
            break
        in_basis = set(basis)
        enter = -1
        for j in range(art_base):  # Bland: smallest improving column index
            if j in in_basis:
                continue
            if sum(tableau[r][j] for r in art_rows) > 0:
                enter = j
                break
        if enter < 0:
            break  # phase-I optimum reached with artificials still positive
        leave = -1
        best: Fraction | None = None
        for r in range(m):
            a = tableau[r][enter]
            if a > 0:
                ratio = tableau[r][width] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave < 0:  # cannot happen: phase-I objective is bounded below
            raise RuntimeError("phase-I simplex lost boundedness")
        _pivot(tableau, leave, enter)
        basis[leave] = enter

    residual = sum(
        (tableau[r][width] for r in range(m) if basis[r] >= art_base), zero
    )
    if residual != 0:
        return None
    y = [zero] * nv
    for r in range(m):
        if basis[r] < nv:
            y[basis[r]] = tableau[r][width]
    return y


def _weight_bounds(b, eps: Fraction) -> tuple[Fraction, Fraction]:
    one = Fraction(1)
    if b is ZERO:
        return Fraction(0), eps
    if b is ONE:
        return one - eps, one
    return Fraction(0), one


def _solve_linear(
    rows: list[list[Fraction]], rhs: list[Fraction], nv: int
) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """Exact solution set of rows·c = rhs: a particular solution plus a basis
    of the homogeneous solutions, or None when inconsistent."""
    aug = [row[:] + [b] for row, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(nv):
        pr = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        piv = aug[r][c]
        if piv != 1:
            aug[r] = [v / piv for v in aug[r]]
        prow = aug[r]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], prow)]
        pivot_cols.append(c)
        r += 1
        if r == len(aug):
            break
    if any(aug[i][nv] != 0 for i in range(r, len(aug))):
        return None
    zero = Fraction(0)
    particular = [zero] * nv
    for i, c in enumerate(pivot_cols):
        particular[c] = aug[i][nv]
    free_cols = [c for c in range(nv) if c not in pivot_cols]
    basis: list[list[Fraction]] = []
    for fc in free_cols:
        vec = [zero] * nv
        vec[fc] = Fraction(1)
        for i, c in enumerate(pivot_cols):
            vec[c] = -aug[i][fc]
        basis.append(vec)
    return particular, basis


def _binom_row(w: int, nv: int) -> list[Fraction]:
    return [Fraction(comb(w, k)) for k in range(nv)]


def _lp_feasible_eps_zero(f: SymPartialFn, nv: int) -> FeasibilityResult:
    """eps = 0 fast path: defined weights pin q exactly, so eliminate those
    equalities first and run the simplex only on the residual box system over
    the undefined weights."""
    eq_rows: list[list[Fraction]] = []
    eq_rhs: list[Fraction] = []
    box_weights: list[int] = []
    for w, b in enumerate(f.values):
        if b is UNDEFINED:
            box_weights.append(w)
        else:
            eq_rows.append(_binom_row(w, nv))
            eq_rhs.append(Fraction(1) if b is ONE else Fraction(0))
    solved = _solve_linear(eq_rows, eq_rhs, nv)
    if solved is None:
        return FeasibilityResult(False, None)
    particular, null_basis = solved
    one = Fraction(1)
    if not null_basis:
        coeffs = particular
    else:
        nt = len(null_basis)
        dot = lambda u, v: sum((a * b for a, b in zip(u, v)), Fraction(0))
        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        for w in box_weights:
            a = _binom_row(w, nv)
            base = dot(a, particular)
            coeff = [dot(a, vec) for vec in null_basis]
            split = coeff + [-v for v in coeff]
            rows.append(split)  # coeff·t <= 1 - base
            rhs.append(one - base)
            rows.append([-v for v in split])  # -coeff·t <= base
            rhs.append(base)
        if rows:
            y = _feasible_nonneg(rows, rhs)
            if y is None:
                return FeasibilityResult(False, None)
            t = [y[i] - y[nt + i] for i in range(nt)]
        else:
            t = [Fraction(0)] * nt
        coeffs = [
            particular[k] + sum(t[i] * null_basis[i][k] for i in range(nt))
            for k in range(nv)
        ]
    witness = PolyV(tuple(coeffs))
    if not check_representation(witness, f, Fraction(0)):
        if null_basis:
            # the simplex saw every box constraint, so this is a solver bug
            raise RuntimeError(f"simplex produced an unsound witness for {f}")
        return FeasibilityResult(False, None)  # unique solution fails the boxes
    return FeasibilityResult(True, witness)


def lp_feasible(f: SymPartialFn, eps: RationalLike, d: int) -> FeasibilityResult:
    """Decide, exactly, whether some degree-<=d profile fits f within eps.

    The system over c_0..c_d constrains q(w) = sum_k c_k C(w,k) per weight:
    within [0, eps] where f is 0, within [1-eps, 1] where f is 1, and within
    [0, 1] where f is undefined.  Free coefficients are split into positive
    and negative parts for the nonnegative Phase-I simplex; when feasible the
    returned witness is whichever basic solution the search lands on.  At
    eps = 0 the defined weights are exact equalities and are eliminated ahead
    of the simplex.
    """
    eps = _as_eps(eps)
    if not 0 <= d <= f.n:
        raise ValueError(f"degree bound must satisfy 0 <= d <= n={f.n}, got {d}")
    nv = d + 1
    if eps == 0:
        return _lp_feasible_eps_zero(f, nv)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for w, b in enumerate(f.values):
        a = _binom_row(w, nv)
        neg = [-x for x in a]
        lo, hi = _weight_bounds(b, eps)
        rows.append(a + neg)  # q(w) <= hi
        rhs.append(hi)
        rows.append(neg + a)  # -q(w) <= -lo
        rhs.append(-lo)
    y = _feasible_nonneg(rows, rhs)
    if y is None:
        return FeasibilityResult(False, None)
    witness = PolyV(tuple(y[k] - y[nv + k] for k in range(nv)))
    if not check_representation(witness, f, eps):  # solver soundness guard
        raise RuntimeError(f"simplex produced an unsound witness for {f}")
    return FeasibilityResult(True, witness)


def degree(f: SymPartialFn, eps: RationalLike = 0) -> int:
    """Least d with a feasible degree-d profile, by binary search on [0, n].

    Always terminates with d <= n: interpolating the defined values (zero at
    undefined weights) is feasible at degree n.
    """
    eps = _as_eps(eps)
    lo, hi = 0, f.n
    while lo <= hi:
        d = (lo + hi) // 2
        if lp_feasible(f, eps, d).feasible:
            hi = d - 1
        else:
            lo = d + 1
    return lo


def qe_lower_bound(f: SymPartialFn) -> int:
    """Query lower bound ceil(degree(f, 0) / 2) from the profile-degree of the
    acceptance probability of any exact algorithm."""
    return (degree(f, 0) + 1) // 2


def classify_deg2(f: SymPartialFn) -> FamilyTag | None:
    """Match f against the complete catalogue of degree <= 2 promise families.

    Returns CONSTANT_OR_EMPTY when the defined values admit a constant fit
    (degree 0), DEG1_F1NN for the unique degree-1 orbit, a family tag with
    parameter for the degree-2 catalogue, and None otherwise.  The parameter
    ranges are k in [floor(n/2), n-1] for F1/F2 and l in
    [floor(n/2), ceil(n/2)] for F3; for even n the F4 vector equals
    F3(n/2) and is reported as F3.
    """
    if f.n <= 1:
        raise ValueError(f"classification needs n > 1, got n={f.n}")
    n = f.n
    present = {v for v in f.values if v is not UNDEFINED}
    if len(present) <= 1:
        return FamilyTag(FamilyKind.CONSTANT_OR_EMPTY, None, TRANSFORMS[0])
    orbit = isomorphs(f)

    def match(target: SymPartialFn) -> str | None:
        for t, g in zip(TRANSFORMS, orbit):
            if g == target:
                return t
        return None

    t = match(family_f1(n, n))
    if t is not None:
        return FamilyTag(FamilyKind.DEG1_F1NN, None, t)

    candidates: list[tuple[FamilyKind, int | None, SymPartialFn]] = []
    for k in range(n // 2, n):
        candidates.append((FamilyKind.F1, k, family_f1(n, k)))
    for k in range(n // 2, n):
        candidates.append((FamilyKind.F2, k, family_f2(n, k)))
    for l in range(n // 2, (n + 1) // 2 + 1):
        candidates.append((FamilyKind.F3, l, family_f3(n, l)))
    if n % 2:
        candidates.append((FamilyKind.F4, None, family_f4(n)))
    for kind, param, target in candidates:
        t = match(target)
        if t is not None:
            return FamilyTag(kind, param, t)
    return None
