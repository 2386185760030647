"""Exact query algorithms as exhaustive branch enumerations over the simulator.

Each algorithm returns an AlgorithmRun listing every measurement branch with
probability above the pruning threshold, together with the branch's final
output and oracle-query count.  ``verify_exact`` replays an algorithm over
every promised input of a target function and confirms that every branch
agrees with the function, reporting the worst-case query count.

Two one-query subroutines power everything:

* the spread/recombine test that either reports the flat outcome (0,0),
  possible only off balance, or exhibits an index pair (i, j) with
  x_i != x_j;
* a single inversion-about-uniform iteration from the uniform state, whose
  measured index is certainly a 1-position at weight n/4 and certainly a
  0-position at weight 3n/4.

Both also come with closed-form outcome laws in exact rationals, used as an
independent cross-check of the double-precision simulation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

import numpy as np

from . import qsim
from .symfun import (
    ONE,
    TRANSFORMS,
    SymPartialFn,
    domain_inputs,
    family_dj,
    family_dw,
    family_f1,
    family_f2,
    family_f3,
    family_f4,
    isomorphs,
)

PROB_SUM_TOL = 1e-9
MAX_EXPLICIT_BRANCHES = 2_000_000  # guard for the explicit branch tree


class UnsupportedParameters(ValueError):
    """No implemented padding reduction applies to these parameters."""


@dataclass(frozen=True)
class BranchTrace:
    """One measurement branch: outcome path, its probability, the final
    output (a bit, or an index/pair for the bare subroutines), and how many
    oracle queries the branch consumed."""

    path: tuple[str, ...]
    probability: float
    output: int | tuple[int, int]
    queries_used: int


@dataclass(frozen=True)
class AlgorithmRun:
    """All branches of one algorithm execution on input x."""

    x: str
    branches: tuple[BranchTrace, ...]

    def __post_init__(self) -> None:
        total = sum(b.probability for b in self.branches)
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise ValueError(f"branch probabilities sum to {total!r}, not 1")

    @property
    def outputs(self) -> set[int | tuple[int, int]]:
        return {b.output for b in self.branches}

    @property
    def max_queries(self) -> int:
        return max(b.queries_used for b in self.branches)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of replaying an algorithm over an entire promise domain."""

    function: str
    inputs_checked: int
    all_exact: bool
    worst_case_queries: int
    failures: tuple[tuple[str, str], ...]


def _check_bits(x: str, n: int) -> None:
    if len(x) != n:
        raise ValueError(f"input length {len(x)} does not match n={n}")
    if any(ch not in "01" for ch in x):
        raise ValueError(f"input must be over 0/1, got {x!r}")


# ---------------------------------------------------------------------------
# Circuits for the two one-query subroutines
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def xquery_unitaries(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Spread and recombine maps for the one-query pair test on m bits.

    Basis pairs (i, j) with i in 0..m and workspace j in 0..m.  The spread
    map sends (0,0) to the uniform superposition of (i,0); the recombine map
    sends each (i,0) to ((0,0) + sum_{j>i} (i,j) - sum_{j<i} (j,i)) / sqrt(m),
    completed to a full unitary on the untouched columns.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    width = m + 1
    dim = width * width
    idx = lambda i, j: i * width + j

    uniform = np.zeros(dim)
    for i in range(1, m + 1):
        uniform[idx(i, 0)] = 1.0 / math.sqrt(m)
    u1 = qsim.householder_map(dim, idx(0, 0), uniform)

    s = 1.0 / math.sqrt(m)
    columns: dict[int, np.ndarray] = {}
    for i in range(1, m + 1):
        col = np.zeros(dim)
        col[idx(0, 0)] = s
        for j in range(i + 1, m + 1):
            col[idx(i, j)] = s
        for j in range(1, i):
            col[idx(j, i)] = -s
        columns[idx(i, 0)] = col
    u2 = qsim.complete_unitary(dim, columns)

    for u in (u1, u2):
        dev = qsim.unitary_deviation(u)
        if dev > qsim.UNITARY_TOL:
            raise RuntimeError(f"constructed map off unitary by {dev:.3e}")
    return u1, u2


def xquery_state(x: str) -> qsim.QState:
    """Post-circuit state of the pair test on input x (one oracle call)."""
    m = len(x)
    u1, u2 = xquery_unitaries(m)
    state = qsim.basis_state(m, m + 1, 0, 0)
    state = qsim.apply_map(state, u1, assume_unitary=True)
    state = qsim.apply_oracle(state, x)
    return qsim.apply_map(state, u2, assume_unitary=True)


@lru_cache(maxsize=65536)
def xquery_outcomes(x: str) -> tuple[tuple[tuple[int, int], float], ...]:
    """Measured outcomes of the pair test: (0,0) and/or pairs (i, j), i < j."""
    return tuple(qsim.measure(xquery_state(x)))


@lru_cache(maxsize=None)
def grover_unitaries(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Uniform preparation over indices 1..n and the post-oracle reflection
    (inversion about the uniform state, globally sign-flipped)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    dim = n + 1
    uniform = np.zeros(dim)
    uniform[1:] = 1.0 / math.sqrt(n)
    w = qsim.householder_map(dim, 1, uniform)
    z1 = np.eye(dim)
    z1[1, 1] = -1.0
    reflect = -(w @ z1 @ w.T)
    for u in (w, reflect):
        dev = qsim.unitary_deviation(u)
        if dev > qsim.UNITARY_TOL:
            raise RuntimeError(f"constructed map off unitary by {dev:.3e}")
    return w, reflect


def grover1_state(x: str) -> qsim.QState:
    """State after one inversion-about-uniform iteration on input x."""
    n = len(x)
    w, reflect = grover_unitaries(n)
    state = qsim.basis_state(n, 1, 1, 0)
    state = qsim.apply_map(state, w, assume_unitary=True)
    state = qsim.apply_oracle(state, x)
    return qsim.apply_map(state, reflect, assume_unitary=True)


@lru_cache(maxsize=65536)
def grover_outcomes(x: str) -> tuple[tuple[int, float], ...]:
    """Measured index distribution of the one-iteration search."""
    return tuple((i, p) for (i, _), p in qsim.measure(grover1_state(x)))


def xquery_exact_distribution(x: str) -> list[tuple[tuple[int, int], Fraction]]:
    """Closed-form outcome law of the pair test, in exact rationals.

    P(0,0) = ((m - 2t)/m)^2 at weight t; each differing pair carries 4/m^2.
    """
    m = len(x)
    t = x.count("1")
    out: list[tuple[tuple[int, int], Fraction]] = []
    p_flat = Fraction((m - 2 * t) ** 2, m * m)
    if p_flat:
        out.append(((0, 0), p_flat))
    p_pair = Fraction(4, m * m)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if x[i - 1] != x[j - 1]:
                out.append(((i, j), p_pair))
    return out


def grover1_exact_distribution(x: str) -> list[tuple[int, Fraction]]:
    """Closed-form index law of the one-iteration search, in exact rationals.

    The amplitude on index i is (2s/n - (-1)^{x_i}) / sqrt(n) with
    s = n - 2|x|.
    """
    n = len(x)
    t = x.count("1")
    mean2 = Fraction(2 * (n - 2 * t), n)
    out: list[tuple[int, Fraction]] = []
    for i in range(1, n + 1):
        sign = -1 if x[i - 1] == "1" else 1
        amp = mean2 - sign
        p = amp * amp / n
        if p:
            out.append((i, p))
    return out


# ---------------------------------------------------------------------------
# Algorithms
# ---------------------------------------------------------------------------


def xquery(m: int, x: str) -> AlgorithmRun:
    """One query on m bits; outputs (0,0) only off balance, otherwise a
    differing index pair."""
    _check_bits(x, m)
    branches = tuple(
        BranchTrace((f"xq:{i},{j}",), p, (i, j), 1) for (i, j), p in xquery_outcomes(x)
    )
    return AlgorithmRun(x, branches)


def dj(n: int, k: int, x: str) -> AlgorithmRun:
    """Balanced-weight detection with at most k+1 queries (n even, k < n/2).

    Rounds of the pair test: the flat outcome settles the answer with 0, a
    pair removes the two differing positions and the loop continues; a pair
    in the final round settles 1.  Inputs off the promise are simulated as-is
    and may produce either output.
    """
    if n < 2 or n % 2:
        raise ValueError(f"dj needs even n >= 2, got n={n}")
    if not 0 <= k < n // 2:
        raise ValueError(f"dj needs 0 <= k < n/2, got k={k}")
    _check_bits(x, n)
    branches: list[BranchTrace] = []

    def explore(cur: str, path: tuple[str, ...], prob: float, used: int) -> None:
        if len(branches) > MAX_EXPLICIT_BRANCHES:
            raise RuntimeError(
                "branch tree exceeds the explicit-enumeration guard; "
                "use verify_exact for whole-domain checks"
            )
        last_round = used == k
        for (i, j), p in xquery_outcomes(cur):
            step = path + (f"xq:{i},{j}",)
            if (i, j) == (0, 0):
                branches.append(BranchTrace(step, prob * p, 0, used + 1))
            elif last_round:
                branches.append(BranchTrace(step, prob * p, 1, used + 1))
            else:
                rest = cur[: i - 1] + cur[i : j - 1] + cur[j:]
                explore(rest, step, prob * p, used + 1)

    explore(x, (), 1.0, 0)
    return AlgorithmRun(x, tuple(branches))


def dhw(n: int, k: int, x: str) -> AlgorithmRun:
    """Distinguish weight 0 from weight k >= ceil(n/2) with a single query,
    padding 2k-n zeros so weight k becomes balanced."""
    if not (n + 1) // 2 <= k <= n:
        raise ValueError(f"dhw needs ceil(n/2) <= k <= n, got k={k} with n={n}")
    _check_bits(x, n)
    padded = x + "0" * (2 * k - n)
    branches = tuple(
        BranchTrace((f"xq:{i},{j}",), p, 0 if (i, j) == (0, 0) else 1, 1)
        for (i, j), p in xquery_outcomes(padded)
    )
    return AlgorithmRun(x, branches)


def _with_prefix(x: str, step: str, sub: AlgorithmRun, extra_queries: int = 1) -> AlgorithmRun:
    branches = tuple(
        BranchTrace((step,) + b.path, b.probability, b.output, b.queries_used + extra_queries)
        for b in sub.branches
    )
    return AlgorithmRun(x, branches)


def f1(n: int, x: str) -> AlgorithmRun:
    """Two queries for the odd-n promise {0, floor(n/2)}: read x_1; a one
    settles 1, otherwise run the one-query weight test on the rest."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"f1 needs odd n >= 3, got n={n}")
    _check_bits(x, n)
    if x[0] == "1":
        return AlgorithmRun(x, (BranchTrace(("x1=1",), 1.0, 1, 1),))
    return _with_prefix(x, "x1=0", dhw(n - 1, n // 2, x[1:]))


def f3(n: int, x: str) -> AlgorithmRun:
    """Two queries for the odd-n promise {0, n, ceil(n/2)}: read x_1, then
    run balanced detection (x_1 = 1) or the one-query weight test (x_1 = 0)
    on the remaining n-1 bits."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"f3 needs odd n >= 3, got n={n}")
    _check_bits(x, n)
    rest = x[1:]
    if x[0] == "1":
        sub = dj(n - 1, 0, rest)
    else:
        sub = dhw(n - 1, (n + 1) // 2, rest)
    return _with_prefix(x, f"x1={x[0]}", sub)


def grover1(n: int, x: str) -> AlgorithmRun:
    """One search iteration; outputs the measured index (1-based)."""
    _check_bits(x, n)
    branches = tuple(
        BranchTrace((f"grover:{i}",), p, i, 1) for i, p in grover_outcomes(x)
    )
    return AlgorithmRun(x, branches)


def dw1(n: int, x: str) -> AlgorithmRun:
    """Two queries separating weight n/4 from 3n/4 (n divisible by 4):
    search once, read the reported position, answer its negation."""
    if n % 4:
        raise ValueError(f"dw1 needs n divisible by 4, got n={n}")
    _check_bits(x, n)
    branches = tuple(
        BranchTrace((f"grover:{i}", f"x{i}={x[i-1]}"), p, 1 - int(x[i - 1]), 2)
        for i, p in grover_outcomes(x)
    )
    return AlgorithmRun(x, branches)


def dw2(n: int, x: str) -> AlgorithmRun:
    """Two queries separating weight 0 from n/4 (n divisible by 4):
    search once, read the reported position, answer the bit itself."""
    if n % 4:
        raise ValueError(f"dw2 needs n divisible by 4, got n={n}")
    _check_bits(x, n)
    branches = tuple(
        BranchTrace((f"grover:{i}", f"x{i}={x[i-1]}"), p, int(x[i - 1]), 2)
        for i, p in grover_outcomes(x)
    )
    return AlgorithmRun(x, branches)


def dw_general(n: int, k: int, l: int, x: str) -> AlgorithmRun:
    """Two-query weight discrimination k-vs-l via padding, where a reduction
    exists.

    Supported: 0 < k < n/3 with l >= max((2n+k)/3, 3k) and l-k even (pad
    (3l-k)/2 - n zeros and (l-3k)/2 ones, reaching the quarter/three-quarter
    instance on 2(l-k) bits); or k = 0 with n/4 <= l < floor(n/2) (pad
    4l - n zeros).  Raises UnsupportedParameters otherwise.
    """
    if not 0 <= k < l <= n:
        raise ValueError(f"need 0 <= k < l <= n, got k={k}, l={l}, n={n}")
    _check_bits(x, n)
    if k > 0 and 3 * k < n and 3 * l >= 2 * n + k and l >= 3 * k and (l - k) % 2 == 0:
        zeros = (3 * l - k) // 2 - n
        ones = (l - 3 * k) // 2
        sub = dw1(2 * (l - k), x + "0" * zeros + "1" * ones)
    elif k == 0 and 4 * l >= n and l < n // 2:
        sub = dw2(4 * l, x + "0" * (4 * l - n))
    else:
        raise UnsupportedParameters(
            f"no two-query padding reduction for n={n}, k={k}, l={l}"
        )
    return AlgorithmRun(x, sub.branches)


def f2(n: int, k: int, x: str) -> AlgorithmRun:
    """At most four queries for the promise {0, k, k+1} with n/4 <= k < n.

    Two probe rounds over zero-padded copies: search on 4k bits and read the
    reported position (a one settles 1; at weight k this is certain), then
    search on 4(k+1) bits and answer the bit read there (exact at weight
    k+1, all zeros at weight 0).  Padded positions read as constant 0 and
    still cost a query.
    """
    if not 0 < k < n or 4 * k < n:
        raise ValueError(f"f2 needs n/4 <= k < n with k >= 1, got k={k}, n={n}")
    _check_bits(x, n)
    first_pad = x + "0" * (4 * k - n)
    branches: list[BranchTrace] = []
    second: tuple[tuple[tuple[int, float], ...], str] | None = None
    for i, p in grover_outcomes(first_pad):
        bit = first_pad[i - 1]
        probe = (f"grover:{i}", f"x{i}={bit}")
        if bit == "1":
            branches.append(BranchTrace(probe, p, 1, 2))
            continue
        if second is None:
            second_pad = x + "0" * (4 * (k + 1) - n)
            second = grover_outcomes(second_pad), second_pad
        outcomes2, second_pad = second
        for i2, p2 in outcomes2:
            bit2 = second_pad[i2 - 1]
            branches.append(
                BranchTrace(
                    probe + (f"grover:{i2}", f"x{i2}={bit2}"), p * p2, int(bit2), 4
                )
            )
    return AlgorithmRun(x, tuple(branches))


def f4(n: int, x: str) -> AlgorithmRun:
    """At most five queries for the odd-n promise {0, n, floor(n/2),
    ceil(n/2)}: read x_1, then solve the two-adjacent-weights problem on the
    rest (complemented when x_1 = 1)."""
    if n < 5 or n % 2 == 0:
        raise ValueError(f"f4 needs odd n >= 5, got n={n}")
    _check_bits(x, n)
    rest = x[1:]
    if x[0] == "1":
        rest = "".join("1" if c == "0" else "0" for c in rest)
    return _with_prefix(x, f"x1={x[0]}", f2(n - 1, n // 2, rest))


# ---------------------------------------------------------------------------
# Exactness verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _AlgInfo:
    params: tuple[str, ...]
    runner: Callable[..., AlgorithmRun]
    family: Callable[..., SymPartialFn]
    budget: Callable[[Mapping[str, int]], int]


DECISION_ALGORITHMS: dict[str, _AlgInfo] = {
    "dj": _AlgInfo(("n", "k"), dj, family_dj, lambda p: p["k"] + 1),
    "dhw": _AlgInfo(("n", "k"), dhw, family_f1, lambda p: 1),
    "f1": _AlgInfo(("n",), f1, lambda n: family_f1(n, n // 2), lambda p: 2),
    "f3": _AlgInfo(("n",), f3, lambda n: family_f3(n, (n + 1) // 2), lambda p: 2),
    "dw1": _AlgInfo(("n",), dw1, lambda n: family_dw(n, n // 4, 3 * n // 4), lambda p: 2),
    "dw2": _AlgInfo(("n",), dw2, lambda n: family_dw(n, 0, n // 4), lambda p: 2),
    "dw": _AlgInfo(("n", "k", "l"), dw_general, family_dw, lambda p: 2),
    "f2": _AlgInfo(("n", "k"), f2, family_f2, lambda p: 4),
    "f4": _AlgInfo(("n",), f4, family_f4, lambda p: 5),
}

SUBROUTINE_ALGORITHMS = ("xquery", "grover1")


def query_budget(alg: str, params: Mapping[str, int]) -> int:
    """Declared worst-case query count for an algorithm instance."""
    if alg in SUBROUTINE_ALGORITHMS:
        return 1
    return DECISION_ALGORITHMS[alg].budget(params)


def _premap_input(x: str, transform: str) -> str:
    if transform in ("reverse", "reverse_complement"):
        return "".join("1" if c == "0" else "0" for c in x)
    return x


def _negate_output(transform: str) -> bool:
    return transform in ("complement", "reverse_complement")


def canonical_function(alg: str, params: Mapping[str, int]) -> SymPartialFn:
    """The promise function a decision algorithm computes."""
    info = DECISION_ALGORITHMS[alg]
    return info.family(*(params[p] for p in info.params))


def verify_exact(
    alg: str,
    params: Mapping[str, int],
    f: SymPartialFn | None = None,
    transform: str = "identity",
) -> VerificationReport:
    """Replay an algorithm over every promised input and check exactness.

    For decision algorithms the target defaults to the canonical promise
    function; a caller-supplied f may restrict it to fewer weights but must
    agree where defined.  ``transform`` runs the algorithm through the orbit
    wrapper (inputs complemented and/or outputs negated) and verifies it
    against the correspondingly transformed function.  The bare subroutines
    xquery and grover1 are verified against their output contracts instead.
    """
    if transform not in TRANSFORMS:
        raise ValueError(f"unknown transform {transform!r}")
    if alg == "xquery":
        return _verify_xquery(params["n"])
    if alg == "grover1":
        return _verify_grover1(params["n"])
    if alg not in DECISION_ALGORITHMS:
        raise ValueError(f"unknown algorithm {alg!r}")
    info = DECISION_ALGORITHMS[alg]
    missing = [p for p in info.params if p not in params]
    if missing:
        raise ValueError(f"{alg} needs parameters {info.params}, missing {missing}")
    expected = isomorphs(canonical_function(alg, params))[TRANSFORMS.index(transform)]
    if f is None:
        f = expected
    if f.n != expected.n:
        raise ValueError(f"domain mismatch: function has n={f.n}, algorithm n={expected.n}")
    for w in f.domain_weights:
        if f.values[w] is not expected.values[w]:
            raise ValueError(
                f"domain mismatch: weight {w} is {f.values[w]} but the "
                f"algorithm promises {expected.values[w]}"
            )

    if alg == "dj":
        return _verify_dj(params["n"], params["k"], f, transform)

    args = [params[p] for p in info.params]
    negate = _negate_output(transform)
    failures: list[tuple[str, str]] = []
    worst = 0
    checked = 0
    for x in domain_inputs(f):
        fx = 1 if f.values[x.count("1")] is ONE else 0
        run = info.runner(*args, _premap_input(x, transform))
        for br in run.branches:
            out = 1 - br.output if negate else br.output
            worst = max(worst, br.queries_used)
            if out != fx:
                failures.append(
                    (x, f"path={' ; '.join(br.path)} output={out} expected={fx}")
                )
        checked += 1
    return VerificationReport(str(f), checked, not failures, worst, tuple(failures))


def _verify_dj(n: int, k: int, f: SymPartialFn, transform: str) -> VerificationReport:
    """Whole-domain check of the balanced-weight algorithm.

    Branches that continue identically (same remaining weight and length)
    are grouped, so the check covers every measurement branch of every input
    in O(n^2) work instead of materializing the full outcome tree.
    """
    tol = qsim.PRUNE_TOL
    memo: dict[tuple[int, int], tuple[tuple[tuple[int, float], ...], int]] = {}

    def summary(t: int, m: int, used: int) -> tuple[tuple[tuple[int, float], ...], int]:
        key = (t, m)
        if key in memo:
            return memo[key]
        p_flat = ((m - 2 * t) / m) ** 2
        p_pair = 4 * t * (m - t) / (m * m)
        outs: dict[int, float] = {}
        deepest = 0
        if p_flat >= tol:
            outs[0] = outs.get(0, 0.0) + p_flat
            deepest = used + 1
        if p_pair >= tol:
            if used == k:
                outs[1] = outs.get(1, 0.0) + p_pair
                deepest = max(deepest, used + 1)
            else:
                sub, sub_deepest = summary(t - 1, m - 2, used + 1)
                for out, p in sub:
                    outs[out] = outs.get(out, 0.0) + p_pair * p
                deepest = max(deepest, sub_deepest)
        result = (tuple(sorted(outs.items())), deepest)
        memo[key] = result
        return result

    flip_input = transform in ("reverse", "reverse_complement")
    negate = _negate_output(transform)
    failures: list[tuple[str, str]] = []
    worst = 0
    checked = 0
    for w in f.domain_weights:
        fx = 1 if f.values[w] is ONE else 0
        t0 = n - w if flip_input else w
        outs, deepest = summary(t0, n, 0)
        total = sum(p for _, p in outs)
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise RuntimeError(f"branch probabilities sum to {total!r} at weight {w}")
        worst = max(worst, deepest)
        checked += math.comb(n, w)
        representative = "1" * w + "0" * (n - w)
        for out, p in outs:
            final = 1 - out if negate else out
            if final != fx:
                failures.append(
                    (
                        representative,
                        f"weight-class branch output={final} expected={fx} (prob {p:.6g})",
                    )
                )
    return VerificationReport(str(f), checked, not failures, worst, tuple(failures))


def _verify_xquery(m: int) -> VerificationReport:
    """Contract check over all m-bit inputs: (0,0) appears only off balance,
    and every reported pair really differs."""
    failures: list[tuple[str, str]] = []
    checked = 0
    for bits in range(2**m):
        x = format(bits, f"0{m}b")
        balanced = 2 * x.count("1") == m
        for br in xquery(m, x).branches:
            i, j = br.output
            if (i, j) == (0, 0):
                if balanced:
                    failures.append((x, "flat outcome on a balanced input"))
            elif x[i - 1] == x[j - 1]:
                failures.append((x, f"pair ({i},{j}) does not differ"))
        checked += 1
    return VerificationReport(f"xquery-contract:m={m}", checked, not failures, 1, tuple(failures))


def _verify_grover1(n: int) -> VerificationReport:
    """Contract check at weights n/4 and 3n/4: the measured index is a
    1-position at quarter weight and a 0-position at three-quarter weight."""
    if n % 4:
        raise ValueError(f"grover1 contract needs n divisible by 4, got n={n}")
    failures: list[tuple[str, str]] = []
    checked = 0
    for w, want in ((n // 4, "1"), (3 * n // 4, "0")):
        for positions in itertools.combinations(range(n), w):
            x = "".join("1" if i in positions else "0" for i in range(n))
            for br in grover1(n, x).branches:
                if x[br.output - 1] != want:
                    failures.append((x, f"index {br.output} is not a {want}-position"))
            checked += 1
    return VerificationReport(
        f"grover1-contract:n={n}", checked, not failures, 1, tuple(failures)
    )
