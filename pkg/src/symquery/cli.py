"""Command-line front end.

Subcommands: degree (least feasible profile degree with witness), run (branch
listing of one algorithm execution), verify (whole-domain exactness), classical
(deterministic query complexity), classify (degree <= 2 catalogue match), det
(binomial determinant identity), families (available constructors).  ``--json``
switches to machine-readable output; verify/classify/det exit 0 exactly when
the queried property holds.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import algos, classical, identities, polydeg, symfun

_RUN_PARAMS: dict[str, tuple[str, ...]] = {
    "xquery": ("n",),
    "dj": ("n", "k"),
    "dhw": ("n", "k"),
    "f1": ("n",),
    "f3": ("n",),
    "grover1": ("n",),
    "dw1": ("n",),
    "dw2": ("n",),
    "dw": ("n", "k", "l"),
    "f2": ("n", "k"),
    "f4": ("n",),
}

_RUNNERS = {
    "xquery": algos.xquery,
    "grover1": algos.grover1,
    **{name: info.runner for name, info in algos.DECISION_ALGORITHMS.items()},
}


def _prob(p: float) -> float:
    return float(f"{p:.12g}")


def _emit(args: argparse.Namespace, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human, end="")


def _collect_params(args: argparse.Namespace, names: tuple[str, ...]) -> dict[str, int]:
    params = {}
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise ValueError(f"algorithm {args.alg!r} requires --{name}")
        params[name] = value
    return params


def _cmd_degree(args: argparse.Namespace) -> int:
    f = symfun.from_string(args.fn)
    eps = Fraction(args.eps)
    d = polydeg.degree(f, eps)
    witness = polydeg.lp_feasible(f, eps, d).witness
    lower = polydeg.qe_lower_bound(f) if eps == 0 else (d + 1) // 2
    payload = {
        "command": "degree",
        "fn": args.fn,
        "vector": str(f),
        "eps": str(eps),
        "degree": d,
        "witness": [str(c) for c in witness.coeffs],
        "qe_lower_bound": lower,
    }
    human = (
        f"function        {args.fn} = {f}\n"
        f"eps             {eps}\n"
        f"degree          {d}\n"
        f"witness         {witness}\n"
        f"qe_lower_bound  {lower}\n"
    )
    _emit(args, payload, human)
    return 0


def _cmd_run(args: argparse.Namespace) -> int:
    alg = args.alg
    if alg not in _RUN_PARAMS:
        raise ValueError(f"unknown algorithm {alg!r}; choose from {sorted(_RUN_PARAMS)}")
    params = _collect_params(args, _RUN_PARAMS[alg])
    if args.input is None:
        raise ValueError("run requires --input")
    run = _RUNNERS[alg](*params.values(), args.input)

    in_promise = None
    expected = None
    if alg in algos.DECISION_ALGORITHMS:
        canonical = algos.canonical_function(alg, params)
        value = canonical.values[args.input.count("1")]
        in_promise = value.defined
        expected = int(value.value) if value.defined else None

    payload = {
        "command": "run",
        "alg": alg,
        "params": params,
        "input": args.input,
        "in_promise": in_promise,
        "expected": expected,
        "branches": [
            {
                "path": list(b.path),
                "probability": _prob(b.probability),
                "output": list(b.output) if isinstance(b.output, tuple) else b.output,
                "queries": b.queries_used,
            }
            for b in run.branches
        ],
    }
    lines = [f"algorithm {alg}  " + "  ".join(f"{k}={v}" for k, v in params.items())]
    lines.append(f"input     {args.input}  (weight {args.input.count('1')})")
    if in_promise is False:
        lines.append("note      input outside the promise; output unconstrained (diagnostic only)")
    elif expected is not None:
        lines.append(f"expected  {expected}")
    width = max((len(" ; ".join(b.path)) for b in run.branches), default=4)
    lines.append(f"{'path'.ljust(width)}  {'probability':>14}  output  queries")
    for b in run.branches:
        out = f"({b.output[0]},{b.output[1]})" if isinstance(b.output, tuple) else str(b.output)
        lines.append(
            f"{' ; '.join(b.path).ljust(width)}  {_prob(b.probability):>14.12g}  {out:>6}  {b.queries_used:>7}"
        )
    total = sum(b.probability for b in run.branches)
    lines.append(f"branches  {len(run.branches)}   probability sum {_prob(total):.12g}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    alg = args.alg
    if alg not in _RUN_PARAMS:
        raise ValueError(f"unknown algorithm {alg!r}; choose from {sorted(_RUN_PARAMS)}")
    params = _collect_params(args, _RUN_PARAMS[alg])
    report = algos.verify_exact(alg, params)
    payload = {
        "command": "verify",
        "alg": alg,
        "params": params,
        "function": report.function,
        "inputs_checked": report.inputs_checked,
        "all_exact": report.all_exact,
        "worst_case_queries": report.worst_case_queries,
        "failures": [list(fail) for fail in report.failures[:20]],
    }
    lines = [
        f"algorithm           {alg}  " + "  ".join(f"{k}={v}" for k, v in params.items()),
        f"function            {report.function}",
        f"inputs_checked      {report.inputs_checked}",
        f"all_exact           {report.all_exact}",
        f"worst_case_queries  {report.worst_case_queries}",
    ]
    for x, desc in report.failures[:20]:
        lines.append(f"FAILURE on {x}: {desc}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0 if report.all_exact else 1


def _cmd_classical(args: argparse.Namespace) -> int:
    f = symfun.from_string(args.fn)
    d = classical.d_complexity(f)
    payload = {"command": "classical", "fn": args.fn, "vector": str(f), "d_complexity": d}
    _emit(args, payload, f"function      {args.fn} = {f}\nd_complexity  {d}\n")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    f = symfun.from_string(args.fn)
    tag = polydeg.classify_deg2(f)
    payload = {
        "command": "classify",
        "fn": args.fn,
        "vector": str(f),
        "family": None
        if tag is None
        else {"kind": tag.kind.value, "param": tag.param, "transform": tag.transform},
    }
    human = f"function  {args.fn} = {f}\nfamily    {tag if tag is not None else 'none'}\n"
    _emit(args, payload, human)
    return 0 if tag is not None else 1


def _cmd_det(args: argparse.Namespace) -> int:
    lhs = identities.binom_det(args.n, args.k)
    rhs = identities.binom_det_closed(args.n, args.k)
    match = lhs == rhs
    payload = {
        "command": "det",
        "n": args.n,
        "k": args.k,
        "determinant": str(lhs),
        "closed_form": str(rhs),
        "match": match,
    }
    human = (
        f"n={args.n} k={args.k}\ndeterminant  {lhs}\nclosed form  {rhs}\n"
        f"match        {match}\n"
    )
    _emit(args, payload, human)
    return 0 if match else 1


_FAMILY_HELP = [
    ("literal", "string over 0/1/* of length >= 2, value vector by weight"),
    ("DJ:n,k", "even n, 0 <= k < n/2: 1 at weight n/2, 0 at weights <= k or >= n-k"),
    ("F1:n,k", "0 < k <= n: 0 at weight 0, 1 at weight k"),
    ("F2:n,k", "0 < k < n: 0 at weight 0, 1 at weights k and k+1"),
    ("F3:n,l", "0 < l < n: 0 at weights 0 and n, 1 at weight l"),
    ("F4:n", "n > 1: 0 at weights 0 and n, 1 at the middle weight(s)"),
    ("DW:n,k,l", "0 <= k < l <= n: 0 at weight k, 1 at weight l"),
    ("EXACT:n,k", "total: 1 iff weight = k"),
    ("THRESHOLD:n,k", "total: 1 iff weight >= k"),
    ("OR:n", "total: 1 iff weight >= 1"),
    ("AND:n", "total: 1 iff weight = n"),
    ("PARITY:n", "total: 1 iff weight odd"),
    ("MAJ:n", "total: 1 iff weight > n/2"),
]


def _cmd_families(args: argparse.Namespace) -> int:
    payload = {
        "command": "families",
        "functions": [{"spec": spec, "description": desc} for spec, desc in _FAMILY_HELP],
        "algorithms": {name: list(names) for name, names in _RUN_PARAMS.items()},
    }
    lines = ["function constructors:"]
    for spec, desc in _FAMILY_HELP:
        lines.append(f"  {spec:<14} {desc}")
    lines.append("algorithms (flags for run/verify):")
    for name, names in _RUN_PARAMS.items():
        lines.append(f"  {name:<8} --" + " --".join(names))
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symquery",
        description="Exact query algorithms on weight-promise problems: "
        "simulation, degree certificates, classical complexity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, **flags) -> argparse.ArgumentParser:
        p = sub.add_parser(name)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        for flag, kind in flags.items():
            required = kind.endswith("!")
            p.add_argument(f"--{flag}", type=int if kind.startswith("int") else str,
                           required=required, default=None)
        return p

    p = add("degree", _cmd_degree, fn="str!")
    p.add_argument("--eps", type=str, default="0", help="rational error bound, e.g. 1/8")
    add("run", _cmd_run, alg="str!", n="int", k="int", l="int", input="str")
    add("verify", _cmd_verify, alg="str!", n="int", k="int", l="int")
    add("classical", _cmd_classical, fn="str!")
    add("classify", _cmd_classify, fn="str!")
    add("det", _cmd_det, n="int!", k="int!")
    add("families", _cmd_families)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
