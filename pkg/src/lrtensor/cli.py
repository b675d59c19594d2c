"""Command-line front end.

Partitions are written as comma-separated parts (``5,3,2``); trailing zeros
are optional and ``0`` is the empty partition. Every subcommand takes
``--json`` for machine-readable output carrying the same information as the
text form.

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cuts import s_cut, s_cut_witness, s_poset, witness_is_valid
from .errors import LRTensorError, ParseError
from .lr import Convention, enumerate_lr, lr_coefficient
from .partition import Partition, SkewShape, make_partition
from .schur import product_schur_expansion
from .selfcheck import run_selfcheck
from .snn import snn_bruteforce, snn_certificates, snn_failure_test
from .tensor import TensorQuery, tensor_equal, tensor_solutions, verify_theorem_bruteforce


class ArgumentError(LRTensorError):
    pass


def parse_partition(text: str, n: int) -> Partition:
    raw = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece.isdigit():
            raise ParseError(f"not a non-negative integer: {piece!r} in {text!r}")
        raw.append(int(piece))
    return make_partition(raw, n)


def _parts(args: argparse.Namespace, *names: str) -> list[Partition]:
    out = []
    for name in names:
        try:
            out.append(parse_partition(getattr(args, name), args.n))
        except LRTensorError as exc:
            raise ArgumentError(f"--{name}: {exc}") from exc
    return out


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_lr(args: argparse.Namespace) -> int:
    outer, inner, cont = _parts(args, "outer", "inner", "content")
    convention = Convention.REVERSE if args.reverse else Convention.FORWARD
    coeff = lr_coefficient(outer, inner, cont, convention)
    payload = {"coefficient": coeff, "convention": convention.value}
    lines = [str(coeff)]
    if args.tableaux:
        tabs = enumerate_lr(SkewShape(outer, inner), cont, convention) if coeff else []
        payload["tableaux"] = [t.to_json() for t in tabs]
        for t in tabs:
            lines += ["", t.render()]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    mu, nu = _parts(args, "mu", "nu")
    expansion = product_schur_expansion(mu, nu)
    _emit(args, expansion.to_json(), expansion.to_text())
    return 0


def _check_s(args: argparse.Namespace) -> int:
    if not 0 <= args.s < args.n:
        raise ArgumentError(f"-s: must satisfy 0 <= s <= {args.n - 1}, got {args.s}")
    return args.s


def cmd_cut(args: argparse.Namespace) -> int:
    lam, mu = _parts(args, "lambda", "mu")
    s = _check_s(args)
    kappa = s_cut(lam, mu, s)
    payload: dict = {"cut": list(kappa)}
    lines = [str(kappa)]
    if args.witness:
        w = s_cut_witness(lam, mu, s)
        valid = witness_is_valid(w, lam, mu, s)
        payload["witness"] = w.to_json()
        payload["witness_valid"] = valid
        lines += ["", w.render(), "", f"witness valid: {'yes' if valid else 'no'}"]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_poset(args: argparse.Namespace) -> int:
    lam, mu = _parts(args, "lambda", "mu")
    poset = s_poset(lam, mu, _check_s(args))
    payload = {"members": [list(k) for k in poset.members], "minimum": list(poset.minimum)}
    text = "\n".join(
        f"{k}  (min)" if k == poset.minimum else str(k) for k in poset.members
    )
    _emit(args, payload, text)
    return 0


def cmd_tensor_equal(args: argparse.Namespace) -> int:
    q = TensorQuery(*_parts(args, "lambda", "mu", "nu", "rho"))
    equal = tensor_equal(q)
    payload: dict = {"equal": equal}
    lines = ["yes" if equal else "no"]
    if args.brute_force:
        oracle = verify_theorem_bruteforce(q)
        payload["oracle"] = oracle
        payload["agree"] = oracle == equal
        lines.append(
            f"oracle: {'yes' if oracle else 'no'} ({'agrees' if oracle == equal else 'DISAGREES'})"
        )
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_tensor_solve(args: argparse.Namespace) -> int:
    lam, mu = _parts(args, "lambda", "mu")
    pairs = tensor_solutions(lam, mu)
    trivial = {lam, mu}
    rows = [(p, {p.first, p.second} == trivial) for p in pairs]
    payload = [
        {"pair": [list(p.first), list(p.second)], "trivial": t} for p, t in rows
    ]
    text = "\n".join(f"{p}{'  (trivial)' if t else ''}" for p, t in rows)
    _emit(args, payload, text)
    return 0


def cmd_snn(args: argparse.Namespace) -> int:
    quad = _parts(args, "lambda", "mu", "nu", "rho")
    if args.all:
        certs = snn_certificates(*quad)
    else:
        first = snn_failure_test(*quad)
        certs = [first] if first else []
    payload: dict = {
        "certificates": [c.to_json() for c in certs],
        "inconclusive": not certs,
    }
    lines = [c.to_text() for c in certs] or ["inconclusive"]
    if args.brute_force:
        verdict = snn_bruteforce(*quad)
        payload["bruteforce"] = {
            "nonnegative": verdict.nonnegative,
            "witness": None if verdict.witness is None else list(verdict.witness),
        }
        lines.append(
            "bruteforce: non-negative"
            if verdict.nonnegative
            else f"bruteforce: not non-negative (witness {verdict.witness})"
        )
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_selfcheck(args: argparse.Namespace) -> int:
    results = run_selfcheck(args.max_size, args.max_n)
    failed = sum(len(r.failures) for r in results)
    payload = {
        "max_size": args.max_size,
        "max_n": args.max_n,
        "suites": [r.to_json() for r in results],
        "failed": failed,
    }
    lines = []
    for r in results:
        lines.append(
            f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.checked} checked, {len(r.failures)} failed"
        )
        lines += [f"    {f}" for f in r.failures[:10]]
    lines.append(f"total failures: {failed}")
    _emit(args, payload, "\n".join(lines))
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrtensor",
        description="Littlewood-Richardson coefficients, s-cuts and tensor product isomorphism for GL(n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str, partitions: Sequence[str], with_n: bool = True):
        p = sub.add_parser(name, help=help_)
        for part in partitions:
            p.add_argument(f"--{part}", required=True, metavar="P")
        if with_n:
            p.add_argument("-n", type=int, required=True, help="rank of GL(n)")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("lr", cmd_lr, "LR coefficient c^outer_{inner,content}", ["outer", "inner", "content"])
    p.add_argument("--reverse", action="store_true", help="use the reverse rule")
    p.add_argument("--tableaux", action="store_true", help="also list the tableaux")

    add("expand", cmd_expand, "Schur expansion of s_mu * s_nu (brute force)", ["mu", "nu"])

    p = add("cut", cmd_cut, "s-cut of lambda and mu", ["lambda", "mu"])
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="show the positivity witness")

    p = add("poset", cmd_poset, "s-poset of lambda and mu", ["lambda", "mu"])
    p.add_argument("-s", type=int, required=True)

    p = add("tensor-equal", cmd_tensor_equal, "is phi^lambda x phi^mu = phi^nu x phi^rho?",
            ["lambda", "mu", "nu", "rho"])
    p.add_argument("--brute-force", action="store_true", help="also compare Schur polynomials")

    add("tensor-solve", cmd_tensor_solve, "all {nu, rho} with the same tensor product",
        ["lambda", "mu"])

    p = add("snn", cmd_snn, "certify that s_lambda s_mu - s_nu s_rho is not Schur non-negative",
            ["lambda", "mu", "nu", "rho"])
    p.add_argument("--all", action="store_true", help="every certificate, both directions")
    p.add_argument("--brute-force", action="store_true", help="also decide by full expansion")

    p = add("selfcheck", cmd_selfcheck, "run the exhaustive oracle cross-checks", [], with_n=False)
    p.add_argument("--max-size", type=int, default=8, help="bound on |lambda|+|mu| (default 8)")
    p.add_argument("--max-n", type=int, default=3, help="largest n to check (default 3)")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 1) < 1:
        parser.error("argument -n: must be a positive integer")
    try:
        return args.func(args)
    except LRTensorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
