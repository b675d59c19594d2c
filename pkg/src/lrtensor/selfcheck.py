"""Exhaustive cross-checks of every fast procedure against its brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .cuts import min_of_s_poset, s_cut, s_cut_witness, s_poset, witness_is_valid
from .lr import Convention, lr_coefficient
from .partition import Partition, partitions
from .schur import product_schur_expansion
from .snn import snn_bruteforce, snn_failure_test, verify_certificate
from .tensor import TensorQuery, tensor_equal, tensor_solutions, verify_theorem_bruteforce


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "checked": self.checked,
            "failed": len(self.failures),
            "failures": self.failures,
        }


def pairs_of_total(total: int, n: int) -> Iterator[tuple[Partition, Partition]]:
    """Ordered pairs (lam, mu) of n-part partitions with |lam| + |mu| = total."""
    for a in range(total + 1):
        for lam in partitions(a, n):
            for mu in partitions(total - a, n):
                yield lam, mu


def pairs_up_to(max_total: int, n: int) -> Iterator[tuple[Partition, Partition]]:
    for total in range(max_total + 1):
        yield from pairs_of_total(total, n)


def quadruples_up_to(max_total: int, n: int) -> Iterator[tuple[Partition, ...]]:
    """(lam, mu, nu, rho) with |lam| + |mu| = |nu| + |rho| <= max_total."""
    for total in range(max_total + 1):
        pairs = list(pairs_of_total(total, n))
        for lam, mu in pairs:
            for nu, rho in pairs:
                yield lam, mu, nu, rho


def check_conventions(max_size: int, max_n: int) -> SuiteResult:
    res = SuiteResult("lr forward == reverse")
    for n in range(1, max_n + 1):
        for mu, nu in pairs_up_to(max_size, n):
            total = sum(mu) + sum(nu)
            for lam in partitions(total, n):
                res.checked += 1
                f = lr_coefficient(lam, mu, nu, Convention.FORWARD)
                r = lr_coefficient(lam, mu, nu, Convention.REVERSE)
                if f != r:
                    res.failures.append(f"c^{lam}_{mu};{nu}: forward {f}, reverse {r}")
    return res


def check_oracle(max_size: int, max_n: int) -> SuiteResult:
    res = SuiteResult("product expansion == LR coefficients")
    for n in range(1, max_n + 1):
        for mu, nu in pairs_up_to(max_size, n):
            res.checked += 1
            expansion = product_schur_expansion(mu, nu)
            by_rule = {
                lam: c
                for lam in partitions(sum(mu) + sum(nu), n)
                if (c := lr_coefficient(lam, mu, nu))
            }
            if dict(expansion) != by_rule:
                res.failures.append(f"s_{mu} * s_{nu}: oracle {dict(expansion)} vs rule {by_rule}")
    return res


def check_cuts(max_size: int, max_n: int) -> SuiteResult:
    res = SuiteResult("s-cut is the strict minimum of the s-poset, witness valid")
    for n in range(1, max_n + 1):
        for lam, mu in pairs_up_to(max_size, n):
            for s in range(n):
                res.checked += 1
                kappa = s_cut(lam, mu, s)
                poset = s_poset(lam, mu, s)
                tag = f"lam={lam} mu={mu} s={s}"
                if kappa not in poset:
                    res.failures.append(f"{tag}: s-cut {kappa} not in s-poset")
                elif min_of_s_poset(lam, mu, s) != kappa or any(
                    k <= kappa for k in poset.members if k != kappa
                ):
                    res.failures.append(f"{tag}: s-cut {kappa} is not the strict minimum")
                if not witness_is_valid(s_cut_witness(lam, mu, s), lam, mu, s):
                    res.failures.append(f"{tag}: witness fails the hybrid check")
    return res


def check_theorem(max_size: int, max_n: int) -> SuiteResult:
    res = SuiteResult("tensor_equal == polynomial oracle")
    for n in range(1, max_n + 1):
        for quad in quadruples_up_to(max_size, n):
            res.checked += 1
            q = TensorQuery(*quad)
            if tensor_equal(q) != verify_theorem_bruteforce(q):
                res.failures.append(f"{', '.join(map(str, quad))}: decider disagrees with oracle")
        for lam, mu in pairs_up_to(max_size, n):
            for pair in tensor_solutions(lam, mu):
                res.checked += 1
                if not verify_theorem_bruteforce(TensorQuery(lam, mu, *pair)):
                    res.failures.append(f"{lam} x {mu}: solution {pair} fails the oracle")
    return res


def check_snn(max_size: int, max_n: int) -> SuiteResult:
    res = SuiteResult("snn certificates are sound")
    for n in range(1, max_n + 1):
        for quad in quadruples_up_to(max_size, n):
            cert = snn_failure_test(*quad)
            if cert is None:
                continue
            res.checked += 1
            if not verify_certificate(cert, *quad):
                res.failures.append(f"{', '.join(map(str, quad))}: certificate does not verify")
            elif snn_bruteforce(*quad).nonnegative:
                res.failures.append(f"{', '.join(map(str, quad))}: false positive")
    return res


SUITES: list[Callable[[int, int], SuiteResult]] = [
    check_conventions,
    check_oracle,
    check_cuts,
    check_theorem,
    check_snn,
]


def run_selfcheck(max_size: int = 8, max_n: int = 3) -> list[SuiteResult]:
    return [suite(max_size, max_n) for suite in SUITES]
