"""Deciding when phi^lam (x) phi^mu and phi^nu (x) phi^rho are isomorphic
GL(n) representations.

Two such products agree exactly when lam_n + mu_n = nu_n + rho_n and the
multisets {lam^-, mu^-} and {nu^-, rho^-} coincide, where lam^- strips the
full-height columns. Characters are compared through Schur polynomials,
which gives the brute-force check in :func:`verify_theorem_bruteforce`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .partition import Partition, _same_rank, lambda_minus, partitions
from .schur import schur_polynomial


@dataclass(frozen=True)
class TensorQuery:
    lam: Partition
    mu: Partition
    nu: Partition
    rho: Partition

    def __post_init__(self) -> None:
        _same_rank(self.lam, self.mu, self.nu, self.rho)


@dataclass(frozen=True)
class SolutionPair:
    """Unordered pair of partitions, stored with ``first`` lex-greater or equal."""

    first: Partition
    second: Partition

    def __post_init__(self) -> None:
        _same_rank(self.first, self.second)
        if self.first < self.second:
            a, b = self.second, self.first
            object.__setattr__(self, "first", a)
            object.__setattr__(self, "second", b)

    def __iter__(self) -> Iterator[Partition]:
        return iter((self.first, self.second))

    def __str__(self) -> str:
        return f"{self.first} | {self.second}"


def _key(lam: Partition, mu: Partition) -> tuple[int, tuple[Partition, ...]]:
    return lam[-1] + mu[-1], tuple(sorted((lambda_minus(lam), lambda_minus(mu))))


def tensor_equal(q: TensorQuery) -> bool:
    return _key(q.lam, q.mu) == _key(q.nu, q.rho)


def tensor_solutions(lam: Partition, mu: Partition) -> list[SolutionPair]:
    """Every unordered {nu, rho} with phi^nu (x) phi^rho isomorphic to phi^lam (x) phi^mu,
    lex-decreasing."""
    _same_rank(lam, mu)
    total = lam[-1] + mu[-1]
    lm, mm = lambda_minus(lam), lambda_minus(mu)
    found = {
        SolutionPair(x.shift(a), y.shift(total - a))
        for a in range(total + 1)
        for x, y in ((lm, mm), (mm, lm))
    }
    return sorted(found, key=lambda p: (p.first, p.second), reverse=True)


def verify_theorem_bruteforce(q: TensorQuery) -> bool:
    """Compare s_lam * s_mu and s_nu * s_rho term by term in n variables."""
    return schur_polynomial(q.lam) * schur_polynomial(q.mu) == (
        schur_polynomial(q.nu) * schur_polynomial(q.rho)
    )


class TrivialityBound(str, enum.Enum):
    GUARANTEED_TRIVIAL = "guaranteed_trivial"
    NONTRIVIAL_POSSIBLE = "nontrivial_possible"


def triviality_bound(m: int, m2: int, n: int) -> TrivialityBound:
    """Whether every lam |- m, mu |- m2 has only the trivial solution in GL(n)."""
    if n > max(m, m2):
        return TrivialityBound.GUARANTEED_TRIVIAL
    return TrivialityBound.NONTRIVIAL_POSSIBLE


@dataclass(frozen=True)
class NontrivialWitness:
    lam: Partition
    mu: Partition
    pair: SolutionPair


def find_nontrivial(m: int, m2: int, n: int) -> NontrivialWitness | None:
    """First (lam, mu), lam |- m and mu |- m2 in lex-decreasing order, with a
    non-trivial solution pair; None when the search is exhausted."""
    for lam in partitions(m, n):
        for mu in partitions(m2, n):
            trivial = SolutionPair(lam, mu)
            for pair in tensor_solutions(lam, mu):
                if pair != trivial:
                    return NontrivialWitness(lam, mu, pair)
    return None
