"""Certifying that s_lam s_mu - s_nu s_rho is not Schur non-negative in n variables.

Let kappa be the s-cut of (lam, mu) and xi the s-cut of (nu, rho). Splice
them into sigma(s) = kappa[:s] + xi[s:] and tau(s) = xi[:s] + kappa[s:]. When
tau(s) is lex-greater than sigma(s), xi occurs in s_nu s_rho but not in
s_lam s_mu, so the difference has a negative Schur coefficient at xi.

This test only ever proves failure. No certificate says nothing about
non-negativity; :func:`snn_bruteforce` gives the definitive answer. All
statements here are about polynomials in n variables, which is weaker than
non-negativity of the symmetric functions themselves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cuts import _check_s, s_cut
from .errors import DegreeMismatch
from .lr import lr_coefficient
from .partition import Partition, _same_rank, size
from .schur import product_schur_expansion


class Case(str, enum.Enum):
    # first difference k <= s with xi_k > kappa_k: xi exceeds lam + mu on a prefix
    PREFIX = "prefix"
    # first difference k > s with kappa_k > xi_k: xi would undercut the s-poset minimum
    MINIMALITY = "minimality"


class Direction(str, enum.Enum):
    # s_lam s_mu - s_nu s_rho fails; c^witness_{lam,mu} = 0
    LAMBDA_MU = "lambda_mu"
    # s_nu s_rho - s_lam s_mu fails; c^witness_{nu,rho} = 0
    NU_RHO = "nu_rho"


@dataclass(frozen=True)
class SnnCertificate:
    """``sigma``/``tau`` are oriented by ``direction``: for NU_RHO they are the
    sequences of the swapped query, so ``tau > sigma`` always holds."""

    s: int
    sigma: tuple[int, ...]
    tau: tuple[int, ...]
    witness: Partition
    case: Case
    direction: Direction = Direction.LAMBDA_MU

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "sigma": list(self.sigma),
            "tau": list(self.tau),
            "witness": list(self.witness),
            "case": self.case.value,
            "direction": self.direction.value,
        }

    def to_text(self) -> str:
        fmt = lambda seq: ",".join(map(str, seq))  # noqa: E731
        return (
            f"s={self.s} sigma={fmt(self.sigma)} tau={fmt(self.tau)} "
            f"witness={self.witness} case={self.case.value} direction={self.direction.value}"
        )


@dataclass(frozen=True)
class SnnVerdict:
    """Outcome of the brute-force check. ``witness`` is the lex-greatest
    partition with a negative coefficient, or None when non-negative."""

    witness: Partition | None

    @property
    def nonnegative(self) -> bool:
        return self.witness is None


def sigma_tau(
    lam: Partition, mu: Partition, nu: Partition, rho: Partition, s: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    _same_rank(lam, mu, nu, rho)
    _check_s(s, lam.n)
    kappa = s_cut(lam, mu, s).parts
    xi = s_cut(nu, rho, s).parts
    return kappa[:s] + xi[s:], xi[:s] + kappa[s:]


def _check_degrees(lam, mu, nu, rho) -> None:
    _same_rank(lam, mu, nu, rho)
    left, right = size(lam) + size(mu), size(nu) + size(rho)
    if left != right:
        raise DegreeMismatch(f"|lambda|+|mu| = {left} but |nu|+|rho| = {right}")


def _certificate_at(lam, mu, nu, rho, s: int, direction: Direction) -> SnnCertificate | None:
    sigma, tau = sigma_tau(lam, mu, nu, rho, s)
    if not tau > sigma:
        return None
    kappa = s_cut(lam, mu, s)
    xi = s_cut(nu, rho, s)
    k = next(i for i in range(lam.n) if kappa[i] != xi[i])
    # k is zero-based, so "k <= s" in one-based terms reads k < s here
    case = Case.PREFIX if k < s else Case.MINIMALITY
    return SnnCertificate(s, sigma, tau, xi, case, direction)


def snn_failure_test(
    lam: Partition, mu: Partition, nu: Partition, rho: Partition
) -> SnnCertificate | None:
    """First s (ascending) whose sequences certify that s_lam s_mu - s_nu s_rho
    is not Schur non-negative. None means inconclusive."""
    _check_degrees(lam, mu, nu, rho)
    for s in range(lam.n):
        cert = _certificate_at(lam, mu, nu, rho, s, Direction.LAMBDA_MU)
        if cert is not None:
            return cert
    return None


def snn_certificates(
    lam: Partition, mu: Partition, nu: Partition, rho: Partition
) -> list[SnnCertificate]:
    """Every certificate over all s in both directions, ascending s."""
    _check_degrees(lam, mu, nu, rho)
    out = []
    for s in range(lam.n):
        for direction, args in (
            (Direction.LAMBDA_MU, (lam, mu, nu, rho)),
            (Direction.NU_RHO, (nu, rho, lam, mu)),
        ):
            cert = _certificate_at(*args, s, direction)
            if cert is not None:
                out.append(cert)
    return out


def verify_certificate(
    cert: SnnCertificate, lam: Partition, mu: Partition, nu: Partition, rho: Partition
) -> bool:
    """Recompute the LR coefficients at the witness: zero for the product that
    should lose, positive for the other. Also re-derive the sequences and the
    case so a tampered certificate is rejected."""
    _check_degrees(lam, mu, nu, rho)
    if Direction(cert.direction) is Direction.NU_RHO:
        lam, mu, nu, rho = nu, rho, lam, mu
    xi = cert.witness
    if xi.n != lam.n:
        return False
    if lr_coefficient(xi, lam, mu) != 0 or lr_coefficient(xi, nu, rho) <= 0:
        return False
    try:
        expected = _certificate_at(lam, mu, nu, rho, cert.s, Direction(cert.direction))
    except ValueError:
        return False
    return expected == cert


def snn_bruteforce(lam: Partition, mu: Partition, nu: Partition, rho: Partition) -> SnnVerdict:
    _check_degrees(lam, mu, nu, rho)
    left = product_schur_expansion(lam, mu)
    right = product_schur_expansion(nu, rho)
    negative = [p for p, c in right.items() if left.get(p, 0) < c]
    return SnnVerdict(max(negative) if negative else None)
