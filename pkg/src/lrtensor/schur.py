"""Schur polynomials in n variables as explicit monomial sums, and the
brute-force Schur-basis decomposition of a product.

This is the oracle side of the package: nothing here uses the LR rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Mapping, Sequence

from .errors import DecompositionFailure, PartitionError
from .partition import Partition, _same_rank, size

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class MonomialPoly:
    """A polynomial with non-negative integer coefficients in ``n`` variables,
    stored as exponent vector -> coefficient. Zero terms are never stored."""

    n: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for exp, coeff in self.terms.items():
            if len(exp) != self.n:
                raise ValueError(f"exponent {exp} does not have {self.n} entries")
            if coeff < 0:
                raise ValueError(f"negative coefficient {coeff} at {exp}")
            if coeff:
                clean[tuple(exp)] = coeff
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __mul__(self, other: MonomialPoly) -> MonomialPoly:
        if self.n != other.n:
            raise ValueError("cannot multiply polynomials in different numbers of variables")
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MonomialPoly(self.n, out)

    def times_full_monomial(self, k: int) -> MonomialPoly:
        """Multiply by (x_1 ... x_n)^k."""
        return MonomialPoly(self.n, {tuple(a + k for a in e): c for e, c in self.terms.items()})

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_symmetric(self) -> bool:
        return all(
            self.terms.get(tuple(p), 0) == c
            for e, c in self.terms.items()
            for p in set(permutations(e))
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a
            )
            if not mono:
                out.append(str(c))
            else:
                out.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(out)


class SchurExpansion(Mapping[Partition, int]):
    """A polynomial written in the Schur basis: partition -> positive coefficient.

    Iteration is in lex-decreasing order of partitions.
    """

    def __init__(self, terms: Mapping[Partition, int] | None = None):
        clean = {p: c for p, c in (terms or {}).items() if c}
        if any(c < 0 for c in clean.values()):
            raise ValueError("Schur expansion coefficients must be non-negative")
        if clean:
            _same_rank(*clean)
            if len({size(p) for p in clean}) > 1:
                raise ValueError("Schur expansion mixes partitions of different sizes")
        self._terms = dict(sorted(clean.items(), reverse=True))

    def __getitem__(self, key: Partition) -> int:
        return self._terms[key]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __repr__(self) -> str:
        return f"SchurExpansion({{{', '.join(f'{p}: {c}' for p, c in self.items())}}})"

    def to_text(self) -> str:
        return "\n".join(f"{p}: {c}" for p, c in self.items())

    def to_json(self) -> list[dict]:
        return [{"partition": list(p), "coeff": c} for p, c in self.items()]


def _ssyt_contents(shape: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    """Content vectors of all semistandard tableaux of straight shape with entries <= n."""
    boxes = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    col_height = [sum(1 for length in shape if length > c) for c in range(shape[0] if shape else 0)]
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * n

    def fill(k: int) -> Iterator[tuple[int, ...]]:
        if k == len(boxes):
            yield tuple(counts)
            return
        r, c = boxes[k]
        lo = max(grid.get((r, c - 1), 1), grid.get((r - 1, c), 0) + 1)
        # leave room for the boxes still to come below in this column
        hi = n - (col_height[c] - 1 - r)
        for v in range(lo, hi + 1):
            grid[(r, c)] = v
            counts[v - 1] += 1
            yield from fill(k + 1)
            counts[v - 1] -= 1
        grid.pop((r, c), None)

    yield from fill(0)


@lru_cache(maxsize=None)
def _schur_terms(shape: tuple[int, ...], n: int) -> MonomialPoly:
    out: dict[Exponent, int] = {}
    for exp in _ssyt_contents(shape, n):
        out[exp] = out.get(exp, 0) + 1
    return MonomialPoly(n, out)


def schur_polynomial_raw(parts: Sequence[int], n: int) -> MonomialPoly:
    """s_lambda(x_1..x_n) for an unpadded partition; zero when it has more than n parts."""
    nonzero = tuple(p for p in parts if p)
    if list(nonzero) != sorted(nonzero, reverse=True):
        raise PartitionError(f"parts not weakly decreasing: {list(parts)}")
    if len(nonzero) > n:
        return MonomialPoly(n, {})
    return _schur_terms(nonzero, n)


def schur_polynomial(lam: Partition) -> MonomialPoly:
    """Sum of x^T over semistandard tableaux T of shape ``lam`` with entries <= n."""
    return schur_polynomial_raw(lam.parts, lam.n)


def decompose(poly: MonomialPoly) -> SchurExpansion:
    """Write a symmetric polynomial in the Schur basis by repeatedly peeling
    off the lexicographically leading term."""
    n = poly.n
    rest = dict(poly.terms)
    found: dict[Partition, int] = {}
    while rest:
        lead = max(rest)
        k = rest[lead]
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise DecompositionFailure(f"leading exponent {lead} is not a partition")
        if k < 0:
            raise DecompositionFailure(f"negative coefficient {k} at leading exponent {lead}")
        lam = Partition(lead)
        found[lam] = k
        for e, c in schur_polynomial(lam).terms.items():
            v = rest.get(e, 0) - k * c
            if v < 0:
                raise DecompositionFailure(f"subtracting {k}*s_{lam} leaves {v} at {e}")
            if v:
                rest[e] = v
            else:
                rest.pop(e, None)
    return SchurExpansion(found)


def product_schur_expansion(mu: Partition, nu: Partition) -> SchurExpansion:
    """s_mu * s_nu in n variables, expanded by brute force in the Schur basis."""
    _same_rank(mu, nu)
    return decompose(schur_polynomial(mu) * schur_polynomial(nu))
