"""Partitions padded to a fixed number of parts, and the small amount of
arithmetic the rest of the package needs on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import NotWeaklyDecreasing, PartitionError, RankMismatch, TooManyParts


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of non-negative integers of length exactly ``n``.

    Ordering is lexicographic on ``parts``, which is the order used for
    s-posets and leading terms. Comparing partitions of different rank is
    allowed by the dataclass ordering but meaningless; use :func:`lex_compare`
    when the rank should be checked.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise PartitionError("a partition needs at least one (possibly zero) part")
        if any(not isinstance(p, int) or p < 0 for p in self.parts):
            raise PartitionError(f"parts must be non-negative integers: {self.parts}")
        for i in range(len(self.parts) - 1):
            if self.parts[i] < self.parts[i + 1]:
                raise NotWeaklyDecreasing(f"parts not weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return sum(1 for p in self.parts if p)

    def shift(self, k: int) -> Partition:
        """Add ``k`` full columns of height n (``k`` may be negative if it
        does not go below zero)."""
        return Partition(tuple(p + k for p in self.parts))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        _same_rank(self.outer, self.inner)
        if not contains(self.outer, self.inner):
            raise PartitionError(f"{self.inner} is not a subdiagram of {self.outer}")

    @property
    def n(self) -> int:
        return self.outer.n

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes as (row, column), zero-based, row-major left to right."""
        return [
            (r, c)
            for r in range(self.n)
            for c in range(self.inner[r], self.outer[r])
        ]

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


def _same_rank(*partitions: Partition) -> None:
    ranks = {p.n for p in partitions}
    if len(ranks) > 1:
        raise RankMismatch(f"partitions have different numbers of parts: {sorted(ranks)}")


def make_partition(raw: Sequence[int], n: int) -> Partition:
    """Pad ``raw`` with zeros to exactly ``n`` parts.

    Raises NotWeaklyDecreasing for unsorted input and TooManyParts when more
    than ``n`` nonzero parts are given.
    """
    if n < 1:
        raise PartitionError(f"n must be a positive integer, got {n}")
    parts = list(raw)
    if any(not isinstance(p, int) or p < 0 for p in parts):
        raise PartitionError(f"parts must be non-negative integers: {parts}")
    for i in range(len(parts) - 1):
        if parts[i] < parts[i + 1]:
            raise NotWeaklyDecreasing(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts.pop()
    if len(parts) > n:
        raise TooManyParts(f"{len(parts)} nonzero parts but n={n}")
    return Partition(tuple(parts) + (0,) * (n - len(parts)))


def sort_into_partition(values: Iterable[int]) -> Partition:
    """Sort a multiset of non-negative integers into a partition with one part per value."""
    return Partition(tuple(sorted(values, reverse=True)))


def empty_partition(n: int) -> Partition:
    return Partition((0,) * n)


def size(lam: Partition) -> int:
    return sum(lam.parts)


def lambda_minus(lam: Partition) -> Partition:
    """Strip the full-height columns: subtract the last part from every part."""
    return lam.shift(-lam[-1])


def lambda_minus_minus(lam: Partition) -> Partition:
    """Apply :func:`lambda_minus`, then strip the columns of height n-1."""
    lm = lambda_minus(lam)
    n = lam.n
    if n == 1:
        return lm
    k = lm[n - 2]
    return Partition(tuple(p - k for p in lm.parts[: n - 1]) + (0,))


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff ``mu`` is a subdiagram of ``lam``."""
    _same_rank(lam, mu)
    return all(m <= l for l, m in zip(lam.parts, mu.parts))


def lex_compare(kappa: Partition, kappa2: Partition) -> int:
    """-1, 0 or 1 according to the lexicographic order (first differing part decides)."""
    _same_rank(kappa, kappa2)
    for a, b in zip(kappa.parts, kappa2.parts):
        if a != b:
            return 1 if a > b else -1
    return 0


def partitions(m: int, n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``m`` with at most ``n`` parts, lex-decreasing."""
    for parts in _partition_tuples(m, n, m if max_part is None else max_part):
        yield Partition(parts)


def _partition_tuples(m: int, n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if m == 0:
            yield ()
        return
    # the first part must leave room: m - first <= (n - 1) * first
    for first in range(min(m, max_part), -1, -1):
        if first * n < m:
            break
        for rest in _partition_tuples(m - first, n - 1, first):
            yield (first,) + rest


def partitions_up_to(max_size: int, n: int) -> Iterator[Partition]:
    """All partitions of size 0..max_size with at most ``n`` parts."""
    for m in range(max_size + 1):
        yield from partitions(m, n)
