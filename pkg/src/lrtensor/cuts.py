"""s-cuts of two partitions, the explicit filling that shows the s-cut
occurs in the product, and s-posets.

For 0 <= s < n, the s-cut of lam and mu adds the first s rows index-wise,
pairs the remaining rows of lam with the remaining rows of mu taken in
reverse order, and sorts the sums. Its defining property is that it is the
lexicographically least kappa with c^kappa_{lam,mu} > 0 among those whose
first s parts are lam_i + mu_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SOutOfRange
from .lr import Tableau, content, is_lattice_reverse, is_semistandard_reverse, lr_positive
from .partition import Partition, SkewShape, _same_rank, partitions, size, sort_into_partition


def _check_s(s: int, n: int) -> None:
    if not isinstance(s, int) or not 0 <= s <= n - 1:
        raise SOutOfRange(f"s must satisfy 0 <= s <= {n - 1}, got {s}")


def s_cut(lam: Partition, mu: Partition, s: int) -> Partition:
    _same_rank(lam, mu)
    n = lam.n
    _check_s(s, n)
    head = [lam[i] + mu[i] for i in range(s)]
    tail = [lam[s + j] + mu[n - 1 - j] for j in range(n - s)]
    return sort_into_partition(head + tail)


def s_cut_witness(lam: Partition, mu: Partition, s: int) -> Tableau:
    """A filling of kappa/lam with content mu, kappa the s-cut.

    Row i <= s is filled with i. Below the cut, the bottom box of each column
    is filled left to right with mu_{s+1} copies of s+1, then the bottoms of
    what is left with mu_{s+2} copies of s+2, and so on. The part below the
    cut is a reverse-rule LR tableau; see :func:`witness_is_valid`.
    """
    kappa = s_cut(lam, mu, s)
    n = lam.n
    shape = SkewShape(kappa, lam)
    grid: dict[tuple[int, int], int] = {}
    for r in range(s):
        for c in range(lam[r], kappa[r]):
            grid[(r, c)] = r + 1

    remaining = {(r, c) for r in range(s, n) for c in range(lam[r], kappa[r])}
    for j in range(s, n):
        bottoms: dict[int, int] = {}
        for r, c in remaining:
            if r > bottoms.get(c, -1):
                bottoms[c] = r
        cols = sorted(bottoms)
        if len(cols) < mu[j]:
            raise RuntimeError(
                f"only {len(cols)} column bottoms left for {mu[j]} copies of {j + 1}"
            )
        for c in cols[: mu[j]]:
            box = (bottoms[c], c)
            grid[box] = j + 1
            remaining.discard(box)
    if remaining:
        raise RuntimeError(f"unfilled boxes left over: {sorted(remaining)}")
    return Tableau(shape, tuple(grid[b] for b in shape.boxes()))


def witness_is_valid(t: Tableau, lam: Partition, mu: Partition, s: int) -> bool:
    """Hybrid check: shape kappa/lam and content mu, rows 1..s forced, and the
    rows below the cut (entries lowered by s) a reverse-rule LR tableau."""
    _same_rank(lam, mu)
    n = lam.n
    _check_s(s, n)
    kappa = s_cut(lam, mu, s)
    if t.shape != SkewShape(kappa, lam) or content(t) != mu.parts:
        return False
    rows = t.rows()
    if any(e != r + 1 for r in range(s) for e in rows[r]):
        return False
    lower = [[e - s for e in row] for row in rows[s:]]
    if any(e < 1 for row in lower for e in row):
        return False
    sub_shape = SkewShape(Partition(kappa.parts[s:]), Partition(lam.parts[s:]))
    sub = Tableau.from_rows(sub_shape, lower)
    return is_semistandard_reverse(sub) and is_lattice_reverse(sub)


@dataclass(frozen=True)
class SPoset:
    lam: Partition
    mu: Partition
    s: int
    members: tuple[Partition, ...]

    @property
    def minimum(self) -> Partition:
        return self.members[0]

    def __contains__(self, kappa: Partition) -> bool:
        return kappa in self.members

    def __len__(self) -> int:
        return len(self.members)


def s_poset(lam: Partition, mu: Partition, s: int) -> SPoset:
    """All kappa with c^kappa_{lam,mu} > 0 and kappa_i = lam_i + mu_i for
    i <= s, sorted lex-increasing."""
    _same_rank(lam, mu)
    n = lam.n
    _check_s(s, n)
    head = tuple(lam[i] + mu[i] for i in range(s))
    rest = size(lam) + size(mu) - sum(head)
    cap = head[-1] if head else rest
    members = []
    for tail in partitions(rest, n - s, max_part=cap):
        kappa = Partition(head + tail.parts)
        if lr_positive(kappa, lam, mu):
            members.append(kappa)
    members.sort()
    return SPoset(lam, mu, s, tuple(members))


def min_of_s_poset(lam: Partition, mu: Partition, s: int) -> Partition:
    """Lex-least member of the s-poset, found by enumeration (not via :func:`s_cut`)."""
    return min(s_poset(lam, mu, s).members)
