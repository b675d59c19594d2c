"""Skew tableaux and Littlewood-Richardson coefficients.

Two equivalent rules are supported. The *forward* rule asks for rows weakly
increasing left to right, columns strictly increasing top to bottom, and a
lattice word when reading right to left, top to bottom. The *reverse* rule
mirrors all three: rows weakly increase right to left, columns strictly
increase bottom to top, and the word is read left to right, bottom to top.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import PartitionError
from .partition import Partition, SkewShape, _same_rank, contains, size


class Convention(str, enum.Enum):
    FORWARD = "forward"
    REVERSE = "reverse"


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape. ``entries`` follow :meth:`SkewShape.boxes`
    order (row-major, left to right)."""

    shape: SkewShape
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.shape.size:
            raise PartitionError(
                f"{len(self.entries)} entries for a shape with {self.shape.size} boxes"
            )
        n = self.shape.n
        if any(not 1 <= e <= n for e in self.entries):
            raise PartitionError(f"entries must lie in 1..{n}: {self.entries}")

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Sequence[Sequence[int]]) -> Tableau:
        """Build from per-row entry lists (skew boxes only; empty rows may be omitted at the end)."""
        flat: list[int] = []
        for row in rows:
            flat.extend(row)
        return cls(shape, tuple(flat))

    @property
    def n(self) -> int:
        return self.shape.n

    def grid(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.shape.boxes(), self.entries))

    def rows(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for (r, _), e in zip(self.shape.boxes(), self.entries):
            out[r].append(e)
        return out

    def render(self) -> str:
        """One line per row, ``.`` for boxes of the inner shape."""
        lines = []
        for r, row in enumerate(self.rows()):
            if self.shape.outer[r] == 0:
                continue
            cells = ["."] * self.shape.inner[r] + [str(e) for e in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rows": self.rows(),
        }


def content(t: Tableau) -> tuple[int, ...]:
    counts = [0] * t.n
    for e in t.entries:
        counts[e - 1] += 1
    return tuple(counts)


def is_semistandard(t: Tableau) -> bool:
    g = t.grid()
    for (r, c), e in g.items():
        right = g.get((r, c + 1))
        if right is not None and right < e:
            return False
        below = g.get((r + 1, c))
        if below is not None and below <= e:
            return False
    return True


def is_semistandard_reverse(t: Tableau) -> bool:
    g = t.grid()
    for (r, c), e in g.items():
        # moving left the entries may not decrease
        right = g.get((r, c + 1))
        if right is not None and right > e:
            return False
        # moving up the entries strictly increase
        below = g.get((r + 1, c))
        if below is not None and below >= e:
            return False
    return True


def _is_lattice_word(word: Sequence[int], n: int) -> bool:
    counts = [0] * (n + 2)
    for w in word:
        counts[w] += 1
        if w > 1 and counts[w] > counts[w - 1]:
            return False
    return True


def reading_word(t: Tableau, convention: Convention = Convention.FORWARD) -> list[int]:
    rows = t.rows()
    if Convention(convention) is Convention.FORWARD:
        return [e for row in rows for e in reversed(row)]
    return [e for row in reversed(rows) for e in row]


def is_lattice_forward(t: Tableau) -> bool:
    return _is_lattice_word(reading_word(t, Convention.FORWARD), t.n)


def is_lattice_reverse(t: Tableau) -> bool:
    return _is_lattice_word(reading_word(t, Convention.REVERSE), t.n)


def is_lr_tableau(t: Tableau, content_: Sequence[int], convention: Convention) -> bool:
    """Check all four conditions of the chosen rule."""
    if tuple(content(t)) != tuple(content_):
        return False
    if Convention(convention) is Convention.FORWARD:
        return is_semistandard(t) and is_lattice_forward(t)
    return is_semistandard_reverse(t) and is_lattice_reverse(t)


def _fillings(
    outer: tuple[int, ...],
    inner: tuple[int, ...],
    weight: tuple[int, ...],
    convention: Convention,
) -> Iterator[dict[tuple[int, int], int]]:
    """Backtrack over boxes in the reading order of ``convention``.

    Every box is placed after the neighbours that constrain it, so the row,
    column, content and lattice-prefix conditions are all checked on placement.
    The same dict is mutated and yielded; copy it if you keep it.
    """
    n = len(outer)
    if convention is Convention.FORWARD:
        order = [(r, c) for r in range(n) for c in reversed(range(inner[r], outer[r]))]
    else:
        order = [(r, c) for r in reversed(range(n)) for c in range(inner[r], outer[r])]

    # Neighbour bounds per box: (box that caps the value from above, box that
    # bounds it strictly from below).
    bounds = []
    for r, c in order:
        if convention is Convention.FORWARD:
            weak = (r, c + 1) if c + 1 < outer[r] else None
            strict = (r - 1, c) if r > 0 and c >= inner[r - 1] else None
        else:
            weak = (r, c - 1) if c - 1 >= inner[r] else None
            strict = (r + 1, c) if r + 1 < n and inner[r + 1] <= c < outer[r + 1] else None
        bounds.append((weak, strict))

    grid: dict[tuple[int, int], int] = {}
    used = [0] * (n + 1)
    total = len(order)

    def place(k: int) -> Iterator[dict[tuple[int, int], int]]:
        if k == total:
            yield grid
            return
        box = order[k]
        weak, strict = bounds[k]
        hi = grid[weak] if weak is not None else n
        lo = grid[strict] + 1 if strict is not None else 1
        for v in range(lo, hi + 1):
            if used[v] >= weight[v - 1]:
                continue
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            used[v] += 1
            grid[box] = v
            yield from place(k + 1)
            del grid[box]
            used[v] -= 1

    yield from place(0)


def _check_args(shape: SkewShape, content_: Partition) -> bool:
    _same_rank(shape.outer, content_)
    return shape.size == size(content_)


def enumerate_lr(
    shape: SkewShape, content_: Partition, convention: Convention = Convention.FORWARD
) -> list[Tableau]:
    """All LR tableaux of ``shape`` with the given content under ``convention``,
    sorted lexicographically by their row-major entry sequence."""
    convention = Convention(convention)
    if not _check_args(shape, content_):
        return []
    boxes = shape.boxes()
    found = [
        tuple(g[b] for b in boxes)
        for g in _fillings(shape.outer.parts, shape.inner.parts, content_.parts, convention)
    ]
    found.sort()
    return [Tableau(shape, entries) for entries in found]


@lru_cache(maxsize=None)
def _lr_count(outer, inner, weight, convention) -> int:
    return sum(1 for _ in _fillings(outer, inner, weight, convention))


def lr_coefficient(
    lam: Partition, mu: Partition, nu: Partition, convention: Convention = Convention.FORWARD
) -> int:
    """c^lam_{mu,nu}: the number of LR tableaux of shape lam/mu and content nu."""
    _same_rank(lam, mu, nu)
    if not contains(lam, mu) or size(lam) != size(mu) + size(nu):
        return 0
    return _lr_count(lam.parts, mu.parts, nu.parts, Convention(convention))


@lru_cache(maxsize=None)
def _lr_positive(outer, inner, weight) -> bool:
    return next(_fillings(outer, inner, weight, Convention.FORWARD), None) is not None


def lr_positive(lam: Partition, mu: Partition, nu: Partition) -> bool:
    """Whether c^lam_{mu,nu} > 0; stops at the first tableau found."""
    _same_rank(lam, mu, nu)
    if not contains(lam, mu) or size(lam) != size(mu) + size(nu):
        return False
    return _lr_positive(lam.parts, mu.parts, nu.parts)
