"""Enumeration and ordering primitives.

Multisets over the alphabet ``1..s`` are stored as sorted tuples of symbols.
The graded lexicographic order compares cardinality first and then the sorted
entries, so the empty multiset is the minimum.
"""

from __future__ import annotations

import enum
import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from sympy import bell as _sympy_bell
from sympy.utilities.iterables import multiset_partitions, partitions

from mpalg.core.config import LimitsConfig
from mpalg.core.errors import MalformedDiagramError, ResourceLimitError

log = logging.getLogger(__name__)

Multiset = tuple[int, ...]
EMPTY: Multiset = ()


class Ordering(enum.IntEnum):
    """Result of a three-way comparison."""

    LT = -1
    EQ = 0
    GT = 1


def multiset(symbols: Iterable[int]) -> Multiset:
    """Canonical sorted storage of a multiset."""
    return tuple(sorted(symbols))


def multiset_from_counts(counts: Sequence[int]) -> Multiset:
    """Expand a multiplicity vector ``(c_1, ..., c_s)`` to ``{1^c_1, ..., s^c_s}``."""
    return tuple(sym for sym, c in enumerate(counts, start=1) for _ in range(c))


def counts_of(m: Multiset, s: int) -> tuple[int, ...]:
    """Multiplicity vector of ``m`` over the alphabet ``1..s``."""
    out = [0] * s
    for sym in m:
        if not 1 <= sym <= s:
            raise ValueError(f"symbol {sym} outside the alphabet 1..{s}")
        out[sym - 1] += 1
    return tuple(out)


def graded_lex_key(m: Multiset) -> tuple[int, Multiset]:
    """Sort key realising the graded lexicographic order."""
    return (len(m), m)


def graded_lex_compare(m1: Multiset, m2: Multiset) -> Ordering:
    """Compare two multisets in graded lexicographic order."""
    k1, k2 = graded_lex_key(multiset(m1)), graded_lex_key(multiset(m2))
    if k1 < k2:
        return Ordering.LT
    if k1 > k2:
        return Ordering.GT
    return Ordering.EQ


def sub_multisets(counts: Sequence[int]) -> list[Multiset]:
    """All sub-multisets of ``{1^c_1, ..., s^c_s}`` in graded lex order."""
    ranges = [range(c + 1) for c in counts]
    subs = [multiset_from_counts(v) for v in itertools.product(*ranges)]
    return sorted(subs, key=graded_lex_key)


# Weak compositions


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographically."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True, order=True)
class WeakCompositionMatrix:
    """An ``s x n`` grid of non-negative integers whose row ``i`` sums to lambda_i.

    Attributes:
        rows: The grid, one tuple per colour.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def lam(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.n)]

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], s: int) -> "WeakCompositionMatrix":
        return cls(tuple(tuple(col[i] for col in columns) for i in range(s)))

    def permute_columns(self, perm: Sequence[int]) -> "WeakCompositionMatrix":
        """Column ``j`` of the result is column ``perm[j]`` of this matrix."""
        return WeakCompositionMatrix(tuple(tuple(r[p] for p in perm) for r in self.rows))


def enumerate_weak_compositions(n: int, lam: Sequence[int]) -> list[WeakCompositionMatrix]:
    """All of M(n, lambda) in row-major lexicographic order.

    Args:
        n: Number of columns, at least 1.
        lam: Row targets.

    Returns:
        ``prod_i C(n + lambda_i - 1, lambda_i)`` matrices.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    per_row = [list(weak_compositions(t, n)) for t in lam]
    return [WeakCompositionMatrix(tuple(rows)) for rows in itertools.product(*per_row)]


def count_weak_compositions(n: int, lam: Sequence[int]) -> int:
    return math.prod(math.comb(n + t - 1, t) for t in lam)


# Integer partitions


@dataclass(frozen=True, order=True)
class IntegerPartition:
    """A weakly decreasing sequence of positive parts.

    Trailing zeros are dropped on construction.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {self.parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must weakly decrease: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "IntegerPartition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def conjugate(self) -> "IntegerPartition":
        if not self.parts:
            return self
        return IntegerPartition(
            tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))
        )

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, length in enumerate(self.parts) for c in range(length)]

    def hook_lengths(self) -> list[list[int]]:
        """Hook length of every cell, row by row."""
        conj = self.conjugate().parts
        return [
            [length - c + conj[c] - r - 1 for c in range(length)]
            for r, length in enumerate(self.parts)
        ]

    def b_statistic(self) -> int:
        """The weighted sum ``sum_i (i - 1) nu_i``."""
        return sum(i * p for i, p in enumerate(self.parts))


def enumerate_partitions(n: int) -> list[IntegerPartition]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return [IntegerPartition(())]
    out = []
    for mults in partitions(n):
        parts = sorted((p for p, m in mults.items() for _ in range(m)), reverse=True)
        out.append(IntegerPartition(tuple(parts)))
    return sorted(out, key=lambda nu: nu.parts, reverse=True)


def count_syt(nu: IntegerPartition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    hooks = math.prod(h for row in nu.hook_lengths() for h in row)
    return math.factorial(nu.size) // hooks


# Set partitions and contingency tables


def bell(m: int) -> int:
    return int(_sympy_bell(m))


def set_partitions(elements: Sequence[int]) -> Iterator[list[list[int]]]:
    """All set partitions of distinct ``elements``."""
    if not elements:
        yield []
        return
    yield from multiset_partitions(list(elements))


def contingency_tables(
    row_sums: Sequence[int], col_sums: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Non-negative integer matrices with the given margins.

    Yields nothing when the margins have different totals.
    """
    if sum(row_sums) != sum(col_sums):
        return

    def fill(r: int, remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if r == len(row_sums) - 1:
            yield (remaining,)
            return
        for row in _bounded_compositions(row_sums[r], remaining):
            left = tuple(c - x for c, x in zip(remaining, row))
            for rest in fill(r + 1, left):
                yield (row,) + rest

    if not row_sums:
        if sum(col_sums) == 0:
            yield ()
        return
    yield from fill(0, tuple(col_sums))


def _bounded_compositions(total: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not bounds:
        if total == 0:
            yield ()
        return
    head, tail = bounds[0], bounds[1:]
    slack = sum(tail)
    for first in range(max(0, total - slack), min(head, total) + 1):
        for rest in _bounded_compositions(total - first, tail):
            yield (first,) + rest


def multinomial(total: int, parts: Iterable[int]) -> int:
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


# Semistandard multiset tableaux


@dataclass(frozen=True)
class MultisetTableau:
    """A filling of a Young diagram by multisets.

    Attributes:
        shape: The Young diagram.
        rows: Entries row by row; ``rows[r]`` has ``shape.parts[r]`` cells.
    """

    shape: IntegerPartition
    rows: tuple[tuple[Multiset, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Iterable[int]]]) -> "MultisetTableau":
        canon = tuple(tuple(multiset(cell) for cell in row) for row in rows if len(row) > 0)
        return cls(IntegerPartition(tuple(len(r) for r in canon)), canon)

    def entry(self, r: int, c: int) -> Multiset:
        return self.rows[r][c]

    def content(self) -> Multiset:
        return multiset(sym for row in self.rows for cell in row for sym in cell)

    def violations(self) -> list[str]:
        """Describe every broken tableau rule; empty when semistandard."""
        problems = []
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            problems.append(f"row lengths {[len(r) for r in self.rows]} do not match shape {self.shape}")
            return problems
        for r, row in enumerate(self.rows):
            for c, cell in enumerate(row):
                if tuple(sorted(cell)) != cell:
                    problems.append(f"cell ({r},{c}) is not sorted")
                if c > 0 and graded_lex_key(row[c - 1]) > graded_lex_key(cell):
                    problems.append(f"row {r} decreases at column {c}")
                if r > 0 and graded_lex_key(self.rows[r - 1][c]) >= graded_lex_key(cell):
                    problems.append(f"column {c} does not strictly increase at row {r}")
        return problems

    def is_semistandard(self) -> bool:
        return not self.violations()


def enumerate_ssmt(nu: IntegerPartition, content: Multiset, max_count: Optional[int] = None) -> list[MultisetTableau]:
    """All semistandard multiset tableaux of shape ``nu`` and the given content.

    Cells are filled in column-reading order (top to bottom, left to right),
    trying candidate entries in graded lex order, so the output is sorted
    lexicographically by the sequence of chosen entries.

    Raises:
        ResourceLimitError: Once more than ``max_count`` tableaux are found
            (default ``limits.max_enumeration``).
    """
    cap = LimitsConfig().max_enumeration if max_count is None else max_count
    content = multiset(content)
    s = max(content, default=0)
    total = counts_of(content, s)
    candidates = [(m, counts_of(m, s), graded_lex_key(m)) for m in sub_multisets(total)]
    cells = sorted(nu.cells(), key=lambda rc: (rc[1], rc[0]))

    grid: dict[tuple[int, int], tuple[Multiset, tuple[int, Multiset]]] = {}
    found: list[MultisetTableau] = []

    def place(i: int, remaining: tuple[int, ...]) -> None:
        if i == len(cells):
            if not any(remaining):
                rows = tuple(
                    tuple(grid[(r, c)][0] for c in range(length))
                    for r, length in enumerate(nu.parts)
                )
                if len(found) == cap:
                    raise ResourceLimitError(f"SSMT of shape {nu}", len(found) + 1, cap)
                found.append(MultisetTableau(nu, rows))
            return
        r, c = cells[i]
        left = grid[(r, c - 1)][1] if c > 0 else None
        above = grid[(r - 1, c)][1] if r > 0 else None
        for m, vec, key in candidates:
            if left is not None and key < left:
                continue
            if above is not None and key <= above:
                continue
            if any(v > rem for v, rem in zip(vec, remaining)):
                continue
            grid[(r, c)] = (m, key)
            place(i + 1, tuple(rem - v for rem, v in zip(remaining, vec)))
        grid.pop((r, c), None)

    place(0, total)
    log.debug("enumerated %d SSMT of shape %s, content %s", len(found), nu, content)
    return found


@lru_cache(maxsize=None)
def count_ssmt(nu: IntegerPartition, content: Multiset) -> int:
    return len(enumerate_ssmt(nu, content))


def validate_block_cover(blocks: Sequence[Sequence[int]], universe: set[int]) -> None:
    """Check that ``blocks`` are non-empty, disjoint, and cover ``universe``.

    Raises:
        MalformedDiagramError: Naming the first offending vertex or block.
    """
    seen: set[int] = set()
    for b, block in enumerate(blocks):
        if not block:
            raise MalformedDiagramError("empty block", field=f"blocks[{b}]")
        for v in block:
            if v not in universe:
                raise MalformedDiagramError(f"vertex {v} out of range", field=f"blocks[{b}]")
            if v in seen:
                raise MalformedDiagramError(f"vertex {v} appears twice", field=f"blocks[{b}]")
            seen.add(v)
    missing = universe - seen
    if missing:
        raise MalformedDiagramError(f"vertices {sorted(missing)} not covered", field="blocks")
