"""RSK correspondence between multiset partitions and pairs of multiset tableaux.

A basis diagram of MP_lambda with at most ``n`` blocks becomes a biword of
``n`` columns ``(B^u, B^l)``; row insertion of the bottom entries gives the
insertion tableau T (primed content) and the top entries recorded at each new
cell give S (unprimed content). Tableau entries use the plain symbols
``1..s`` for both tableaux; which content is primed is fixed by the role.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from mpalg.core.combinatorics import (
    EMPTY,
    IntegerPartition,
    Multiset,
    MultisetTableau,
    count_ssmt,
    counts_of,
    enumerate_partitions,
    graded_lex_key,
    multiset_from_counts,
)
from mpalg.core.errors import IncompatibleTableauxError, OracleDataError
from mpalg.core.multiset_algebra import MultisetDiagram, canonicalize, enumerate_basis, transpose

log = logging.getLogger(__name__)

Column = tuple[Multiset, Multiset]


@dataclass(frozen=True)
class MPBiword:
    """Columns ``(B^u, B^l)`` sorted by top, then by bottom, in graded lex order."""

    lam: tuple[int, ...]
    columns: tuple[Column, ...]

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def top(self) -> list[Multiset]:
        return [u for u, _ in self.columns]

    @property
    def bottom(self) -> list[Multiset]:
        return [l for _, l in self.columns]

    @classmethod
    def from_columns(cls, lam: Sequence[int], columns: Sequence[Column]) -> "MPBiword":
        ordered = sorted(
            ((tuple(u), tuple(l)) for u, l in columns),
            key=lambda c: (graded_lex_key(c[0]), graded_lex_key(c[1])),
        )
        return cls(tuple(lam), tuple(ordered))


def to_biword(d: MultisetDiagram, n: int) -> MPBiword:
    """The biword of ``d`` padded with ``n - rank(d)`` empty columns.

    Raises:
        OracleDataError: If ``rank(d) > n``.
    """
    if d.rank > n:
        raise OracleDataError(f"diagram of rank {d.rank} does not fit in {n} columns")
    columns = [(multiset_from_counts(i), multiset_from_counts(j)) for i, j in d.edges]
    columns += [(EMPTY, EMPTY)] * (n - d.rank)
    return MPBiword.from_columns(d.lam, columns)


def _insert(rows: list[list[Multiset]], x: Multiset) -> int:
    """Row-insert ``x``, bumping the leftmost entry strictly greater; returns the row of the new cell."""
    key = graded_lex_key(x)
    for r, row in enumerate(rows):
        for c, y in enumerate(row):
            if graded_lex_key(y) > key:
                row[c], x = x, y
                key = graded_lex_key(x)
                break
        else:
            row.append(x)
            return r
    rows.append([x])
    return len(rows) - 1


def rsk(bw: MPBiword) -> tuple[MultisetTableau, MultisetTableau]:
    """Insertion and recording tableaux ``(T, S)`` of a biword."""
    t_rows: list[list[Multiset]] = []
    s_rows: list[list[Multiset]] = []
    for top, bottom in bw.columns:
        r = _insert(t_rows, bottom)
        if r == len(s_rows):
            s_rows.append([])
        s_rows[r].append(top)
    return MultisetTableau.from_rows(t_rows), MultisetTableau.from_rows(s_rows)


def rsk_of_diagram(d: MultisetDiagram, n: int) -> tuple[MultisetTableau, MultisetTableau]:
    return rsk(to_biword(d, n))


def _check_pair(t: MultisetTableau, s: MultisetTableau, lam: Optional[Sequence[int]]) -> tuple[int, ...]:
    if t.shape != s.shape:
        raise IncompatibleTableauxError(f"shapes {t.shape} and {s.shape} differ", field="shape")
    for name, tab in (("T", t), ("S", s)):
        problems = tab.violations()
        if problems:
            raise IncompatibleTableauxError(problems[0], field=name)
    width = max(max(t.content(), default=0), max(s.content(), default=0))
    if lam is None:
        lam = counts_of(s.content(), width)
    lam = tuple(lam)
    expected = multiset_from_counts(lam)
    if s.content() != expected:
        raise IncompatibleTableauxError(f"content {s.content()} does not match lambda {lam}", field="S")
    if t.content() != expected:
        raise IncompatibleTableauxError(f"content {t.content()} does not match lambda {lam}", field="T")
    return lam


def inverse_rsk(t: MultisetTableau, s: MultisetTableau, lam: Optional[Sequence[int]] = None) -> MultisetDiagram:
    """Recover the diagram whose biword inserts to ``(T, S)``.

    Cells are removed at the largest entry of S, rightmost among equal
    entries; the entry of T there is reverse-bumped upwards, replacing the
    rightmost strictly smaller entry of each row above.

    Raises:
        IncompatibleTableauxError: If shapes differ, a tableau is not
            semistandard, or a content does not match ``lam``.
    """
    lam = _check_pair(t, s, lam)
    t_rows = [list(row) for row in t.rows]
    s_rows = [list(row) for row in s.rows]
    columns: list[Column] = []
    while s_rows:
        # Largest S entry at the end of its row, rightmost among ties.
        r = max(
            range(len(s_rows)),
            key=lambda i: (graded_lex_key(s_rows[i][-1]), len(s_rows[i])),
        )
        top = s_rows[r].pop()
        x = t_rows[r].pop()
        if not s_rows[r]:
            s_rows.pop(r)
            t_rows.pop(r)
        for above in range(r - 1, -1, -1):
            row = t_rows[above]
            key = graded_lex_key(x)
            c = max(i for i, y in enumerate(row) if graded_lex_key(y) < key)
            row[c], x = x, row[c]
        columns.append((top, x))
    columns.reverse()
    edges = [(counts_of(u, len(lam)), counts_of(l, len(lam))) for u, l in columns if u or l]
    return canonicalize(lam, edges)


def transpose_partition(d: MultisetDiagram) -> MultisetDiagram:
    return transpose(d)


def fixed_blocks(d: MultisetDiagram, n: int) -> int:
    """Blocks with ``B^u = B^l``, counting the ``n - rank(d)`` empty columns."""
    return sum(1 for i, j in d.edges if i == j) + (n - d.rank)


def odd_columns(shape: IntegerPartition) -> int:
    return sum(1 for length in shape.conjugate().parts if length % 2)


@dataclass(frozen=True)
class SymmetryReport:
    """Outcome of the transpose checks for one diagram."""

    transpose_swaps: bool
    symmetric: bool
    odd_columns: int
    fixed_blocks: int

    @property
    def ok(self) -> bool:
        return self.transpose_swaps and (not self.symmetric or self.odd_columns == self.fixed_blocks)


def symmetry_check(d: MultisetDiagram, n: int) -> SymmetryReport:
    """Check ``rsk(d^t) = (S, T)`` and, for symmetric d, odd columns = fixed blocks."""
    t, s = rsk_of_diagram(d, n)
    t2, s2 = rsk_of_diagram(transpose(d), n)
    symmetric = transpose(d) == d
    return SymmetryReport(
        transpose_swaps=(t2, s2) == (s, t),
        symmetric=symmetric,
        odd_columns=odd_columns(t.shape),
        fixed_blocks=fixed_blocks(d, n) if symmetric else 0,
    )


def shape_counts(n: int, diagrams: Sequence[MultisetDiagram]) -> Counter:
    """How many of ``diagrams`` insert to each shape."""
    return Counter(rsk_of_diagram(d, n)[0].shape for d in diagrams)


def bimodule_count_identity(lam: Sequence[int], n: int) -> tuple[int, int]:
    """``(#{diagrams of rank <= n}, sum over nu of |SSMT(nu, lam)|^2)``."""
    content = multiset_from_counts(lam)
    lhs = sum(1 for g in enumerate_basis(lam) if g.rank <= n)
    rhs = sum(count_ssmt(nu, content) ** 2 for nu in enumerate_partitions(n))
    return lhs, rhs


__all__ = [
    "MPBiword",
    "SymmetryReport",
    "bimodule_count_identity",
    "fixed_blocks",
    "inverse_rsk",
    "odd_columns",
    "rsk",
    "rsk_of_diagram",
    "shape_counts",
    "symmetry_check",
    "to_biword",
    "transpose_partition",
]
