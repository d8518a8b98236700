"""Explicit operators on the permutation module F[M(n, lambda)].

The basis of F[M(n, lambda)] is the list of weak composition matrices in
row-major lexicographic order. Matrices act on column vectors: the column of
basis element ``a`` holds the image of ``1_a``.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections import Counter
from dataclasses import dataclass
from typing import Literal, Optional, Sequence

import sympy

from mpalg.core.combinatorics import (
    WeakCompositionMatrix,
    count_weak_compositions,
    enumerate_weak_compositions,
)
from mpalg.core.config import LimitsConfig
from mpalg.core.errors import BasisMismatchError, OracleDataError, ResourceLimitError
from mpalg.core.multiset_algebra import MPElement, MultisetDiagram, enumerate_basis

log = logging.getLogger(__name__)

GroupName = Literal["sn", "monomial"]


@dataclass(frozen=True)
class OperatorMatrix:
    """A square matrix over Q on F[M(n, lambda)].

    Attributes:
        n: Number of columns of the weak composition matrices.
        lam: Row targets lambda.
        basis: Ordered basis of F[M(n, lambda)].
        entries: The matrix, exact rationals.
    """

    n: int
    lam: tuple[int, ...]
    basis: tuple[WeakCompositionMatrix, ...]
    entries: sympy.ImmutableMatrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if (self.n, self.lam) != (other.n, other.lam):
            raise BasisMismatchError("operators act on different modules")
        return OperatorMatrix(self.n, self.lam, self.basis, sympy.ImmutableMatrix(self.entries * other.entries))

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if (self.n, self.lam) != (other.n, other.lam):
            raise BasisMismatchError("operators act on different modules")
        return OperatorMatrix(self.n, self.lam, self.basis, sympy.ImmutableMatrix(self.entries + other.entries))

    def is_zero(self) -> bool:
        return self.entries.is_zero_matrix

    def flatten(self) -> list:
        return list(self.entries)


def module_basis(n: int, lam: Sequence[int], max_dim: Optional[int] = None) -> list[WeakCompositionMatrix]:
    """Basis of F[M(n, lambda)], refusing dimensions above the cap.

    Raises:
        ResourceLimitError: If the dimension exceeds ``max_dim``.
    """
    cap = LimitsConfig().max_matrix_dim if max_dim is None else max_dim
    size = count_weak_compositions(n, lam)
    if size > cap:
        raise ResourceLimitError("permutation module", size, cap)
    return enumerate_weak_compositions(n, lam)


def orbit_of_pair(a: WeakCompositionMatrix, b: WeakCompositionMatrix) -> MultisetDiagram:
    """The diagram with one edge ``(column_j(a), column_j(b))`` per column.

    Raises:
        BasisMismatchError: If ``a`` and ``b`` differ in ``n`` or lambda.
    """
    if a.n != b.n or a.lam != b.lam:
        raise BasisMismatchError("pair of compositions with different shapes")
    # Columns of two members of M(n, lambda) always satisfy the weight condition.
    edges = sorted((i, j) for i, j in zip(a.columns(), b.columns()) if any(i) or any(j))
    return MultisetDiagram(a.lam, tuple(edges))


def _assemble(n: int, lam: tuple[int, ...], basis: Sequence[WeakCompositionMatrix], cells: dict) -> OperatorMatrix:
    dim = len(basis)
    matrix = sympy.SparseMatrix(dim, dim, cells)
    return OperatorMatrix(n, lam, tuple(basis), sympy.ImmutableMatrix(matrix))


def integral_operator(g: MultisetDiagram, n: int, max_dim: Optional[int] = None) -> OperatorMatrix:
    """The 0/1 operator sending ``1_a`` to the sum of ``1_b`` with ``orbit_of_pair(a, b) = g``.

    Raises:
        OracleDataError: If ``rank(g) > n``.
    """
    if g.rank > n:
        raise OracleDataError(f"rank {g.rank} exceeds n={n}")
    basis = module_basis(n, g.lam, max_dim)
    cells = {}
    for col, a in enumerate(basis):
        for row, b in enumerate(basis):
            if orbit_of_pair(a, b) == g:
                cells[(row, col)] = 1
    log.debug("integral operator for %s at n=%d: %d non-zero entries", g, n, len(cells))
    return _assemble(n, g.lam, basis, cells)


def phi(a: MPElement, n: int, max_dim: Optional[int] = None) -> OperatorMatrix:
    """Image of an MP element on F[M(n, lambda)] with xi specialised to ``n``.

    Diagrams of rank above ``n`` lie in the kernel and contribute nothing.
    """
    basis = module_basis(n, a.lam, max_dim)
    weights = {g: c(n) for g, c in a.terms.items() if g.rank <= n}
    cells: dict[tuple[int, int], sympy.Rational] = {}
    for col, x in enumerate(basis):
        for row, y in enumerate(basis):
            value = weights.get(orbit_of_pair(x, y))
            if value:
                cells[(row, col)] = sympy.Rational(value.numerator, value.denominator)
    return _assemble(n, a.lam, basis, cells)


def representative_pair(
    g: MultisetDiagram, n: int, rng: Optional[random.Random] = None
) -> tuple[WeakCompositionMatrix, WeakCompositionMatrix]:
    """A pair ``(a, c)`` realising ``g``, with columns shuffled when ``rng`` is given.

    Raises:
        OracleDataError: If ``rank(g) > n``.
    """
    if g.rank > n:
        raise OracleDataError(f"no pair in M({n}, {g.lam}) realises a rank-{g.rank} diagram")
    zero = (0,) * g.s
    columns = list(g.edges) + [(zero, zero)] * (n - g.rank)
    if rng is not None:
        rng.shuffle(columns)
    a = WeakCompositionMatrix.from_columns([i for i, _ in columns], g.s)
    c = WeakCompositionMatrix.from_columns([j for _, j in columns], g.s)
    return a, c


def brute_force_structure_count(
    g1: MultisetDiagram,
    g2: MultisetDiagram,
    g: MultisetDiagram,
    n: int,
    pair: Optional[tuple[WeakCompositionMatrix, WeakCompositionMatrix]] = None,
) -> int:
    """Count ``b`` with ``orbit_of_pair(a, b) = g2`` and ``orbit_of_pair(b, c) = g1``.

    Args:
        g1: Lower factor.
        g2: Upper factor.
        g: Target diagram, realised by ``pair`` or by a default representative.
        n: Number of columns.
        pair: Optional ``(a, c)`` with ``orbit_of_pair(a, c) = g``.

    Raises:
        OracleDataError: If ``g`` cannot be realised at ``n`` or ``pair``
            does not realise it.
    """
    a, c = pair if pair is not None else representative_pair(g, n)
    if orbit_of_pair(a, c) != g:
        raise OracleDataError("the given pair does not realise the target diagram")
    count = 0
    for b in enumerate_weak_compositions(n, g.lam):
        if orbit_of_pair(a, b) == g2 and orbit_of_pair(b, c) == g1:
            count += 1
    return count


def structure_count_table(
    g: MultisetDiagram, n: int, pair: Optional[tuple[WeakCompositionMatrix, WeakCompositionMatrix]] = None
) -> Counter:
    """Brute-force counts for every factor pair at once.

    One pass over ``M(n, lambda)`` tallies ``b`` by
    ``(orbit_of_pair(b, c), orbit_of_pair(a, b))``; the entry at ``(g1, g2)``
    equals ``brute_force_structure_count(g1, g2, g, n)``.
    """
    a, c = pair if pair is not None else representative_pair(g, n)
    tally: Counter = Counter()
    for b in enumerate_weak_compositions(n, g.lam):
        tally[(orbit_of_pair(b, c), orbit_of_pair(a, b))] += 1
    return tally


def centralizer_dimension(n: int, lam: Sequence[int], max_dim: Optional[int] = None) -> int:
    """Number of S_n orbits on ``M(n, lambda)^2``, by canonical orbit hashing."""
    basis = module_basis(n, lam, max_dim)
    return len({orbit_of_pair(a, b) for a in basis for b in basis})


def basis_rank_at_most(lam: Sequence[int], n: int) -> int:
    """Number of basis diagrams of rank at most ``n``."""
    return sum(1 for g in enumerate_basis(lam) if g.rank <= n)


def permutation_operator(perm: Sequence[int], n: int, lam: Sequence[int], max_dim: Optional[int] = None) -> OperatorMatrix:
    """The permutation matrix of ``sigma`` acting on column positions.

    ``perm[j]`` is the image of column ``j``; ``1_a`` goes to ``1_{sigma a}``
    where column ``perm[j]`` of ``sigma a`` is column ``j`` of ``a``.
    """
    basis = module_basis(n, lam, max_dim)
    index = {b: i for i, b in enumerate(basis)}
    inverse = [0] * n
    for j, p in enumerate(perm):
        inverse[p] = j
    cells = {(index[a.permute_columns(inverse)], col): 1 for col, a in enumerate(basis)}
    return _assemble(n, tuple(lam), basis, cells)


def generators(n: int, lam: Sequence[int], max_dim: Optional[int] = None) -> list[OperatorMatrix]:
    """Matrices of the transposition (1 2) and the n-cycle on F[M(n, lambda)]."""
    if n == 1:
        return [permutation_operator([0], n, lam, max_dim)]
    swap = [1, 0] + list(range(2, n))
    cycle = [(j + 1) % n for j in range(n)]
    return [permutation_operator(swap, n, lam, max_dim), permutation_operator(cycle, n, lam, max_dim)]


def preserves_column_sums(m: OperatorMatrix) -> bool:
    """True when every non-zero entry joins compositions with equal column sums."""
    sums = [tuple(sum(col) for col in b.columns()) for b in m.basis]
    for row in range(m.dim):
        for col in range(m.dim):
            if m.entries[row, col] != 0 and sums[row] != sums[col]:
                return False
    return True


def commutant_check(m: OperatorMatrix, group: GroupName = "sn") -> bool:
    """Whether ``m`` commutes with the S_n generators, or with the monomial group.

    The monomial check adds the torus: commuting with ``diag(x, 1, ..., 1)``
    and its S_n conjugates is equivalent to preserving column sums.
    """
    for p in generators(m.n, m.lam):
        if p.entries * m.entries != m.entries * p.entries:
            return False
    if group == "monomial":
        return preserves_column_sums(m)
    return True


def commutant_dimension(n: int, lam: Sequence[int], max_dim: Optional[int] = None) -> int:
    """Dimension of the full commutant, solving ``X P = P X`` over Q for the generators."""
    gens = generators(n, lam, max_dim)
    dim = gens[0].dim
    equations = []
    for p in gens:
        pm = p.entries
        for i, j in itertools.product(range(dim), repeat=2):
            row = [0] * (dim * dim)
            # (X P)[i, j] - (P X)[i, j]
            for t in range(dim):
                if pm[t, j]:
                    row[i * dim + t] += pm[t, j]
                if pm[i, t]:
                    row[t * dim + j] -= pm[i, t]
            if any(row):
                equations.append(row)
    if not equations:
        return dim * dim
    rank = sympy.Matrix(equations).rank()
    return dim * dim - rank


def span_dimension(operators: Sequence[OperatorMatrix]) -> int:
    """Rank over Q of the operators viewed as flattened vectors."""
    if not operators:
        return 0
    return sympy.Matrix([op.flatten() for op in operators]).rank()


def kernel_dimension(lam: Sequence[int], n: int, max_dim: Optional[int] = None) -> int:
    """Dimension of the kernel of phi on the basis of MP_lambda, by rank over Q."""
    basis = enumerate_basis(lam)
    images = [phi(MPElement.of(g), n, max_dim) for g in basis]
    return len(basis) - span_dimension(images)
