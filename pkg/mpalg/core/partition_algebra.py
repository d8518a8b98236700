"""The partition algebra P_k(xi).

Diagrams are set partitions of ``{1..k} u {1'..k'}``. Vertices use the wire
encoding throughout: ``j`` is the top vertex ``j`` and ``-j`` is the bottom
vertex ``j'``. Blocks are sorted under the vertex order
``1 < ... < k < 1' < ... < k'`` and the blocks of a diagram are sorted by their
minimal vertex in the same order.

In the product ``d1 d2`` the diagram ``d2`` sits on top: its bottom row is
identified with the top row of ``d1``.
"""

from __future__ import annotations

import enum
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

import sympy

from mpalg.core.combinatorics import bell, set_partitions, validate_block_cover
from mpalg.core.config import LimitsConfig
from mpalg.core.errors import BasisMismatchError, ResourceLimitError
from mpalg.core.exact import ONE, XI, PolyXi, falling_factorial
from mpalg.core.linear import LinearCombination, accumulate

log = logging.getLogger(__name__)

Block = tuple[int, ...]


def _vertex_key(k: int, v: int) -> int:
    return v if v > 0 else k - v


@dataclass(frozen=True, order=True)
class SetPartitionDiagram:
    """A set partition of the ``2k`` vertices in canonical block order.

    Use :meth:`from_blocks` to build one from arbitrary input.
    """

    k: int
    blocks: tuple[Block, ...]

    @classmethod
    def from_blocks(cls, k: int, blocks: Iterable[Iterable[int]]) -> "SetPartitionDiagram":
        """Validate and canonicalize.

        Raises:
            MalformedDiagramError: If the blocks do not partition the vertices.
        """
        raw = [list(b) for b in blocks]
        universe = set(range(1, k + 1)) | set(range(-k, 0))
        validate_block_cover(raw, universe)
        return cls._canonical(k, raw)

    @classmethod
    def _canonical(cls, k: int, blocks: Iterable[Iterable[int]]) -> "SetPartitionDiagram":
        key = lambda v: _vertex_key(k, v)  # noqa: E731
        canon = [tuple(sorted(b, key=key)) for b in blocks if b]
        canon.sort(key=lambda b: key(b[0]))
        return cls(k, tuple(canon))

    @classmethod
    def identity(cls, k: int) -> "SetPartitionDiagram":
        return cls._canonical(k, [(j, -j) for j in range(1, k + 1)])

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @staticmethod
    def top(block: Block) -> tuple[int, ...]:
        return tuple(v for v in block if v > 0)

    @staticmethod
    def bottom(block: Block) -> tuple[int, ...]:
        """Bottom vertices of a block, as unsigned labels."""
        return tuple(-v for v in block if v < 0)

    def top_partition(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(self.top(b)) for b in self.blocks if self.top(b))

    def bottom_partition(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(self.bottom(b)) for b in self.blocks if self.bottom(b))

    def __str__(self) -> str:
        def name(v: int) -> str:
            return str(v) if v > 0 else f"{-v}'"

        return "{" + ", ".join("{" + ",".join(name(v) for v in b) + "}" for b in self.blocks) + "}"


def all_diagrams(k: int, max_count: Optional[int] = None) -> list[SetPartitionDiagram]:
    """The diagram basis A_k, sorted.

    Raises:
        ResourceLimitError: If the Bell number B(2k) exceeds ``max_count``
            (default ``limits.max_enumeration``).
    """
    cap = LimitsConfig().max_enumeration if max_count is None else max_count
    size = bell(2 * k)
    if size > cap:
        raise ResourceLimitError(f"diagram basis A_{k}", size, cap)
    vertices = list(range(1, k + 1)) + list(range(-1, -k - 1, -1))
    out = sorted(SetPartitionDiagram._canonical(k, p) for p in set_partitions(vertices))
    log.debug("enumerated %d diagrams for k=%d", len(out), k)
    return out


def coarsenings(d: SetPartitionDiagram) -> list[SetPartitionDiagram]:
    """All diagrams obtained by merging blocks of ``d``, including ``d``."""
    return _coarsenings(d)


@lru_cache(maxsize=None)
def _coarsenings(d: SetPartitionDiagram) -> list[SetPartitionDiagram]:
    out = []
    for grouping in set_partitions(list(range(d.num_blocks))):
        merged = [[v for i in group for v in d.blocks[i]] for group in grouping]
        out.append(SetPartitionDiagram._canonical(d.k, merged))
    return out


def involution_i(d: SetPartitionDiagram) -> SetPartitionDiagram:
    """Swap every ``j`` with ``j'``."""
    return SetPartitionDiagram._canonical(d.k, [[-v for v in b] for b in d.blocks])


def is_balanced_diagram(d: SetPartitionDiagram) -> bool:
    """True when every block has as many top as bottom vertices."""
    return all(len(d.top(b)) == len(d.bottom(b)) for b in d.blocks)


def color_intervals(lam: Sequence[int]) -> list[int]:
    """Colour of each value ``1..|lam|``; colour ``i`` owns a consecutive interval."""
    return [i for i, size in enumerate(lam) for _ in range(size)]


def alpha(d: SetPartitionDiagram, lam: Optional[Sequence[int]] = None) -> Fraction:
    """Colour-wise multinomial of the bottom block contents.

    With ``lam`` omitted this is ``k! / prod |B_j^l|!``. For a general
    composition ``lam`` of ``k`` the values ``1..k`` are coloured by consecutive
    intervals and the statistic is ``prod_i lam_i! / prod_j prod_i c_ij!`` with
    ``c_ij`` the number of colour-``i`` values in ``B_j^l``.
    """
    lam = (d.k,) if lam is None else tuple(lam)
    colour = color_intervals(lam)
    num = math.prod(math.factorial(x) for x in lam)
    den = 1
    for b in d.blocks:
        counts = Counter(colour[v - 1] for v in d.bottom(b))
        den *= math.prod(math.factorial(c) for c in counts.values())
    return Fraction(num, den)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def compose_diagrams(
    d1: SetPartitionDiagram, d2: SetPartitionDiagram
) -> tuple[SetPartitionDiagram, int]:
    """Stack ``d2`` on top of ``d1`` and contract the middle row.

    Returns:
        The concatenation ``d1 o d2`` and the number of its components that
        lie wholly in the middle row.
    """
    if d1.k != d2.k:
        raise BasisMismatchError(f"cannot compose k={d1.k} with k={d2.k}")
    k = d1.k
    # Nodes 0..k-1 are the top row, k..2k-1 the middle, 2k..3k-1 the bottom.
    uf = _UnionFind(3 * k)

    def upper(v: int) -> int:
        return v - 1 if v > 0 else k - v - 1

    def lower(v: int) -> int:
        return k + v - 1 if v > 0 else 2 * k - v - 1

    for block in d2.blocks:
        nodes = [upper(v) for v in block]
        for a in nodes[1:]:
            uf.union(nodes[0], a)
    for block in d1.blocks:
        nodes = [lower(v) for v in block]
        for a in nodes[1:]:
            uf.union(nodes[0], a)

    components: dict[int, list[int]] = {}
    for node in range(3 * k):
        components.setdefault(uf.find(node), []).append(node)

    blocks = []
    middle = 0
    for nodes in components.values():
        outer = [n + 1 for n in nodes if n < k] + [-(n - 2 * k + 1) for n in nodes if n >= 2 * k]
        if outer:
            blocks.append(outer)
        else:
            middle += 1
    return SetPartitionDiagram._canonical(k, blocks), middle


class Basis(str, enum.Enum):
    """Which basis of P_k(xi) an element is expressed in."""

    DIAGRAM = "diagram"
    ORBIT = "orbit"


class PAElement(LinearCombination[SetPartitionDiagram]):
    """An element of P_k(xi) in the diagram or orbit basis."""

    __slots__ = ("k", "basis")

    def __init__(
        self,
        k: int,
        basis: Basis,
        terms: Mapping[SetPartitionDiagram, PolyXi] | Iterable[tuple[SetPartitionDiagram, PolyXi]] = (),
    ):
        self.k = k
        self.basis = Basis(basis)
        super().__init__(terms)
        for d in self.terms:
            if d.k != k:
                raise BasisMismatchError(f"diagram {d} has k={d.k}, element has k={k}")

    @classmethod
    def of(cls, d: SetPartitionDiagram, basis: Basis = Basis.DIAGRAM, coeff: PolyXi = ONE) -> "PAElement":
        return cls(d.k, basis, {d: coeff})

    def _context(self) -> tuple:
        return (self.k, self.basis.value)

    def _rebuild(self, terms: Mapping[SetPartitionDiagram, PolyXi]) -> "PAElement":
        return PAElement(self.k, self.basis, terms)

    def _check_compatible(self, other: LinearCombination) -> None:
        if not isinstance(other, PAElement):
            raise BasisMismatchError(f"cannot combine PAElement with {type(other).__name__}")
        if other.k != self.k:
            raise BasisMismatchError(f"k mismatch: {self.k} vs {other.k}")
        if other.basis != self.basis:
            raise BasisMismatchError(f"basis mismatch: {self.basis.value} vs {other.basis.value}")


def _require(a: PAElement, b: PAElement, basis: Basis) -> None:
    a._check_compatible(b)
    if a.basis != basis:
        raise BasisMismatchError(f"expected {basis.value}-basis elements, got {a.basis.value}")


def multiply_diagram_basis(a: PAElement, b: PAElement) -> PAElement:
    """Bilinear extension of ``d1 d2 = xi^l (d1 o d2)``."""
    _require(a, b, Basis.DIAGRAM)
    out: dict[SetPartitionDiagram, PolyXi] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            d, loops = compose_diagrams(d1, d2)
            weight = ONE
            for _ in range(loops):
                weight = weight * XI
            accumulate([(d, c1 * c2 * weight)], out)
    return PAElement(a.k, Basis.DIAGRAM, out)


def orbit_from_diagram(a: PAElement) -> PAElement:
    """Rewrite a diagram-basis element in the orbit basis.

    Each ``d`` becomes the sum of ``x_{d'}`` over its coarsenings ``d'``.
    """
    if a.basis != Basis.DIAGRAM:
        raise BasisMismatchError("orbit_from_diagram expects a diagram-basis element")
    out: dict[SetPartitionDiagram, PolyXi] = {}
    for d, c in a.terms.items():
        accumulate(((dp, c) for dp in coarsenings(d)), out)
    return PAElement(a.k, Basis.ORBIT, out)


@lru_cache(maxsize=None)
def _orbit_element_in_diagrams(d: SetPartitionDiagram) -> tuple[tuple[SetPartitionDiagram, int], ...]:
    # x_d = d - sum of x_{d'} over strict coarsenings d'
    out: dict[SetPartitionDiagram, int] = {d: 1}
    for dp in coarsenings(d):
        if dp == d:
            continue
        for label, c in _orbit_element_in_diagrams(dp):
            out[label] = out.get(label, 0) - c
    return tuple((label, c) for label, c in out.items() if c)


def diagram_from_orbit(a: PAElement) -> PAElement:
    """Rewrite an orbit-basis element in the diagram basis by back-substitution."""
    if a.basis != Basis.ORBIT:
        raise BasisMismatchError("diagram_from_orbit expects an orbit-basis element")
    out: dict[SetPartitionDiagram, PolyXi] = {}
    for d, c in a.terms.items():
        accumulate(((label, c * m) for label, m in _orbit_element_in_diagrams(d)), out)
    return PAElement(a.k, Basis.DIAGRAM, out)


def _partial_matchings(left: Sequence[int], right: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    for r in range(min(len(left), len(right)) + 1):
        for chosen in itertools.combinations(left, r):
            for image in itertools.permutations(right, r):
                yield list(zip(chosen, image))


@lru_cache(maxsize=None)
def orbit_product(
    d1: SetPartitionDiagram, d2: SetPartitionDiagram
) -> tuple[tuple[SetPartitionDiagram, PolyXi], ...]:
    """Orbit-basis product ``x_{d1} x_{d2}`` as ``(d, coefficient)`` pairs."""
    if d1.top_partition() != d2.bottom_partition():
        return ()
    k = d1.k
    by_middle_top = {frozenset(d1.top(b)): b for b in d1.blocks if d1.top(b)}
    by_middle_bottom = {frozenset(d2.bottom(b)): b for b in d2.blocks if d2.bottom(b)}

    glued: list[list[int]] = []
    middle = 0
    for part, lower in by_middle_top.items():
        upper = by_middle_bottom[part]
        merged = list(d2.top(upper)) + [-v for v in d1.bottom(lower)]
        if merged:
            glued.append(merged)
        else:
            middle += 1
    top_only = [list(b) for b in d2.blocks if not d2.bottom(b)]
    bottom_only = [list(b) for b in d1.blocks if not d1.top(b)]

    out: dict[SetPartitionDiagram, PolyXi] = {}
    for matching in _partial_matchings(range(len(top_only)), range(len(bottom_only))):
        used_top = {i for i, _ in matching}
        used_bottom = {j for _, j in matching}
        blocks = list(glued)
        blocks += [top_only[i] + bottom_only[j] for i, j in matching]
        blocks += [top_only[i] for i in range(len(top_only)) if i not in used_top]
        blocks += [bottom_only[j] for j in range(len(bottom_only)) if j not in used_bottom]
        d = SetPartitionDiagram._canonical(k, blocks)
        coeff = falling_factorial(XI - d.num_blocks, middle)
        accumulate([(d, coeff)], out)
    return tuple(sorted(out.items()))


def multiply_orbit_basis(a: PAElement, b: PAElement) -> PAElement:
    """Multiply two orbit-basis elements directly in the orbit basis."""
    _require(a, b, Basis.ORBIT)
    out: dict[SetPartitionDiagram, PolyXi] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            coeff = c1 * c2
            accumulate(((d, coeff * m) for d, m in orbit_product(d1, d2)), out)
    return PAElement(a.k, Basis.ORBIT, out)


def multiply(a: PAElement, b: PAElement) -> PAElement:
    """Multiply in whichever basis both operands share."""
    if a.basis == Basis.ORBIT:
        return multiply_orbit_basis(a, b)
    return multiply_diagram_basis(a, b)


def involution(a: PAElement) -> PAElement:
    """Apply ``i`` to every basis label."""
    return a.map_labels(involution_i)


def kernel_diagram(top: Sequence[int], bottom: Sequence[int]) -> SetPartitionDiagram:
    """The diagram whose blocks are the vertices sharing an index value."""
    groups: dict[int, list[int]] = {}
    for j, value in enumerate(top, start=1):
        groups.setdefault(value, []).append(j)
    for j, value in enumerate(bottom, start=1):
        groups.setdefault(value, []).append(-j)
    return SetPartitionDiagram._canonical(len(top), groups.values())


def phi_k_matrix(x: PAElement, n: int, max_dim: Optional[int] = None) -> sympy.ImmutableMatrix:
    """The action of an orbit-basis element on the k-fold tensor power of F^n.

    Rows are indexed by the bottom index tuple and columns by the top index
    tuple, both in lexicographic order. The entry of ``x_d`` is 1 exactly when
    two of the ``2k`` indices agree if and only if their vertices share a block
    of ``d``, so each position is hit by the single diagram equal to the
    kernel of its index labelling.

    Raises:
        BasisMismatchError: If ``x`` is not in the orbit basis.
        ResourceLimitError: If ``n**k`` exceeds ``max_dim``.
    """
    if x.basis != Basis.ORBIT:
        raise BasisMismatchError("phi_k_matrix expects an orbit-basis element")
    cap = LimitsConfig().max_matrix_dim if max_dim is None else max_dim
    size = n ** x.k
    if size > cap:
        raise ResourceLimitError("tensor-power matrix", size, cap)
    tuples = list(itertools.product(range(n), repeat=x.k))
    values = {d: c(n) for d, c in x.terms.items()}
    rows = []
    for bottom in tuples:
        row = []
        for top in tuples:
            value = values.get(kernel_diagram(top, bottom), 0)
            row.append(sympy.Rational(value.numerator, value.denominator) if value else 0)
        rows.append(row)
    log.debug("phi_k matrix of dimension %d for k=%d, n=%d", size, x.k, n)
    return sympy.ImmutableMatrix(rows)
