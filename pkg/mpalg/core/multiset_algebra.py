"""The multiset partition algebra MP_lambda(xi).

A basis diagram is an equivalence class of bipartite multigraphs on the
vertex set ``{0..lambda_1} x ... x {0..lambda_s}``, stored as the sorted
multiset of its non-zero edges ``(I, J)``. The k case is ``lambda = (k,)``.

Products are computed from path configurations: multisets of triples
``(I, L, J)`` whose top pairs ``(I, L)`` reproduce the edges of the upper
factor and whose bottom pairs ``(L, J)`` reproduce the edges of the lower
factor, both padded with zero edges to ``rank(g1) + rank(g2)`` paths.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from sympy.utilities.iterables import multiset_partitions

from mpalg.core.combinatorics import contingency_tables, multinomial
from mpalg.core.config import LimitsConfig
from mpalg.core.errors import BasisMismatchError, MalformedDiagramError, ResourceLimitError
from mpalg.core.exact import ONE, XI, ZERO, PolyXi, falling_factorial
from mpalg.core.linear import LinearCombination, accumulate
from mpalg.core.partition_algebra import (
    Basis,
    PAElement,
    SetPartitionDiagram,
    alpha,
    color_intervals,
)

log = logging.getLogger(__name__)

Vector = tuple[int, ...]
Edge = tuple[Vector, Vector]
Triple = tuple[Vector, Vector, Vector]


def _zero(s: int) -> Vector:
    return (0,) * s


@dataclass(frozen=True, order=True)
class MultisetDiagram:
    """A canonical basis diagram of MP_lambda(xi).

    Attributes:
        lam: The weight vector lambda.
        edges: Non-zero edges sorted lexicographically by ``(I, J)``.
    """

    lam: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def rank(self) -> int:
        return len(self.edges)

    @property
    def s(self) -> int:
        return len(self.lam)

    def __str__(self) -> str:
        def vec(v: Vector) -> str:
            return str(v[0]) if len(v) == 1 else "(" + ",".join(map(str, v)) + ")"

        return "[" + ", ".join(f"({vec(i)},{vec(j)})" for i, j in self.edges) + "]"


def canonicalize(lam: Sequence[int], raw_edges: Iterable[tuple[Sequence[int], Sequence[int]]]) -> MultisetDiagram:
    """Drop zero edges, sort the rest, and check the weight condition.

    Raises:
        MalformedDiagramError: If a vertex lies outside the vertex set or the
            edge weights do not sum to ``(lambda, lambda)``.
    """
    lam = tuple(int(x) for x in lam)
    s = len(lam)
    if any(x < 0 for x in lam):
        raise MalformedDiagramError(f"negative entry in lambda {lam}", field="lambda")
    edges: list[Edge] = []
    top = [0] * s
    bottom = [0] * s
    for e, (i_vec, j_vec) in enumerate(raw_edges):
        i_vec, j_vec = tuple(int(x) for x in i_vec), tuple(int(x) for x in j_vec)
        for side, v in (("I", i_vec), ("J", j_vec)):
            if len(v) != s:
                raise MalformedDiagramError(f"{side} has length {len(v)}, expected {s}", field=f"edges[{e}]")
            if any(x < 0 or x > cap for x, cap in zip(v, lam)):
                raise MalformedDiagramError(f"{side}={v} outside the vertex set for lambda {lam}", field=f"edges[{e}]")
        top = [a + b for a, b in zip(top, i_vec)]
        bottom = [a + b for a, b in zip(bottom, j_vec)]
        if any(i_vec) or any(j_vec):
            edges.append((i_vec, j_vec))
    if tuple(top) != lam or tuple(bottom) != lam:
        raise MalformedDiagramError(
            f"edge weights sum to ({tuple(top)}, {tuple(bottom)}), expected ({lam}, {lam})",
            field="edges",
        )
    return MultisetDiagram(lam, tuple(sorted(edges)))


def _edge_of_block(block: Sequence[tuple[int, int]], s: int) -> Edge:
    top = [0] * s
    bottom = [0] * s
    for side, colour in block:
        (bottom if side else top)[colour] += 1
    return tuple(top), tuple(bottom)


def enumerate_basis(lam: Sequence[int], max_count: Optional[int] = None) -> list[MultisetDiagram]:
    """All basis diagrams of MP_lambda(xi), sorted.

    These are the multiset partitions of ``{1^l1, ..., s^ls, 1'^l1, ..., s'^ls}``.

    Raises:
        ResourceLimitError: If there are more than ``max_count`` diagrams
            (default ``limits.max_enumeration``).
    """
    cap = LimitsConfig().max_enumeration if max_count is None else max_count
    return list(_enumerate_basis(tuple(lam), cap))


@lru_cache(maxsize=None)
def _enumerate_basis(lam: tuple[int, ...], cap: int) -> tuple[MultisetDiagram, ...]:
    s = len(lam)
    tokens = [(side, colour) for side in (0, 1) for colour, size in enumerate(lam) for _ in range(size)]
    if not tokens:
        return (MultisetDiagram(lam, ()),)
    out: set[MultisetDiagram] = set()
    # multiset_partitions yields each multiset partition once, so the running size is exact.
    for partition in multiset_partitions(tokens):
        if len(out) == cap:
            raise ResourceLimitError(f"basis for lambda={lam}", len(out) + 1, cap)
        out.add(MultisetDiagram(lam, tuple(sorted(_edge_of_block(block, s) for block in partition))))
    log.debug("enumerated %d basis diagrams for lambda=%s", len(out), lam)
    return tuple(sorted(out))


def count_basis(lam: Sequence[int]) -> int:
    return len(enumerate_basis(lam))


def is_balanced(g: MultisetDiagram) -> bool:
    """True when every edge satisfies ``|I| = |J|``."""
    return all(sum(i) == sum(j) for i, j in g.edges)


def balanced_basis(lam: Sequence[int]) -> list[MultisetDiagram]:
    return [g for g in enumerate_basis(lam) if is_balanced(g)]


def identity_classes(lam: Sequence[int]) -> list[MultisetDiagram]:
    """The diagonal classes, whose edges all have the form ``(I, I)``."""
    return [g for g in enumerate_basis(lam) if all(i == j for i, j in g.edges)]


class MPElement(LinearCombination[MultisetDiagram]):
    """An element of MP_lambda(xi)."""

    __slots__ = ("lam",)

    def __init__(
        self,
        lam: Sequence[int],
        terms: Mapping[MultisetDiagram, PolyXi] | Iterable[tuple[MultisetDiagram, PolyXi]] = (),
    ):
        self.lam = tuple(lam)
        super().__init__(terms)
        for g in self.terms:
            if g.lam != self.lam:
                raise BasisMismatchError(f"diagram has lambda={g.lam}, element has lambda={self.lam}")

    @classmethod
    def of(cls, g: MultisetDiagram, coeff: PolyXi = ONE) -> "MPElement":
        return cls(g.lam, {g: coeff})

    def _context(self) -> tuple:
        return self.lam

    def _rebuild(self, terms: Mapping[MultisetDiagram, PolyXi]) -> "MPElement":
        return MPElement(self.lam, terms)

    def _check_compatible(self, other: LinearCombination) -> None:
        if not isinstance(other, MPElement):
            raise BasisMismatchError(f"cannot combine MPElement with {type(other).__name__}")
        if other.lam != self.lam:
            raise BasisMismatchError(f"lambda mismatch: {self.lam} vs {other.lam}")


# Path configurations


@dataclass(frozen=True, order=True)
class PathConfiguration:
    """A multiset of paths ``(I, L, J)`` stored as sorted ``(path, count)`` pairs."""

    paths: tuple[tuple[Triple, int], ...]

    @property
    def n(self) -> int:
        return sum(c for _, c in self.paths)

    def triples(self) -> list[Triple]:
        return [t for t, c in self.paths for _ in range(c)]

    def diagram(self, lam: Sequence[int]) -> MultisetDiagram:
        """The induced diagram with edges ``(I, J)``."""
        return canonicalize(lam, [(i, j) for (i, _, j) in self.triples()])

    def middle_loops(self) -> int:
        """Number of paths ``(0, L, 0)`` with ``L`` non-zero."""
        return sum(c for (i, l, j), c in self.paths if not any(i) and not any(j) and any(l))

    def coefficient(self) -> Fraction:
        """The multiplicity factor of this configuration.

        The product over non-zero ``(I, J)`` of the multinomial of how the
        ``(I, J)`` paths spread over middle vertices, divided by the factorials
        of the zero-path counts through each non-zero middle vertex.
        """
        spread: dict[Edge, list[int]] = {}
        den = 1
        for (i, l, j), c in self.paths:
            if not any(i) and not any(j):
                if any(l):
                    den *= math.factorial(c)
                continue
            spread.setdefault((i, j), []).append(c)
        num = math.prod(multinomial(sum(cs), cs) for cs in spread.values())
        return Fraction(num, den)


def _padded(g: MultisetDiagram, n: int) -> list[Edge]:
    z = _zero(g.s)
    return list(g.edges) + [(z, z)] * (n - g.rank)


def _iter_configurations(g1: MultisetDiagram, g2: MultisetDiagram, n: int) -> Iterator[PathConfiguration]:
    # Top pairs (I, L) come from g2 and bottom pairs (L, J) from g1.
    upper: dict[Vector, Counter] = {}
    for i, l in _padded(g2, n):
        upper.setdefault(l, Counter())[i] += 1
    lower: dict[Vector, Counter] = {}
    for l, j in _padded(g1, n):
        lower.setdefault(l, Counter())[j] += 1
    if set(upper) != set(lower):
        return
    per_middle = []
    for l in sorted(upper):
        rows = sorted(upper[l].items())
        cols = sorted(lower[l].items())
        if sum(c for _, c in rows) != sum(c for _, c in cols):
            return
        tables = list(contingency_tables([c for _, c in rows], [c for _, c in cols]))
        per_middle.append(
            [
                [((i, l, j), t[r][q]) for r, (i, _) in enumerate(rows) for q, (j, _) in enumerate(cols) if t[r][q]]
                for t in tables
            ]
        )
    for choice in itertools.product(*per_middle):
        yield PathConfiguration(tuple(sorted(p for part in choice for p in part)))


def path_configurations(
    g1: MultisetDiagram, g2: MultisetDiagram, n: int
) -> dict[MultisetDiagram, list[PathConfiguration]]:
    """Configurations of ``n`` paths covering ``g2`` on top of ``g1``, grouped by induced diagram.

    Raises:
        BasisMismatchError: If the diagrams have different lambda.
        ValueError: If ``n`` is smaller than either rank.
    """
    if g1.lam != g2.lam:
        raise BasisMismatchError(f"lambda mismatch: {g1.lam} vs {g2.lam}")
    if n < max(g1.rank, g2.rank):
        raise ValueError(f"n={n} is below the ranks {g1.rank}, {g2.rank}")
    grouped: dict[MultisetDiagram, list[PathConfiguration]] = {}
    for p in _iter_configurations(g1, g2, n):
        grouped.setdefault(p.diagram(g1.lam), []).append(p)
    return grouped


@lru_cache(maxsize=None)
def structure_products(g1: MultisetDiagram, g2: MultisetDiagram) -> tuple[tuple[MultisetDiagram, PolyXi], ...]:
    """The product ``[g1][g2]`` as sorted ``(diagram, structure polynomial)`` pairs."""
    if g1.lam != g2.lam:
        raise BasisMismatchError(f"lambda mismatch: {g1.lam} vs {g2.lam}")
    # Every non-zero path uses a non-zero edge of g1 or g2, so at most
    # rank(g1) + rank(g2) of them occur; any longer padding only adds (0, 0, 0).
    n = g1.rank + g2.rank
    out: dict[MultisetDiagram, PolyXi] = {}
    count = 0
    for p in _iter_configurations(g1, g2, n):
        g = p.diagram(g1.lam)
        term = falling_factorial(XI - g.rank, p.middle_loops()) * p.coefficient()
        accumulate([(g, term)], out)
        count += 1
    log.debug("product %s * %s: %d configurations, %d terms", g1, g2, count, len(out))
    return tuple(sorted(out.items()))


def structure_poly(g1: MultisetDiagram, g2: MultisetDiagram, g: MultisetDiagram) -> PolyXi:
    """Coefficient of ``[g]`` in ``[g1][g2]``; zero when ``g`` does not occur."""
    return dict(structure_products(g1, g2)).get(g, ZERO)


def multiply(a: MPElement, b: MPElement) -> MPElement:
    """Bilinear product in MP_lambda(xi).

    Raises:
        BasisMismatchError: If the operands have different lambda.
    """
    a._check_compatible(b)
    out: dict[MultisetDiagram, PolyXi] = {}
    for g1, c1 in a.terms.items():
        for g2, c2 in b.terms.items():
            coeff = c1 * c2
            accumulate(((g, coeff * phi) for g, phi in structure_products(g1, g2)), out)
    return MPElement(a.lam, out)


def identity(lam: Sequence[int]) -> MPElement:
    """The unit: the sum of all diagonal classes."""
    return MPElement(lam, {g: ONE for g in identity_classes(lam)})


# Partition diagrams attached to multiset diagrams


def _offsets(lam: Sequence[int]) -> list[int]:
    return [sum(lam[:i]) for i in range(len(lam))]


def canonical_partition_diagram(g: MultisetDiagram) -> SetPartitionDiagram:
    """The canonical set partition diagram ``d_g``.

    Edges are taken in their sorted order; for each colour the values of
    that colour's interval are handed out consecutively, the top values to
    ``I`` and the primed values to ``J``.
    """
    k = sum(g.lam)
    offsets = _offsets(g.lam)
    next_top = list(offsets)
    next_bottom = list(offsets)
    blocks = []
    for i_vec, j_vec in g.edges:
        block: list[int] = []
        for colour, count in enumerate(i_vec):
            block += range(next_top[colour] + 1, next_top[colour] + count + 1)
            next_top[colour] += count
        for colour, count in enumerate(j_vec):
            block += [-v for v in range(next_bottom[colour] + 1, next_bottom[colour] + count + 1)]
            next_bottom[colour] += count
        blocks.append(block)
    return SetPartitionDiagram.from_blocks(k, blocks)


def diagram_class(d: SetPartitionDiagram, lam: Sequence[int]) -> MultisetDiagram:
    """The multiset diagram whose edges are the colour counts of each block.

    Raises:
        MalformedDiagramError: If ``d`` does not have ``k = |lambda|``.
    """
    lam = tuple(lam)
    if d.k != sum(lam):
        raise MalformedDiagramError(f"diagram has k={d.k}, lambda sums to {sum(lam)}")
    colour = color_intervals(lam)
    edges = []
    for b in d.blocks:
        top = [0] * len(lam)
        bottom = [0] * len(lam)
        for v in d.top(b):
            top[colour[v - 1]] += 1
        for v in d.bottom(b):
            bottom[colour[v - 1]] += 1
        edges.append((tuple(top), tuple(bottom)))
    return canonicalize(lam, edges)


def _colour_permutations(lam: Sequence[int]) -> list[dict[int, int]]:
    offsets = _offsets(lam)
    per_colour = [
        [list(p) for p in itertools.permutations(range(off + 1, off + size + 1))]
        for off, size in zip(offsets, lam)
    ]
    out = []
    for choice in itertools.product(*per_colour):
        mapping: dict[int, int] = {}
        for off, size, perm in zip(offsets, lam, choice):
            for a, b in zip(range(off + 1, off + size + 1), perm):
                mapping[a] = b
        out.append(mapping)
    return out


def orbit(g: MultisetDiagram) -> set[SetPartitionDiagram]:
    """The orbit of ``d_g`` under independent top and bottom colour-preserving relabelings."""
    return set(_orbit(g))


@lru_cache(maxsize=None)
def _orbit(g: MultisetDiagram) -> frozenset[SetPartitionDiagram]:
    d = canonical_partition_diagram(g)
    perms = _colour_permutations(g.lam)
    out = set()
    for top in perms:
        for bottom in perms:
            blocks = [[top[v] if v > 0 else -bottom[-v] for v in b] for b in d.blocks]
            out.add(SetPartitionDiagram._canonical(d.k, blocks))
    return frozenset(out)


def embed(a: MPElement) -> PAElement:
    """Embed into the orbit basis of P_|lambda|(xi).

    ``[g]`` maps to ``(1 / alpha(d_g)) * sum of x_d over the orbit of d_g``.
    """
    k = sum(a.lam)
    out: dict[SetPartitionDiagram, PolyXi] = {}
    for g, c in a.terms.items():
        weight = c * (1 / alpha(canonical_partition_diagram(g), a.lam))
        accumulate(((d, weight) for d in _orbit(g)), out)
    return PAElement(k, Basis.ORBIT, out)


def in_y(d: SetPartitionDiagram, lam: Sequence[int]) -> bool:
    """True when every block holds as many top as bottom values of each colour."""
    return all(i == j for i, j in diagram_class(d, lam).edges)


def enumerate_y(lam: Sequence[int]) -> list[SetPartitionDiagram]:
    """Diagrams whose blocks are colour-balanced, sorted."""
    out: set[SetPartitionDiagram] = set()
    for g in identity_classes(lam):
        out |= _orbit(g)
    return sorted(out)


def idempotent_e(lam: Sequence[int]) -> PAElement:
    """``e = sum over colour-balanced d of (1 / alpha_d) x_d``."""
    k = sum(lam)
    return PAElement(k, Basis.ORBIT, {d: PolyXi.constant(1 / alpha(d, lam)) for d in enumerate_y(lam)})


def sandwich_coefficient(d0: SetPartitionDiagram) -> Fraction:
    """Scalar ``theta / beta`` with ``e x_d0 e = (theta / beta) * embed([d0])`` for lambda = (k,).

    ``theta`` is the product over block profiles ``(|B^u|, |B^l|)`` of the
    factorial of how many blocks share that profile; ``beta`` is
    ``k! / prod |B^u|!``.
    """
    profiles = Counter((len(d0.top(b)), len(d0.bottom(b))) for b in d0.blocks)
    theta = math.prod(math.factorial(c) for c in profiles.values())
    beta = Fraction(math.factorial(d0.k), math.prod(math.factorial(len(d0.top(b))) for b in d0.blocks))
    return theta / beta


def balanced_structure_table(lam: Sequence[int]) -> dict[tuple[MultisetDiagram, MultisetDiagram], MPElement]:
    """Products of all pairs of balanced basis diagrams."""
    basis = balanced_basis(lam)
    return {(g1, g2): multiply(MPElement.of(g1), MPElement.of(g2)) for g1 in basis for g2 in basis}


def transpose(g: MultisetDiagram) -> MultisetDiagram:
    """Swap the roles of primed and unprimed values: ``(I, J) -> (J, I)``."""
    return MultisetDiagram(g.lam, tuple(sorted((j, i) for i, j in g.edges)))


__all__ = [
    "MPElement",
    "MultisetDiagram",
    "PathConfiguration",
    "balanced_basis",
    "balanced_structure_table",
    "canonical_partition_diagram",
    "canonicalize",
    "count_basis",
    "diagram_class",
    "embed",
    "enumerate_basis",
    "enumerate_y",
    "identity",
    "identity_classes",
    "idempotent_e",
    "in_y",
    "is_balanced",
    "multiply",
    "orbit",
    "path_configurations",
    "sandwich_coefficient",
    "structure_poly",
    "structure_products",
    "transpose",
]
