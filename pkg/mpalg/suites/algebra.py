"""Suites for the diagram algebras: worked examples, bases, embedding, balanced part."""

from __future__ import annotations

import itertools
import logging

from mpalg.core import multiset_algebra as mp
from mpalg.core import partition_algebra as pa
from mpalg.core.combinatorics import MultisetTableau, WeakCompositionMatrix, bell
from mpalg.core.exact import XI, PolyXi
from mpalg.core.multiset_algebra import MPElement, MultisetDiagram, canonicalize
from mpalg.core.partition_algebra import Basis, PAElement, SetPartitionDiagram
from mpalg.core.rsk import rsk_of_diagram
from mpalg.core.schur_weyl import commutant_check, integral_operator
from mpalg.models.report import Check, CheckContext, expect
from mpalg.plugin import SuitePlugin, hookimpl

log = logging.getLogger(__name__)


def gamma_one() -> MultisetDiagram:
    """The k = 2 diagram with edges (0,1), (1,0), (1,1)."""
    return canonicalize((2,), [((0,), (1,)), ((1,), (0,)), ((1,), (1,))])


def gamma_one_squared() -> MPElement:
    """Expected ``[gamma_one]^2``."""
    doubled = canonicalize((2,), [((1,), (1,)), ((1,), (1,))])
    crossed = canonicalize((2,), [((0,), (1,)), ((0,), (1,)), ((1,), (0,)), ((1,), (0,))])
    shifted = XI - 2
    return MPElement((2,), {gamma_one(): shifted, doubled: shifted * 2, crossed: PolyXi.constant(4)})


def five_strand_factors() -> tuple[SetPartitionDiagram, SetPartitionDiagram, SetPartitionDiagram]:
    """``(d1, d2, d)`` with ``d1 d2 = xi^2 d`` in P_5(xi)."""
    d1 = SetPartitionDiagram.from_blocks(5, [[1, -1], [2], [3], [4], [-2, -3], [5, -4, -5]])
    d2 = SetPartitionDiagram.from_blocks(5, [[1, 2, -1], [3, 5], [-2, -3], [-4], [4, -5]])
    d = SetPartitionDiagram.from_blocks(5, [[1, 2, -1], [3, 5], [4, -4, -5], [-2, -3]])
    return d1, d2, d


def rsk_example() -> tuple[MultisetDiagram, MultisetTableau, MultisetTableau]:
    """The lambda = (2,2,1), n = 6 diagram with its insertion and recording tableaux."""
    d = canonicalize(
        (2, 2, 1),
        [
            ((1, 1, 0), (0, 0, 0)),
            ((0, 0, 0), (1, 1, 0)),
            ((1, 0, 1), (1, 0, 0)),
            ((0, 1, 0), (0, 1, 0)),
            ((0, 0, 0), (0, 0, 1)),
        ],
    )
    t = MultisetTableau.from_rows([[[], [], [1]], [[2], [1, 2]], [[3]]])
    s = MultisetTableau.from_rows([[[], [], []], [[2], [1, 3]], [[1, 2]]])
    return d, t, s


class ExamplesSuite(SuitePlugin):
    name = "examples"
    description = "Worked examples reproduced exactly"

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        return [
            self.check("k2-product", self._k2_product, "[G1][G1] for the k = 2 example"),
            self.check("k5-diagram-product", self._k5_product, "a diagram-basis product in P_5"),
            self.check("integral-operator", self._integral_operator, "T on 1_(2,0,0) and 1_(1,1,0)"),
            self.check("rsk-221", self._rsk, "RSK of the lambda = (2,2,1) example"),
        ]

    @staticmethod
    def _k2_product(ctx: CheckContext) -> str:
        g = MPElement.of(gamma_one())
        got = mp.multiply(g, g)
        expect(got == gamma_one_squared(), f"got {got}")
        return f"{len(got)} terms"

    @staticmethod
    def _k5_product(ctx: CheckContext) -> str:
        d1, d2, d = five_strand_factors()
        got = pa.multiply(PAElement.of(d1), PAElement.of(d2))
        expect(got == PAElement.of(d, coeff=XI * XI), f"got {got}")
        return f"xi^2 {d}"

    @staticmethod
    def _integral_operator(ctx: CheckContext) -> str:
        g = canonicalize((2,), [((0,), (1,)), ((2,), (1,))])
        op = integral_operator(g, 3, max_dim=ctx.limits.max_matrix_dim)
        index = {b: i for i, b in enumerate(op.basis)}
        src = index[WeakCompositionMatrix(((2, 0, 0),))]
        hits = {op.basis[row].rows[0] for row in range(op.dim) if op.entries[row, src]}
        expect(hits == {(1, 1, 0), (1, 0, 1)}, f"T(1_(2,0,0)) hits {sorted(hits)}")
        zero = index[WeakCompositionMatrix(((1, 1, 0),))]
        expect(all(op.entries[row, zero] == 0 for row in range(op.dim)), "T(1_(1,1,0)) is not zero")
        return "2 + 0 entries"

    @staticmethod
    def _rsk(ctx: CheckContext) -> str:
        d, t, s = rsk_example()
        got_t, got_s = rsk_of_diagram(d, 6)
        expect(got_t == t, f"T = {got_t.rows}")
        expect(got_s == s, f"S = {got_s.rows}")
        return f"shape {t.shape}"


def _orbit_consistent(
    d1: SetPartitionDiagram, d2: SetPartitionDiagram, images: dict[SetPartitionDiagram, PAElement]
) -> bool:
    via_diagrams = pa.orbit_from_diagram(pa.multiply(PAElement.of(d1), PAElement.of(d2)))
    return via_diagrams == pa.multiply(images[d1], images[d2])


class OrbitBasisSuite(SuitePlugin):
    name = "orbit-basis"
    description = "Orbit and diagram products agree through the coarsening change of basis"

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        ks = (1, 2) if size == "tiny" else (1, 2, 3)
        checks = [self.check(f"exhaustive-k{k}", self._exhaustive(k), f"all pairs of A_{k}") for k in ks]
        checks.append(self.check("roundtrip-k3", self._roundtrip, "diagram -> orbit -> diagram on A_3"))
        return checks

    @staticmethod
    def _exhaustive(k: int):
        def run(ctx: CheckContext) -> str:
            diagrams = pa.all_diagrams(k)
            images = {d: pa.orbit_from_diagram(PAElement.of(d)) for d in diagrams}
            for d1, d2 in itertools.product(diagrams, repeat=2):
                expect(_orbit_consistent(d1, d2, images), f"orbit and diagram products differ for {d1} * {d2}")
            return f"{len(diagrams) ** 2} pairs"

        return run

    @staticmethod
    def _roundtrip(ctx: CheckContext) -> str:
        diagrams = pa.all_diagrams(3)
        for d in diagrams:
            a = PAElement.of(d)
            expect(pa.diagram_from_orbit(pa.orbit_from_diagram(a)) == a, f"basis change does not invert on {d}")
        return f"{len(diagrams)} diagrams"


class EmbeddingSuite(SuitePlugin):
    name = "embedding"
    description = "Embedding into the partition algebra and the idempotent e"

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        ks = (1, 2) if size == "tiny" else (1, 2, 3)
        lams = [(1,), (2,), (1, 1)] if size == "tiny" else [(1,), (2,), (3,), (1, 1), (2, 1)]
        return [
            self.check("multiplicative", self._multiplicative, "embed(a b) = embed(a) embed(b), lambda = (2)"),
            self.check("unit-is-e", self._unit_is_e(lams), "embed(id) = e"),
            self.check("idempotent", self._idempotent(ks), "e^2 = e and i(e) = e"),
            self.check("bell-counts", self._bell_counts(ks), "basis of lambda = (1^k) has Bell(2k) elements"),
            self.check("sandwich", self._sandwich, "e x_d e = (theta / beta) embed([d]) on A_2"),
            self.check("class-inverse", self._class_inverse, "diagram_class inverts the canonical diagram"),
        ]

    @staticmethod
    def _multiplicative(ctx: CheckContext) -> str:
        basis = mp.enumerate_basis((2,))
        for g1, g2 in itertools.product(basis, repeat=2):
            a, b = MPElement.of(g1), MPElement.of(g2)
            lhs = mp.embed(mp.multiply(a, b))
            rhs = pa.multiply(mp.embed(a), mp.embed(b))
            expect(lhs == rhs, f"embedding is not multiplicative on {g1} * {g2}")
        return f"{len(basis) ** 2} pairs"

    @staticmethod
    def _unit_is_e(lams: list[tuple[int, ...]]):
        def run(ctx: CheckContext) -> str:
            for lam in lams:
                expect(mp.embed(mp.identity(lam)) == mp.idempotent_e(lam), f"embed(id) != e for lambda={lam}")
            return f"lambda in {lams}"

        return run

    @staticmethod
    def _idempotent(ks: tuple[int, ...]):
        def run(ctx: CheckContext) -> str:
            for k in ks:
                e = mp.idempotent_e((k,))
                expect(pa.multiply(e, e) == e, f"e^2 != e for k={k}")
                expect(pa.involution(e) == e, f"i(e) != e for k={k}")
            return f"k in {list(ks)}"

        return run

    @staticmethod
    def _bell_counts(ks: tuple[int, ...]):
        def run(ctx: CheckContext) -> str:
            counts = []
            for k in ks:
                count = mp.count_basis((1,) * k)
                expect(count == bell(2 * k), f"lambda = (1^{k}) has {count} diagrams, Bell({2 * k}) = {bell(2 * k)}")
                counts.append(count)
            return f"counts {counts}"

        return run

    @staticmethod
    def _sandwich(ctx: CheckContext) -> str:
        e = mp.idempotent_e((2,))
        for d0 in pa.all_diagrams(2):
            lhs = pa.multiply(pa.multiply(e, PAElement.of(d0, Basis.ORBIT)), e)
            g = mp.diagram_class(d0, (2,))
            rhs = mp.embed(MPElement.of(g, PolyXi.constant(mp.sandwich_coefficient(d0))))
            expect(lhs == rhs, f"e x_d e mismatch at d = {d0}")
        return "15 diagrams"

    @staticmethod
    def _class_inverse(ctx: CheckContext) -> str:
        count = 0
        for lam in ((2,), (1, 1), (2, 1)):
            for g in mp.enumerate_basis(lam):
                expect(mp.diagram_class(mp.canonical_partition_diagram(g), lam) == g, f"class of d_g is not {g}")
                count += 1
        return f"{count} diagrams"


class BalancedSuite(SuitePlugin):
    name = "balanced"
    description = "Balanced diagrams span a xi-free subalgebra commuting with monomial matrices"

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        return [
            self.check("closed-xi-free", self._closed, "balanced products stay balanced with constant coefficients"),
            self.check("monomial-commutant", self._monomial, "T_[G] commutes with monomial matrices iff G is balanced"),
        ]

    @staticmethod
    def _closed(ctx: CheckContext) -> str:
        count = 0
        for lam in ((2,), (1, 1)):
            for (g1, g2), product in mp.balanced_structure_table(lam).items():
                for g, c in product.items():
                    expect(mp.is_balanced(g), f"{g1} * {g2} contains unbalanced {g}")
                    expect(c.is_constant(), f"{g1} * {g2} has coefficient {c} at {g}")
                count += 1
        return f"{count} products"

    @staticmethod
    def _monomial(ctx: CheckContext) -> str:
        count = 0
        for lam in ((2,), (1, 1)):
            for g in mp.enumerate_basis(lam):
                if g.rank > 3:
                    continue
                op = integral_operator(g, 3, max_dim=ctx.limits.max_matrix_dim)
                got = commutant_check(op, "monomial")
                expect(got == mp.is_balanced(g), f"monomial check gave {got} for {g}")
                count += 1
        return f"{count} operators"


__all__ = [
    "BalancedSuite",
    "EmbeddingSuite",
    "ExamplesSuite",
    "OrbitBasisSuite",
    "five_strand_factors",
    "gamma_one",
    "gamma_one_squared",
    "rsk_example",
]
