"""Suites comparing the algebra against explicit permutation-module matrices."""

from __future__ import annotations

import itertools
import logging
from typing import Sequence

from mpalg.core import multiset_algebra as mp
from mpalg.core.multiset_algebra import MPElement, MultisetDiagram
from mpalg.core.schur_weyl import (
    brute_force_structure_count,
    centralizer_dimension,
    commutant_check,
    commutant_dimension,
    integral_operator,
    kernel_dimension,
    phi,
    representative_pair,
    span_dimension,
    structure_count_table,
)
from mpalg.models.report import Check, CheckContext, expect
from mpalg.plugin import SuitePlugin, hookimpl

log = logging.getLogger(__name__)

# Offsets above the largest rank in a triple at which structure polynomials are compared.
ORACLE_SPAN = 4


def oracle_sweep(lam: Sequence[int], pairs: Sequence[tuple[MultisetDiagram, MultisetDiagram]], span: int) -> int:
    """Compare structure polynomials with brute-force counts for the given factor pairs.

    For each target ``g`` and each ``n`` one pass over ``M(n, lambda)``
    tallies every factor pair at once (see ``structure_count_table``).
    Returns the number of comparisons.

    Raises:
        CheckFailure: On the first disagreement.
    """
    lam = tuple(lam)
    basis = mp.enumerate_basis(lam)
    top = max(g.rank for g in basis)
    compared = 0
    for n in range(1, top + span + 1):
        for g in basis:
            if g.rank > n:
                continue
            tally = structure_count_table(g, n)
            for g1, g2 in pairs:
                reach = max(g1.rank, g2.rank, g.rank)
                if not reach <= n <= reach + span:
                    continue
                expected = tally.get((g1, g2), 0)
                got = mp.structure_poly(g1, g2, g)(n)
                expect(got == expected, f"lambda={lam} n={n}: {g1} * {g2} at {g} gives {got}, count is {expected}")
                compared += 1
        log.debug("oracle lambda=%s n=%d: %d comparisons so far", lam, n, compared)
    return compared


class OracleSuite(SuitePlugin):
    name = "oracle"
    description = "Structure polynomials against brute-force counts on M(n, lambda)"

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        if size == "tiny":
            lams: list[tuple[int, ...]] = [(1,), (2,), (1, 1)]
            span = 1
        else:
            lams = [(1,), (2,), (3,), (1, 1), (2, 1)]
            span = ORACLE_SPAN
        checks = [self.check(f"exhaustive-{_label(lam)}", self._exhaustive(lam, span)) for lam in lams]
        checks.append(self.check("representative-free", self._representatives, "count does not depend on (a, c)"))
        return checks

    @staticmethod
    def _exhaustive(lam: tuple[int, ...], span: int):
        def run(ctx: CheckContext) -> str:
            basis = mp.enumerate_basis(lam)
            pairs = list(itertools.product(basis, repeat=2))
            return f"{oracle_sweep(lam, pairs, span)} comparisons"

        return run

    @staticmethod
    def _representatives(ctx: CheckContext) -> str:
        basis = mp.enumerate_basis((2,))
        for _ in range(ctx.samples):
            g1, g2, g = (ctx.rng.choice(basis) for _ in range(3))
            n = max(g1.rank, g2.rank, g.rank) + ctx.rng.randrange(2)
            counts = {
                brute_force_structure_count(g1, g2, g, n, pair=representative_pair(g, n, ctx.rng))
                for _ in range(3)
            }
            expect(len(counts) == 1, f"counts {sorted(counts)} for {g1} * {g2} at {g}, n={n}")
        return f"{ctx.samples} triples"


def _label(lam: Sequence[int]) -> str:
    return "-".join(map(str, lam))


class SchurWeylSuite(SuitePlugin):
    name = "schur-weyl"
    description = "phi is a homomorphism onto the commutant of S_n"

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        ns = (2, 3) if size == "tiny" else (2, 3, 4, 5)
        return [
            self.check("homomorphism", self._homomorphism(ns), f"phi(a b) = phi(a) phi(b), lambda = (2), n in {ns}"),
            self.check("kernel", self._kernel, "kernel dimension counts diagrams of rank above n"),
            self.check("span", self._span, "integral operators span the centralizer for n >= 2|lambda|"),
            self.check("commutant", self._commutant, "the full commutant has the orbit-count dimension"),
            self.check("sn-invariance", self._sn_invariance, "every T_[G] commutes with S_n"),
            self.check("centralizer-values", self._centralizer_values, "orbit counts on small modules"),
        ]

    @staticmethod
    def _homomorphism(ns: tuple[int, ...]):
        def run(ctx: CheckContext) -> str:
            basis = mp.enumerate_basis((2,))
            cap = ctx.limits.max_matrix_dim
            for n in ns:
                images = {g: phi(MPElement.of(g), n, cap) for g in basis}
                for g1, g2 in itertools.product(basis, repeat=2):
                    lhs = phi(mp.multiply(MPElement.of(g1), MPElement.of(g2)), n, cap)
                    rhs = images[g1] @ images[g2]
                    expect(lhs.entries == rhs.entries, f"phi fails on {g1} * {g2} at n={n}")
            return f"{len(basis) ** 2} pairs per n"

        return run

    @staticmethod
    def _kernel(ctx: CheckContext) -> str:
        for n in (2, 3):
            expected = sum(1 for g in mp.enumerate_basis((2,)) if g.rank > n)
            got = kernel_dimension((2,), n, ctx.limits.max_matrix_dim)
            expect(got == expected, f"kernel dimension {got} at n={n}, expected {expected}")
        return "n in (2, 3)"

    @staticmethod
    def _span(ctx: CheckContext) -> str:
        for lam in ((1,), (2,)):
            n = 2 * sum(lam)
            basis = mp.enumerate_basis(lam)
            ops = [integral_operator(g, n, ctx.limits.max_matrix_dim) for g in basis]
            dims = (span_dimension(ops), len(basis), centralizer_dimension(n, lam, ctx.limits.max_matrix_dim))
            expect(len(set(dims)) == 1, f"lambda={lam} n={n}: span, basis, orbits = {dims}")
        return "lambda in ((1), (2))"

    @staticmethod
    def _commutant(ctx: CheckContext) -> str:
        full = commutant_dimension(3, (2,), ctx.limits.max_matrix_dim)
        orbits = centralizer_dimension(3, (2,), ctx.limits.max_matrix_dim)
        expect(full == orbits, f"commutant dimension {full}, orbit count {orbits}")
        return f"dimension {full}"

    @staticmethod
    def _sn_invariance(ctx: CheckContext) -> str:
        count = 0
        for n in (2, 3, 4):
            for g in mp.enumerate_basis((2,)):
                if g.rank <= n:
                    expect(commutant_check(integral_operator(g, n, ctx.limits.max_matrix_dim)), f"T_{g} at n={n}")
                    count += 1
        return f"{count} operators"

    @staticmethod
    def _centralizer_values(ctx: CheckContext) -> str:
        cap = ctx.limits.max_matrix_dim
        values = {(4, (2,)): 9, (1, (2,)): 1, (3, (1,)): 2}
        for (n, lam), expected in values.items():
            got = centralizer_dimension(n, lam, cap)
            expect(got == expected, f"centralizer dimension {got} for n={n}, lambda={lam}")
            rank_bounded = sum(1 for g in mp.enumerate_basis(lam) if g.rank <= n)
            expect(got == rank_bounded, f"orbit count {got} differs from {rank_bounded} diagrams of rank <= {n}")
        return f"{len(values)} values"


__all__ = ["OracleSuite", "SchurWeylSuite", "oracle_sweep"]
