"""Suites for the multiplicity engine, restriction coefficients and RSK."""

from __future__ import annotations

import logging
import math
from typing import Sequence

from mpalg.core import multiset_algebra as mp
from mpalg.core import symmetric_functions as sf
from mpalg.core.combinatorics import (
    IntegerPartition,
    count_ssmt,
    count_syt,
    enumerate_partitions,
    multiset_from_counts,
)
from mpalg.core.rsk import bimodule_count_identity, inverse_rsk, rsk_of_diagram, symmetry_check
from mpalg.models.report import Check, CheckContext, expect
from mpalg.plugin import SuitePlugin, hookimpl

log = logging.getLogger(__name__)


def weight_vectors(max_size: int, max_parts: int = 3) -> list[tuple[int, ...]]:
    """Partitions of 1..max_size with at most ``max_parts`` parts."""
    return [
        nu.parts
        for size in range(1, max_size + 1)
        for nu in enumerate_partitions(size)
        if len(nu) <= max_parts
    ]


class MultiplicitySuite(SuitePlugin):
    name = "multiplicity"
    description = "Tableau counts, plethysm coefficients and their generating functions"

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        max_n, max_lam = (4, 2) if size == "tiny" else (6, 4)
        return [
            self.check("ssmt-vs-plethysm", self._agree(max_n, max_lam), "two ways of computing a"),
            self.check("support", self._support(max_n), "a(nu, (k)) > 0 exactly on the b-bounded set"),
            self.check("dimension", self._dimension(max_n, max_lam), "sum of a * dim V_nu is dim Sym^lambda"),
            self.check("dimension-5-2", self._instance, "1*2 + 4*2 + 5*1 = 15"),
            self.check("principal-specialization", self._principal(5 if size == "desk" else 3), "both sides to degree 8"),
        ]

    @staticmethod
    def _agree(max_n: int, max_lam: int):
        def run(ctx: CheckContext) -> str:
            count = 0
            for n in range(1, max_n + 1):
                for nu in enumerate_partitions(n):
                    for lam in weight_vectors(max_lam):
                        ssmt = sf.a_coeff_ssmt(nu, lam)
                        pleth = sf.a_coeff_plethysm(nu, lam)
                        expect(ssmt == pleth, f"a({nu}, {lam}): tableaux {ssmt}, plethysm {pleth}")
                        count += 1
            return f"{count} coefficients"

        return run

    @staticmethod
    def _support(max_n: int):
        def run(ctx: CheckContext) -> str:
            for n in range(1, max_n + 1):
                for k in range(0, 4):
                    nonzero = [nu for nu in enumerate_partitions(n) if sf.a_coeff_ssmt(nu, (k,)) > 0]
                    expect(nonzero == sf.lambda_set(k, n), f"support differs at k={k}, n={n}")
            return f"n <= {max_n}, k <= 3"

        return run

    @staticmethod
    def _dimension(max_n: int, max_lam: int):
        def run(ctx: CheckContext) -> str:
            count = 0
            for n in range(1, max_n + 1):
                for lam in weight_vectors(max_lam):
                    total = sum(sf.a_coeff_ssmt(nu, lam) * count_syt(nu) for nu in enumerate_partitions(n))
                    expected = math.prod(math.comb(n + x - 1, x) for x in lam)
                    expect(total == expected, f"n={n}, lambda={lam}: {total} != {expected}")
                    count += 1
            return f"{count} identities"

        return run

    @staticmethod
    def _instance(ctx: CheckContext) -> str:
        terms = [(sf.a_coeff_ssmt(nu, (2,)), count_syt(nu)) for nu in sf.lambda_set(2, 5)]
        expect(terms == [(2, 1), (2, 4), (1, 5)], f"terms {terms}")
        expect(sum(a * d for a, d in terms) == 15, "dimensions do not add to 15")
        return " + ".join(f"{d}*{a}" for a, d in terms)

    @staticmethod
    def _principal(max_n: int):
        def run(ctx: CheckContext) -> str:
            count = 0
            for n in range(1, max_n + 1):
                for nu in enumerate_partitions(n):
                    lhs, rhs = sf.principal_specialization(nu, 8)
                    expect(lhs == rhs, f"sides differ for {nu}")
                    expect(lhs.lowest_degree() == nu.b_statistic(), f"lowest degree for {nu}")
                    count += 1
            return f"{count} shapes"

        return run


class RestrictionSuite(SuitePlugin):
    name = "restriction"
    description = "Restriction coefficients against the character inner product"

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        max_n, max_lam = (3, 2) if size == "tiny" else (5, 4)
        return [
            self.check("character-oracle", self._oracle(max_n, max_lam), "alternating sum equals character product"),
            self.check("spot-values", self._spots, "r for lambda = (1,1) at n = 5"),
        ]

    @staticmethod
    def _oracle(max_n: int, max_lam: int):
        def run(ctx: CheckContext) -> str:
            count = 0
            for n in range(1, max_n + 1):
                for size in range(1, max_lam + 1):
                    for lam in enumerate_partitions(size):
                        if len(lam) > n:
                            continue
                        for nu in enumerate_partitions(n):
                            r = sf.r_coeff(lam, nu)
                            oracle = sf.r_coeff_character_oracle(lam, nu, n, ctx.limits.max_character_n)
                            expect(r == oracle, f"r({lam}, {nu}) = {r}, characters give {oracle}")
                            expect(r >= 0, f"negative multiplicity r({lam}, {nu}) = {r}")
                            count += 1
            return f"{count} coefficients"

        return run

    @staticmethod
    def _spots(ctx: CheckContext) -> str:
        lam = IntegerPartition.of(1, 1)
        got = (sf.r_coeff(lam, IntegerPartition.of(5)), sf.r_coeff(lam, IntegerPartition.of(4, 1)))
        expect(got == (0, 1), f"got {got}")
        return "r(5) = 0, r(4,1) = 1"


class RskSuite(SuitePlugin):
    name = "rsk"
    description = "RSK is a bijection onto same-shape tableau pairs and respects transposition"

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        lams: list[tuple[int, ...]] = [(2,), (1, 1)] if size == "tiny" else [(2,), (3,), (1, 1)]
        return [self.check(f"bijection-{'-'.join(map(str, lam))}", self._bijection(lam)) for lam in lams] + [
            self.check("bimodule-count", self._bimodule(lams), "rank-bounded basis size is a sum of squares"),
        ]

    @staticmethod
    def _bijection(lam: Sequence[int]):
        def run(ctx: CheckContext) -> str:
            k = sum(lam)
            content = multiset_from_counts(lam)
            checked = 0
            for n in range(k, 2 * k + 1):
                diagrams = [d for d in mp.enumerate_basis(lam) if d.rank <= n]
                images = set()
                for d in diagrams:
                    t, s = rsk_of_diagram(d, n)
                    expect(t.is_semistandard() and s.is_semistandard(), f"non-semistandard output for {d}")
                    expect(t.shape == s.shape and t.shape.size == n, f"shapes {t.shape}, {s.shape} for {d}")
                    expect(t.content() == content == s.content(), f"contents for {d}")
                    expect(inverse_rsk(t, s, lam) == d, f"inverse does not recover {d} at n={n}")
                    report = symmetry_check(d, n)
                    expect(report.ok, f"transpose symmetry fails for {d} at n={n}: {report}")
                    images.add((t, s))
                    checked += 1
                expect(len(images) == len(diagrams), f"RSK is not injective at n={n}")
                pairs = sum(count_ssmt(nu, content) ** 2 for nu in enumerate_partitions(n))
                expect(pairs == len(images), f"{len(images)} images but {pairs} tableau pairs at n={n}")
            return f"{checked} diagrams"

        return run

    @staticmethod
    def _bimodule(lams: Sequence[tuple[int, ...]]):
        def run(ctx: CheckContext) -> str:
            for lam in lams:
                for n in range(1, 2 * sum(lam) + 1):
                    lhs, rhs = bimodule_count_identity(lam, n)
                    expect(lhs == rhs, f"lambda={lam}, n={n}: {lhs} != {rhs}")
            return f"lambda in {list(lams)}"

        return run


__all__ = ["MultiplicitySuite", "RestrictionSuite", "RskSuite", "weight_vectors"]
