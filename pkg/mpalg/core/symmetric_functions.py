"""Truncated symmetric-function engine for multiplicity generating functions.

``a(nu, lam)`` is the multiplicity of the Specht module V_nu in
Sym^lam(F^n); ``r(lam, nu)`` is the multiplicity of V_nu in the restriction of
the polynomial GL_n-module W_lam to S_n.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Sequence

from sympy.combinatorics import Permutation

from mpalg.core.combinatorics import (
    IntegerPartition,
    count_ssmt,
    enumerate_partitions,
    graded_lex_key,
    multiset_from_counts,
)
from mpalg.core.config import LimitsConfig
from mpalg.core.errors import ResourceLimitError

log = logging.getLogger(__name__)

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series in ``q_1..q_s`` with every exponent capped.

    Attributes:
        caps: Largest exponent kept for each variable.
        coeffs: Non-zero coefficients by exponent vector.
    """

    caps: tuple[int, ...]
    coeffs: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        kept = {
            e: Fraction(c)
            for e, c in self.coeffs.items()
            if c != 0 and all(x <= cap for x, cap in zip(e, self.caps))
        }
        object.__setattr__(self, "coeffs", kept)

    @classmethod
    def one(cls, caps: Sequence[int]) -> "TruncatedSeries":
        return cls(tuple(caps), {(0,) * len(caps): Fraction(1)})

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(exponent), Fraction(0))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return TruncatedSeries(self.caps, out)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if all(x <= cap for x, cap in zip(e, self.caps)):
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
        return TruncatedSeries(self.caps, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.caps == other.caps and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.caps, frozenset(self.coeffs.items())))

    def univariate(self) -> list[Fraction]:
        """Coefficient list for a one-variable series, constant term first."""
        if len(self.caps) != 1:
            raise ValueError("univariate() needs exactly one variable")
        return [self.coefficient((d,)) for d in range(self.caps[0] + 1)]

    def lowest_degree(self) -> Optional[int]:
        degrees = [sum(e) for e in self.coeffs]
        return min(degrees) if degrees else None


def _content(lam: Sequence[int]) -> tuple[int, ...]:
    return multiset_from_counts(lam)


def a_coeff_ssmt(nu: IntegerPartition, lam: Sequence[int]) -> int:
    """Number of semistandard multiset tableaux of shape nu and content lam."""
    return count_ssmt(nu, _content(lam))


def _monomial_alphabet(caps: Sequence[int]) -> list[Exponent]:
    letters = list(itertools.product(*(range(c + 1) for c in caps)))
    return sorted(letters, key=lambda e: graded_lex_key(multiset_from_counts(e)))


def _ssyt_series(
    nu: IntegerPartition, weights: Sequence[Exponent], caps: Sequence[int]
) -> TruncatedSeries:
    """Sum of ``q^wt(T)`` over SSYT of shape nu with entries indexing ``weights``.

    Tableaux whose partial weight already exceeds the caps are pruned, which
    loses nothing below the caps.
    """
    cells = nu.cells()
    caps = tuple(caps)
    grid: dict[tuple[int, int], int] = {}
    totals: Counter = Counter()

    def fill(i: int, weight: Exponent) -> None:
        if i == len(cells):
            totals[weight] += 1
            return
        r, c = cells[i]
        low = grid[(r, c - 1)] if c > 0 else 0
        if r > 0:
            low = max(low, grid[(r - 1, c)] + 1)
        for letter in range(low, len(weights)):
            w = tuple(a + b for a, b in zip(weight, weights[letter]))
            if any(x > cap for x, cap in zip(w, caps)):
                continue
            grid[(r, c)] = letter
            fill(i + 1, w)
        grid.pop((r, c), None)

    fill(0, (0,) * len(caps))
    return TruncatedSeries(caps, {e: Fraction(c) for e, c in totals.items()})


def schur_over_monomials(nu: IntegerPartition, lam: Sequence[int]) -> TruncatedSeries:
    """The Schur polynomial of nu over the monomials ``q^I``, ``I <= lam``, truncated at lam."""
    caps = tuple(lam)
    return _ssyt_series(nu, _monomial_alphabet(caps), caps)


def a_coeff_plethysm(nu: IntegerPartition, lam: Sequence[int]) -> int:
    """Coefficient of ``q^lam`` in the Schur polynomial over the monomial alphabet."""
    value = schur_over_monomials(nu, lam).coefficient(tuple(lam))
    return int(value)


def lambda_set(k: int, n: int) -> list[IntegerPartition]:
    """Partitions nu of n with ``sum (i - 1) nu_i <= k``."""
    return [nu for nu in enumerate_partitions(n) if nu.b_statistic() <= k]


def principal_specialization(nu: IntegerPartition, degree_cap: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the principal specialization identity, to ``degree_cap``.

    Returns:
        ``(lhs, rhs)`` where ``lhs`` sums ``q^(entry sum)`` over SSYT with
        entries ``0, 1, 2, ...`` and ``rhs`` expands
        ``q^b(nu) / prod (1 - q^h(u))`` over the cells' hook lengths.
    """
    caps = (degree_cap,)
    lhs = _ssyt_series(nu, [(d,) for d in range(degree_cap + 1)], caps)

    rhs = TruncatedSeries(caps, {(nu.b_statistic(),): Fraction(1)})
    for h in (h for row in nu.hook_lengths() for h in row):
        geometric = TruncatedSeries(caps, {(m * h,): Fraction(1) for m in range(degree_cap // h + 1)})
        rhs = rhs * geometric
    return lhs, rhs


def _sign(perm: Sequence[int]) -> int:
    return Permutation(list(perm)).signature()


def shifted_composition(lam: Sequence[int], perm: Sequence[int]) -> Optional[tuple[int, ...]]:
    """``(lam_i + w(i) - i)_i``, or None if any entry is negative."""
    out = tuple(l + w - i for i, (l, w) in enumerate(zip(lam, perm)))
    if any(x < 0 for x in out):
        return None
    return out


@lru_cache(maxsize=None)
def _a_sorted(nu: IntegerPartition, weights: tuple[int, ...]) -> int:
    return a_coeff_ssmt(nu, weights)


def _a_symmetric(nu: IntegerPartition, composition: Sequence[int]) -> int:
    # a(nu, mu) is symmetric in mu and ignores zero entries.
    key = tuple(sorted((x for x in composition if x), reverse=True))
    return _a_sorted(nu, key)


def r_coeff(lam: IntegerPartition, nu: IntegerPartition) -> int:
    """Restriction coefficient by the signed sum over S_n of shifted a-coefficients.

    Args:
        lam: Partition with at most ``n`` parts.
        nu: Partition of ``n``.
    """
    n = nu.size
    if len(lam) > n:
        return 0
    padded = tuple(lam.parts) + (0,) * (n - len(lam))
    total = 0
    for perm in itertools.permutations(range(n)):
        shifted = shifted_composition(padded, perm)
        if shifted is None:
            continue
        total += _sign(perm) * _a_symmetric(nu, shifted)
    return total


def z_coefficient(rho: IntegerPartition) -> int:
    """Centralizer size ``prod_i i^m_i m_i!`` of the cycle type rho."""
    return math.prod(part**m * math.factorial(m) for part, m in Counter(rho.parts).items())


def _beta_set(parts: Sequence[int], length: int) -> tuple[int, ...]:
    padded = list(parts) + [0] * (length - len(parts))
    return tuple(p + length - 1 - i for i, p in enumerate(padded))


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        # Sign from the number of beads jumped over.
        crossed = sum(1 for x in beta if target < x < b)
        moved = tuple(sorted((beads - {b}) | {target}, reverse=True))
        total += (-1) ** crossed * _mn(moved, rest)
    return total


def character(nu: IntegerPartition, rho: IntegerPartition) -> int:
    """Irreducible S_n character chi^nu at cycle type rho, by Murnaghan-Nakayama.

    Rim hooks are removed as bead moves on the beta-set (abacus) of nu.
    """
    if nu.size != rho.size:
        raise ValueError(f"|nu|={nu.size} differs from |rho|={rho.size}")
    return _mn(_beta_set(nu.parts, max(len(nu), 1)), tuple(rho.parts))


def power_sum_at_cycle_type(r: int, rho: IntegerPartition) -> int:
    """``p_r`` evaluated at the eigenvalues of a permutation of cycle type rho."""
    return sum(c for c in rho.parts if r % c == 0)


def polynomial_character(lam: IntegerPartition, rho: IntegerPartition) -> Fraction:
    """Trace of a permutation of cycle type rho on W_lam, via the power-sum expansion of s_lam."""
    total = Fraction(0)
    for mu in enumerate_partitions(lam.size):
        value = math.prod(power_sum_at_cycle_type(part, rho) for part in mu.parts)
        if value:
            total += Fraction(character(lam, mu) * value, z_coefficient(mu))
    return total


def r_coeff_character_oracle(
    lam: IntegerPartition, nu: IntegerPartition, n: int, max_n: Optional[int] = None
) -> int:
    """Restriction coefficient by the character inner product over cycle types.

    Raises:
        ResourceLimitError: If ``n`` or ``|lam|`` exceeds the configured cap.
        ValueError: If the inner product is not an integer.
    """
    cap = LimitsConfig().max_character_n if max_n is None else max_n
    if n > cap or lam.size > cap:
        raise ResourceLimitError("character oracle", max(n, lam.size), cap)
    if len(lam) > n:
        return 0
    total = Fraction(0)
    for rho in enumerate_partitions(n):
        total += polynomial_character(lam, rho) * character(nu, rho) / z_coefficient(rho)
    if total.denominator != 1:
        raise ValueError(f"non-integral inner product {total}")
    return int(total)


def a_coeff_table(n: int, lams: Sequence[Sequence[int]]) -> dict[IntegerPartition, dict[tuple[int, ...], int]]:
    """a-coefficients for every partition of n against each lam."""
    return {nu: {tuple(lam): a_coeff_ssmt(nu, lam) for lam in lams} for nu in enumerate_partitions(n)}


def iter_r_coeffs(lam: IntegerPartition, n: int) -> Iterator[tuple[IntegerPartition, int]]:
    for nu in enumerate_partitions(n):
        yield nu, r_coeff(lam, nu)
