"""Tests for multisets, partitions, weak compositions and tableaux."""

import math

import pytest

from mpalg.core.combinatorics import (
    IntegerPartition,
    MultisetTableau,
    Ordering,
    WeakCompositionMatrix,
    bell,
    contingency_tables,
    count_ssmt,
    count_syt,
    count_weak_compositions,
    counts_of,
    enumerate_partitions,
    enumerate_ssmt,
    enumerate_weak_compositions,
    graded_lex_compare,
    multinomial,
    multiset_from_counts,
    set_partitions,
    sub_multisets,
    validate_block_cover,
)
from mpalg.core.errors import MalformedDiagramError, ResourceLimitError


class TestGradedLex:
    """Tests for the graded lexicographic order."""

    def test_cardinality_first(self):
        """A smaller multiset precedes a larger one."""
        assert graded_lex_compare((2,), (1, 1)) == Ordering.LT
        assert graded_lex_compare((), (1,)) == Ordering.LT

    def test_lex_within_cardinality(self):
        """Equal sizes compare lexicographically."""
        assert graded_lex_compare((1, 2), (1, 1)) == Ordering.GT
        assert graded_lex_compare((2, 1), (1, 2)) == Ordering.EQ

    def test_sub_multisets_sorted(self):
        """Sub-multisets of {1, 1, 2} in graded lex order."""
        assert sub_multisets((2, 1)) == [(), (1,), (2,), (1, 1), (1, 2), (1, 1, 2)]

    def test_counts_roundtrip(self):
        """Multiplicity vectors expand and contract."""
        assert multiset_from_counts((2, 0, 1)) == (1, 1, 3)
        assert counts_of((1, 1, 3), 3) == (2, 0, 1)

    def test_counts_out_of_alphabet(self):
        """Symbols above s are rejected."""
        with pytest.raises(ValueError):
            counts_of((4,), 3)


class TestWeakCompositions:
    """Tests for M(n, lambda)."""

    def test_enumerate_single_row(self):
        """M(2, (1,)) has the two unit vectors, in lex order."""
        got = enumerate_weak_compositions(2, (1,))
        assert got == [WeakCompositionMatrix(((0, 1),)), WeakCompositionMatrix(((1, 0),))]

    @pytest.mark.parametrize("n,lam", [(3, (2,)), (3, (1, 1)), (4, (2, 1)), (2, (3,))])
    def test_count_matches_enumeration(self, n, lam):
        """The count formula agrees with the enumeration."""
        assert count_weak_compositions(n, lam) == len(enumerate_weak_compositions(n, lam))

    def test_count_values(self):
        """C(n + l - 1, l) per row."""
        assert count_weak_compositions(3, (2,)) == 6
        assert count_weak_compositions(3, (1, 1)) == 9

    def test_row_sums(self):
        """Every member has the requested row sums."""
        assert all(m.lam == (2, 1) for m in enumerate_weak_compositions(3, (2, 1)))

    def test_columns(self):
        """Columns read down the rows."""
        m = WeakCompositionMatrix(((2, 0, 0), (0, 1, 0)))
        assert m.columns() == [(2, 0), (0, 1), (0, 0)]
        assert WeakCompositionMatrix.from_columns(m.columns(), 2) == m

    def test_n_must_be_positive(self):
        """n = 0 is rejected."""
        with pytest.raises(ValueError):
            enumerate_weak_compositions(0, (1,))


class TestIntegerPartition:
    """Tests for IntegerPartition."""

    def test_trailing_zeros_dropped(self):
        """(2, 1, 0) is (2, 1)."""
        assert IntegerPartition((2, 1, 0)) == IntegerPartition.of(2, 1)

    def test_rejects_increasing(self):
        """Parts must weakly decrease."""
        with pytest.raises(ValueError):
            IntegerPartition((1, 2))

    def test_conjugate(self):
        """Transposing the Young diagram."""
        assert IntegerPartition.of(3, 1).conjugate() == IntegerPartition.of(2, 1, 1)

    def test_b_statistic(self):
        """sum (i - 1) nu_i."""
        assert IntegerPartition.of(2, 2, 1).b_statistic() == 4
        assert IntegerPartition.of(5).b_statistic() == 0

    def test_enumerate_order(self):
        """(n) first, (1^n) last."""
        parts = enumerate_partitions(4)
        assert [p.parts for p in parts] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    @pytest.mark.parametrize("parts,expected", [((3, 2), 5), ((2, 1), 2), ((4, 1), 4), ((3, 2, 1), 16)])
    def test_count_syt(self, parts, expected):
        """Hook length formula."""
        assert count_syt(IntegerPartition(parts)) == expected

    def test_syt_squares_sum_to_factorial(self):
        """sum f_nu^2 = n!."""
        assert sum(count_syt(nu) ** 2 for nu in enumerate_partitions(5)) == math.factorial(5)


class TestSetPartitions:
    """Tests for set partitions, contingency tables and multinomials."""

    @pytest.mark.parametrize("m,expected", [(0, 1), (2, 2), (4, 15), (6, 203)])
    def test_bell(self, m, expected):
        """Bell numbers."""
        assert bell(m) == expected

    def test_set_partitions_count(self):
        """Enumeration matches the Bell number."""
        assert len(list(set_partitions([1, 2, 3, 4]))) == 15
        assert list(set_partitions([])) == [[]]

    def test_contingency_tables(self):
        """2x2 tables with all margins 1 are the two permutation matrices."""
        assert sorted(contingency_tables((1, 1), (1, 1))) == [((0, 1), (1, 0)), ((1, 0), (0, 1))]

    def test_contingency_mismatched_totals(self):
        """No table when the margins disagree."""
        assert list(contingency_tables((2,), (1,))) == []

    def test_multinomial(self):
        """4! / (2! 1! 1!)."""
        assert multinomial(4, (2, 1, 1)) == 12

    def test_block_cover_ok(self):
        """A valid cover passes silently."""
        validate_block_cover([[1, -1], [-2, 2]], {1, 2, -1, -2})

    @pytest.mark.parametrize(
        "blocks",
        [[[1, -1]], [[1, -1], [1, 2, -2]], [[1, -1], [], [2, -2]], [[1, -1], [2, -2, 3]]],
    )
    def test_block_cover_rejects(self, blocks):
        """Missing, repeated, empty or out-of-range vertices are malformed."""
        with pytest.raises(MalformedDiagramError):
            validate_block_cover(blocks, {1, 2, -1, -2})


class TestMultisetTableaux:
    """Tests for semistandard multiset tableaux."""

    def test_empty_entries_allowed(self):
        """Row (empty, {1,1}) and row ({1}, {1}) are both semistandard."""
        got = enumerate_ssmt(IntegerPartition.of(2), (1, 1))
        assert [t.rows for t in got] == [(((), (1, 1)),), (((1,), (1,)),)]

    def test_cap(self):
        """Enumeration stops once more than max_count tableaux are found."""
        assert len(enumerate_ssmt(IntegerPartition.of(2), (1, 1), max_count=2)) == 2
        with pytest.raises(ResourceLimitError):
            enumerate_ssmt(IntegerPartition.of(2), (1, 1), max_count=1)

    def test_columns_strict(self):
        """A column of two equal entries is not semistandard."""
        assert count_ssmt(IntegerPartition.of(1, 1), (1, 1)) == 1
        assert not MultisetTableau.from_rows([[[1]], [[1]]]).is_semistandard()

    def test_violations_named(self):
        """Row decrease is reported."""
        t = MultisetTableau.from_rows([[[1, 1], [2]]])
        assert any("decreases" in v for v in t.violations())

    def test_content(self):
        """Content is the union of entries."""
        t = MultisetTableau.from_rows([[[], [], [1]], [[2], [1, 2]], [[3]]])
        assert t.content() == (1, 1, 2, 2, 3)
        assert t.shape == IntegerPartition.of(3, 2, 1)

    def test_every_enumerated_tableau_is_semistandard(self):
        """Enumeration yields only valid tableaux with the right content."""
        for nu in enumerate_partitions(3):
            for t in enumerate_ssmt(nu, (1, 1, 2)):
                assert t.is_semistandard()
                assert t.content() == (1, 1, 2)

    def test_counts_give_symmetric_power_dimension(self):
        """sum over nu of count * f_nu = dim Sym^2(F^3) = 6."""
        total = sum(count_ssmt(nu, (1, 1)) * count_syt(nu) for nu in enumerate_partitions(3))
        assert total == 6
