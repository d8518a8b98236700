"""Tests for RSK on multiset partition diagrams."""

import pytest

from mpalg.core import multiset_algebra as mp
from mpalg.core import rsk
from mpalg.core.combinatorics import MultisetTableau
from mpalg.core.errors import IncompatibleTableauxError, OracleDataError


class TestForward:
    """Tests for the biword and insertion."""

    def test_biword_order(self, gamma1):
        """Columns sort by top, then bottom, with the empty columns first."""
        bw = rsk.to_biword(gamma1, 4)
        assert bw.columns == (((), ()), ((), (1,)), ((1,), ()), ((1,), (1,)))
        assert bw.n == 4

    def test_example(self, rsk_221):
        """The lambda = (2,2,1), n = 6 example."""
        d, t, s = rsk_221
        assert rsk.rsk_of_diagram(d, 6) == (t, s)

    def test_outputs_semistandard(self):
        """Every image is a pair of same-shape semistandard tableaux."""
        for d in mp.enumerate_basis((2, 1)):
            t, s = rsk.rsk_of_diagram(d, 4)
            assert t.is_semistandard() and s.is_semistandard()
            assert t.shape == s.shape
            assert t.shape.size == 4

    def test_rank_above_n(self, gamma1):
        """A rank-3 diagram does not fit in two columns."""
        with pytest.raises(OracleDataError):
            rsk.rsk_of_diagram(gamma1, 2)


class TestInverse:
    """Tests for inverse RSK."""

    def test_example(self, rsk_221):
        """(T, S) recovers the diagram."""
        d, t, s = rsk_221
        assert rsk.inverse_rsk(t, s) == d
        assert rsk.inverse_rsk(t, s, (2, 2, 1)) == d

    @pytest.mark.parametrize("lam", [(2,), (1, 1), (3,)])
    def test_roundtrip(self, lam):
        """inverse o rsk is the identity on rank-bounded diagrams."""
        n = sum(lam) + 1
        for d in mp.enumerate_basis(lam):
            if d.rank <= n:
                t, s = rsk.rsk_of_diagram(d, n)
                assert rsk.inverse_rsk(t, s, lam) == d

    def test_shape_mismatch(self):
        """T and S must share a shape."""
        t = MultisetTableau.from_rows([[[], [1, 1]]])
        s = MultisetTableau.from_rows([[[]], [[1, 1]]])
        with pytest.raises(IncompatibleTableauxError, match="shape"):
            rsk.inverse_rsk(t, s)

    def test_not_semistandard(self):
        """A decreasing row in S is rejected."""
        t = MultisetTableau.from_rows([[[], [1, 1]]])
        s = MultisetTableau.from_rows([[[1, 1], []]])
        with pytest.raises(IncompatibleTableauxError, match="S"):
            rsk.inverse_rsk(t, s)

    def test_content_mismatch(self):
        """Contents must match lambda."""
        t = MultisetTableau.from_rows([[[1], [1]]])
        s = MultisetTableau.from_rows([[[1], [1]]])
        with pytest.raises(IncompatibleTableauxError):
            rsk.inverse_rsk(t, s, (1,))


class TestSymmetry:
    """Tests for transposition and counting identities."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_transpose_swaps(self, n):
        """rsk(d^t) = (S, T) and symmetric diagrams count fixed blocks."""
        for d in mp.enumerate_basis((2,)):
            if d.rank <= n:
                report = rsk.symmetry_check(d, n)
                assert report.ok, f"{d}: {report}"

    def test_fixed_blocks_count_padding(self, doubled):
        """Empty columns count as fixed blocks."""
        assert rsk.fixed_blocks(doubled, 4) == 4

    @pytest.mark.parametrize("lam", [(1,), (2,), (1, 1)])
    def test_bimodule_identity(self, lam):
        """Rank-bounded diagrams number the sum of squared tableau counts."""
        for n in range(1, 2 * sum(lam) + 1):
            lhs, rhs = rsk.bimodule_count_identity(lam, n)
            assert lhs == rhs

    def test_shape_counts(self):
        """Shape tallies cover every diagram."""
        diagrams = [d for d in mp.enumerate_basis((2,)) if d.rank <= 3]
        assert sum(rsk.shape_counts(3, diagrams).values()) == len(diagrams)
