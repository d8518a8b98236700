"""Tests for exact rationals and polynomials in xi."""

from fractions import Fraction

import pytest

from mpalg.core.errors import OracleDataError, WireFormatError
from mpalg.core.exact import (
    ONE,
    XI,
    ZERO,
    PolyXi,
    eval_poly,
    falling_factorial,
    format_rational,
    interpolate,
    parse_rational,
)


class TestRationalWireForm:
    """Tests for the "p/q" string form."""

    def test_parse_reduces(self):
        """Ratios are reduced on parse."""
        assert parse_rational("3/6") == Fraction(1, 2)

    def test_parse_integer(self):
        """Plain integers and ints parse."""
        assert parse_rational("-4") == -4
        assert parse_rational(7) == 7

    @pytest.mark.parametrize("bad", ["abc", "1/0", "1.5", True])
    def test_parse_rejects(self, bad):
        """Anything but an integer ratio is a wire format error."""
        with pytest.raises(WireFormatError):
            parse_rational(bad)

    def test_format(self):
        """Denominator 1 prints without a slash."""
        assert format_rational(Fraction(1, 2)) == "1/2"
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(-3) == "-3"


class TestPolyXi:
    """Tests for PolyXi arithmetic."""

    def test_trailing_zeros_trimmed(self):
        """(xi + 1) - xi is the constant 1."""
        assert (XI + 1) - XI == ONE
        assert (XI - XI).is_zero()

    def test_product(self):
        """(xi - 2)(xi + 2) = xi^2 - 4."""
        assert ((XI - 2) * (XI + 2)).to_strings() == ["-4", "0", "1"]

    def test_evaluate(self):
        """Evaluation at an integer."""
        assert (XI - 2)(5) == 3
        assert eval_poly(XI * XI + 1, 3) == 10

    def test_str(self):
        """Human-readable rendering, highest degree first."""
        assert str(XI - 2) == "ξ - 2"
        assert str(ZERO) == "0"
        assert str(PolyXi.from_strings(["1/2", "0", "-3"])) == "-3·ξ^2 + 1/2"

    def test_strings_roundtrip(self):
        """Coefficient arrays re-parse to the same polynomial."""
        p = PolyXi.from_strings(["1/3", "-2", "5"])
        assert PolyXi.from_strings(p.to_strings()) == p


class TestFallingFactorial:
    """Tests for falling_factorial."""

    def test_length_zero(self):
        """The empty product is 1."""
        assert falling_factorial(XI, 0) == ONE

    def test_length_two(self):
        """(xi)_2 = xi^2 - xi."""
        assert falling_factorial(XI, 2).to_strings() == ["0", "-1", "1"]

    def test_vanishes_below_length(self):
        """(n)_l = 0 for 0 <= n < l."""
        f = falling_factorial(XI, 4)
        assert all(f(n) == 0 for n in range(4))
        assert f(5) == 120

    def test_negative_length(self):
        """Negative lengths are rejected."""
        with pytest.raises(ValueError):
            falling_factorial(XI, -1)


class TestInterpolate:
    """Tests for interpolate."""

    def test_recovers_square(self):
        """Three points of xi^2 give xi^2 back."""
        assert interpolate([(0, 0), (1, 1), (2, 4)]) == XI * XI

    def test_rational_values(self):
        """Rational samples interpolate exactly."""
        p = interpolate([(1, Fraction(1, 2)), (3, Fraction(3, 2))])
        assert p.to_strings() == ["0", "1/2"]

    def test_duplicate_abscissa(self):
        """Repeated x values cannot be interpolated."""
        with pytest.raises(OracleDataError):
            interpolate([(1, 1), (1, 2)])

    def test_no_points(self):
        """An empty sample is rejected."""
        with pytest.raises(OracleDataError):
            interpolate([])
