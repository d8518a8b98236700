"""Exact rationals and univariate polynomials in the indeterminate xi.

Rationals are plain ``fractions.Fraction`` values, which are always stored in
lowest terms with a positive denominator. ``PolyXi`` is an immutable
polynomial with Fraction coefficients, constant term first.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from mpalg.core.errors import OracleDataError, WireFormatError

log = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]


def format_rational(value: Scalar) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Union[str, int]) -> Fraction:
    """Parse the ``"p/q"`` wire form of a rational.

    Raises:
        WireFormatError: If the text is not an integer or an integer ratio.
    """
    if isinstance(text, bool):
        raise WireFormatError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    try:
        num, _, den = str(text).strip().partition("/")
        if den:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as e:
        raise WireFormatError(f"not a rational: {text!r}") from e


def _normalize(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class PolyXi:
    """A polynomial in xi with exact rational coefficients.

    Attributes:
        coeffs: Coefficients indexed by degree, with no trailing zero. The
            zero polynomial has no coefficients.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> "PolyXi":
        return cls((Fraction(value),))

    @classmethod
    def xi(cls) -> "PolyXi":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def from_strings(cls, items: Sequence[Union[str, int]]) -> "PolyXi":
        """Build a polynomial from its wire form (constant term first)."""
        return cls(tuple(parse_rational(s) for s in items))

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def _coerce(self, other: object) -> "PolyXi":
        if isinstance(other, PolyXi):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyXi.constant(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "PolyXi":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(rhs.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = rhs.coeffs + (Fraction(0),) * (size - len(rhs.coeffs))
        return PolyXi(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "PolyXi":
        return PolyXi(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "PolyXi":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "PolyXi":
        return (-self) + other

    def __mul__(self, other: object) -> "PolyXi":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        if self.is_zero() or rhs.is_zero():
            return PolyXi()
        out = [Fraction(0)] * (len(self.coeffs) + len(rhs.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(rhs.coeffs):
                out[i + j] += a * b
        return PolyXi(tuple(out))

    __rmul__ = __mul__

    def __call__(self, n: Scalar) -> Fraction:
        return eval_poly(self, n)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for degree in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[degree]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if degree == 0:
                body = format_rational(mag)
            else:
                power = "ξ" if degree == 1 else f"ξ^{degree}"
                body = power if mag == 1 else f"{format_rational(mag)}·{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


ZERO = PolyXi()
ONE = PolyXi.constant(1)
XI = PolyXi.xi()


def eval_poly(f: PolyXi, n: Scalar) -> Fraction:
    """Evaluate ``f`` at ``xi = n`` by Horner's scheme."""
    acc = Fraction(0)
    x = Fraction(n)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def falling_factorial(f: PolyXi, length: int) -> PolyXi:
    """Return ``f (f - 1) ... (f - length + 1)``; the constant 1 for length 0.

    Args:
        f: Polynomial to start from.
        length: Number of factors, non-negative.
    """
    if length < 0:
        raise ValueError(f"falling factorial length must be non-negative, got {length}")
    out = ONE
    for i in range(length):
        out = out * (f - i)
    return out


def interpolate(points: Sequence[tuple[int, Scalar]]) -> PolyXi:
    """Lagrange interpolation through integer abscissae, exactly.

    Args:
        points: ``(x, y)`` samples with pairwise distinct ``x``.

    Returns:
        The unique polynomial of degree below ``len(points)`` through all points.

    Raises:
        OracleDataError: If there are no points or an abscissa repeats.
    """
    if not points:
        raise OracleDataError("interpolation needs at least one point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise OracleDataError(f"duplicate abscissa in {sorted(xs)}")

    result = ZERO
    for i, (xi_val, yi) in enumerate(zip(xs, (Fraction(y) for _, y in points))):
        if yi == 0:
            continue
        basis = ONE
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * PolyXi((-xj, Fraction(1)))
            denom *= xi_val - xj
        result = result + basis * (yi / denom)
    log.debug("interpolated %d points to degree %d", len(points), result.degree)
    return result
