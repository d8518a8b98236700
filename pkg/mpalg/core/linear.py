"""Finite linear combinations of basis labels with PolyXi coefficients."""

from __future__ import annotations

from types import MappingProxyType
from typing import Callable, Generic, Hashable, Iterable, Iterator, Mapping, TypeVar, Union

from mpalg.core.exact import ONE, ZERO, PolyXi, Scalar

L = TypeVar("L", bound=Hashable)
E = TypeVar("E", bound="LinearCombination")


def accumulate(
    pairs: Iterable[tuple[L, PolyXi]],
    into: dict[L, PolyXi] | None = None,
) -> dict[L, PolyXi]:
    """Sum coefficients per label, dropping labels whose sum vanishes."""
    out: dict[L, PolyXi] = {} if into is None else into
    for label, coeff in pairs:
        if coeff.is_zero():
            continue
        total = out.get(label, ZERO) + coeff
        if total.is_zero():
            out.pop(label, None)
        else:
            out[label] = total
    return out


class LinearCombination(Generic[L]):
    """Immutable linear combination over a label set.

    Subclasses fix what the labels are and which algebra they live in; the
    ``_context`` tuple must match for two elements to be combined.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[L, PolyXi] | Iterable[tuple[L, PolyXi]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms: Mapping[L, PolyXi] = MappingProxyType(accumulate(items))

    # Subclass hooks

    def _context(self) -> tuple:
        return ()

    def _rebuild(self: E, terms: Mapping[L, PolyXi]) -> E:
        raise NotImplementedError

    def _check_compatible(self, other: "LinearCombination") -> None:
        raise NotImplementedError

    # Mapping-like access

    @property
    def terms(self) -> Mapping[L, PolyXi]:
        return self._terms

    def __iter__(self) -> Iterator[L]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> list[tuple[L, PolyXi]]:
        """Terms in sorted label order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0])  # type: ignore[arg-type, return-value]

    def coefficient(self, label: L) -> PolyXi:
        return self._terms.get(label, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        """True when no coefficient depends on xi."""
        return all(c.is_constant() for c in self._terms.values())

    # Arithmetic

    def __add__(self: E, other: E) -> E:
        self._check_compatible(other)
        out = dict(self._terms)
        accumulate(other.terms.items(), out)
        return self._rebuild(out)

    def __neg__(self: E) -> E:
        return self._rebuild({k: -v for k, v in self._terms.items()})

    def __sub__(self: E, other: E) -> E:
        return self + (-other)

    def scale(self: E, factor: Union[PolyXi, Scalar]) -> E:
        poly = factor if isinstance(factor, PolyXi) else PolyXi.constant(factor)
        return self._rebuild({k: v * poly for k, v in self._terms.items()})

    def map_labels(self: E, fn: Callable[[L], L]) -> E:
        return self._rebuild(accumulate((fn(k), v) for k, v in self._terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCombination) or type(other) is not type(self):
            return NotImplemented
        return self._context() == other._context() and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash((self._context(), frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})·{k}" for k, c in self.items()) or "0"
        return f"{type(self).__name__}{self._context()}[{body}]"


def unit_terms(labels: Iterable[L]) -> dict[L, PolyXi]:
    """Coefficient-one terms for each label."""
    return {label: ONE for label in labels}
