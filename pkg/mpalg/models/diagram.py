"""Wire models for diagrams and algebra elements.

An MP diagram is ``{"lambda": [2], "edges": [[[0], [1]], [[1], [0]], [[1], [1]]]}``;
zero edges are rejected. A partition diagram is ``{"k": 2, "blocks": [[1, -1], [2, -2]]}``
with ``-j`` standing for the bottom vertex ``j'``. Elements are lists of terms,
each a diagram plus a coefficient given either as a rational string or as a
polynomial coefficient array, constant term first.
"""

from __future__ import annotations

import json
from typing import Any, Literal, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from mpalg.core.errors import BasisMismatchError, WireFormatError
from mpalg.core.exact import PolyXi
from mpalg.core.multiset_algebra import MPElement, MultisetDiagram, canonicalize
from mpalg.core.partition_algebra import Basis, PAElement, SetPartitionDiagram

Coefficient = Union[str, int, list[Union[str, int]]]


def _poly(coeff: Coefficient) -> PolyXi:
    if isinstance(coeff, list):
        return PolyXi.from_strings(coeff)
    return PolyXi.from_strings([coeff])


def validate_model(model: type[BaseModel], data: Any) -> Any:
    """Validate ``data`` against ``model``, raising WireFormatError on failure.

    The error names the location of the first failing field, e.g.
    ``terms.0.edges.1``.
    """
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise WireFormatError(first["msg"], field=where) from e


def load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise WireFormatError(f"invalid JSON: {e.msg} at column {e.colno}", field=what) from e


class EdgeList(BaseModel):
    """Non-zero edges ``[I, J]`` of an MP diagram."""

    model_config = ConfigDict(frozen=True)

    edges: list[tuple[list[int], list[int]]]

    @field_validator("edges")
    @classmethod
    def _no_zero_edges(cls, edges: list[tuple[list[int], list[int]]]) -> list[tuple[list[int], list[int]]]:
        for e, (i, j) in enumerate(edges):
            if not any(i) and not any(j):
                raise ValueError(f"edge {e} is the zero edge")
        return edges


class MPDiagramModel(EdgeList):
    """An MP diagram; ``lambda`` may be left to the command line."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lam: Optional[list[int]] = Field(default=None, alias="lambda")

    def to_diagram(self, lam: Optional[Sequence[int]] = None) -> MultisetDiagram:
        return canonicalize(_resolve_lambda(self.lam, lam), self.edges)

    @classmethod
    def from_diagram(cls, g: MultisetDiagram) -> "MPDiagramModel":
        return cls(lam=list(g.lam), edges=[(list(i), list(j)) for i, j in g.edges])


class MPTermModel(EdgeList):
    coeff: Coefficient = "1"


class MPElementModel(BaseModel):
    """A linear combination of MP diagrams."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lam: Optional[list[int]] = Field(default=None, alias="lambda")
    terms: list[MPTermModel]

    def to_element(self, lam: Optional[Sequence[int]] = None) -> MPElement:
        weights = _resolve_lambda(self.lam, lam)
        out = MPElement(weights)
        for term in self.terms:
            out = out + MPElement.of(canonicalize(weights, term.edges), _poly(term.coeff))
        return out

    @classmethod
    def from_element(cls, a: MPElement) -> "MPElementModel":
        return cls(
            lam=list(a.lam),
            terms=[
                MPTermModel(edges=[(list(i), list(j)) for i, j in g.edges], coeff=c.to_strings())
                for g, c in a.items()
            ],
        )


def _resolve_lambda(given: Optional[Sequence[int]], fallback: Optional[Sequence[int]]) -> tuple[int, ...]:
    if given is None and fallback is None:
        raise WireFormatError("lambda is required", field="lambda")
    if given is not None and fallback is not None and tuple(given) != tuple(fallback):
        raise BasisMismatchError(f"JSON lambda {tuple(given)} differs from --lambda {tuple(fallback)}", field="lambda")
    return tuple(given if given is not None else fallback)  # type: ignore[arg-type]


def parse_mp_element(text: str, lam: Optional[Sequence[int]] = None, what: str = "element") -> MPElement:
    """Parse either a single MP diagram or a list of terms into an element."""
    data = load_json(text, what)
    if isinstance(data, dict) and "terms" in data:
        return validate_model(MPElementModel, data).to_element(lam)
    return MPElement.of(validate_model(MPDiagramModel, data).to_diagram(lam))


def parse_mp_diagram(text: str, lam: Optional[Sequence[int]] = None, what: str = "diagram") -> MultisetDiagram:
    return validate_model(MPDiagramModel, load_json(text, what)).to_diagram(lam)


class PADiagramModel(BaseModel):
    """A set partition diagram of ``{1..k, 1'..k'}``."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=0)
    blocks: list[list[int]]

    def to_diagram(self) -> SetPartitionDiagram:
        return SetPartitionDiagram.from_blocks(self.k, self.blocks)

    @classmethod
    def from_diagram(cls, d: SetPartitionDiagram) -> "PADiagramModel":
        return cls(k=d.k, blocks=[list(b) for b in d.blocks])


class PATermModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    blocks: list[list[int]]
    coeff: Coefficient = "1"


class PAElementModel(BaseModel):
    """A linear combination of partition diagrams in one basis."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=0)
    basis: Literal["diagram", "orbit"] = "diagram"
    terms: list[PATermModel]

    def to_element(self) -> PAElement:
        out = PAElement(self.k, Basis(self.basis))
        for term in self.terms:
            d = SetPartitionDiagram.from_blocks(self.k, term.blocks)
            out = out + PAElement.of(d, Basis(self.basis), _poly(term.coeff))
        return out

    @classmethod
    def from_element(cls, a: PAElement) -> "PAElementModel":
        return cls(
            k=a.k,
            basis=a.basis.value,
            terms=[PATermModel(blocks=[list(b) for b in d.blocks], coeff=c.to_strings()) for d, c in a.items()],
        )


def parse_pa_element(text: str, basis: Basis = Basis.DIAGRAM, what: str = "element") -> PAElement:
    """Parse either a single partition diagram or a list of terms into an element."""
    data = load_json(text, what)
    if isinstance(data, dict) and "terms" in data:
        return validate_model(PAElementModel, data).to_element()
    return PAElement.of(validate_model(PADiagramModel, data).to_diagram(), basis)
