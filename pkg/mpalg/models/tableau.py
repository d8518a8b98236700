"""Wire models for multiset tableaux.

A tableau is ``{"shape": [3, 2, 1], "rows": [[[], [], [1]], [[2], [1, 2]], [[3]]]}``;
each cell is the sorted list of its symbols.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from mpalg.core.combinatorics import IntegerPartition, MultisetTableau


class TableauModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    shape: list[int]
    rows: list[list[list[int]]]

    @model_validator(mode="after")
    def _rows_match_shape(self) -> "TableauModel":
        lengths = [len(r) for r in self.rows]
        if lengths != self.shape:
            raise ValueError(f"row lengths {lengths} do not match shape {self.shape}")
        if any(a < b for a, b in zip(self.shape, self.shape[1:])):
            raise ValueError(f"shape {self.shape} is not a partition")
        return self

    def to_tableau(self) -> MultisetTableau:
        rows = tuple(tuple(tuple(sorted(cell)) for cell in row) for row in self.rows)
        return MultisetTableau(IntegerPartition(tuple(self.shape)), rows)

    @classmethod
    def from_tableau(cls, t: MultisetTableau) -> "TableauModel":
        return cls(shape=list(t.shape.parts), rows=[[list(cell) for cell in row] for row in t.rows])


class TableauPairModel(BaseModel):
    """The ``(T, S)`` pair produced by RSK; T carries the primed content."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    T: TableauModel
    S: TableauModel
    lam: Optional[list[int]] = Field(default=None, alias="lambda")
