"""Tests for the tableau wire models."""

import pytest

from mpalg.core.errors import WireFormatError
from mpalg.models.diagram import validate_model
from mpalg.models.tableau import TableauModel, TableauPairModel


class TestTableauModel:
    """Tests for TableauModel."""

    def test_to_tableau(self, rsk_221):
        """Cells are sorted and the shape carried over."""
        _, t, _ = rsk_221
        model = validate_model(TableauModel, {"shape": [3, 2, 1], "rows": [[[], [], [1]], [[2], [2, 1]], [[3]]]})
        assert model.to_tableau() == t

    def test_from_tableau(self, rsk_221):
        """Dump gives lists of symbols per cell."""
        _, _, s = rsk_221
        data = TableauModel.from_tableau(s).model_dump()
        assert data == {"shape": [3, 2, 1], "rows": [[[], [], []], [[2], [1, 3]], [[1, 2]]]}

    def test_rows_must_match_shape(self):
        """Row lengths are checked against the shape."""
        with pytest.raises(WireFormatError, match="row lengths"):
            validate_model(TableauModel, {"shape": [2], "rows": [[[1]]]})

    def test_shape_must_be_partition(self):
        """Shapes weakly decrease."""
        with pytest.raises(WireFormatError, match="not a partition"):
            validate_model(TableauModel, {"shape": [1, 2], "rows": [[[1]], [[1], [2]]]})


class TestTableauPairModel:
    """Tests for TableauPairModel."""

    def test_alias(self, rsk_221):
        """The pair dumps with T, S and lambda keys."""
        _, t, s = rsk_221
        pair = TableauPairModel(T=TableauModel.from_tableau(t), S=TableauModel.from_tableau(s), lam=[2, 2, 1])
        data = pair.model_dump(by_alias=True)
        assert set(data) == {"T", "S", "lambda"}
        assert validate_model(TableauPairModel, data) == pair
