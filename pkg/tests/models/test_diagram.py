"""Tests for the JSON wire models of diagrams and elements."""

import json
from fractions import Fraction

import pytest

from mpalg.core.errors import BasisMismatchError, MalformedDiagramError, WireFormatError
from mpalg.core.exact import XI, PolyXi
from mpalg.core.multiset_algebra import MPElement
from mpalg.core.partition_algebra import Basis, PAElement, SetPartitionDiagram
from mpalg.models.diagram import (
    MPDiagramModel,
    MPElementModel,
    PAElementModel,
    parse_mp_diagram,
    parse_mp_element,
    parse_pa_element,
)


class TestMPDiagram:
    """Tests for MP diagram parsing."""

    def test_parse(self, gamma1, gamma1_json):
        """A diagram with its own lambda."""
        assert parse_mp_diagram(gamma1_json) == gamma1

    def test_lambda_from_command_line(self, gamma1):
        """lambda may come from outside the JSON."""
        text = '{"edges": [[[1], [1]], [[0], [1]], [[1], [0]]]}'
        assert parse_mp_diagram(text, (2,)) == gamma1

    def test_lambda_missing(self):
        """Without any lambda the input is rejected."""
        with pytest.raises(WireFormatError, match="lambda"):
            parse_mp_diagram('{"edges": [[[2], [2]]]}')

    def test_lambda_conflict(self, gamma1_json):
        """JSON and command-line lambda must agree."""
        with pytest.raises(BasisMismatchError):
            parse_mp_diagram(gamma1_json, (1, 1))

    def test_zero_edge_rejected(self):
        """Zero edges are not allowed on the wire."""
        with pytest.raises(WireFormatError, match="edges"):
            parse_mp_diagram('{"lambda": [1], "edges": [[[0], [0]], [[1], [1]]]}')

    def test_weight_condition(self):
        """Edges must sum to (lambda, lambda)."""
        with pytest.raises(MalformedDiagramError):
            parse_mp_diagram('{"lambda": [2], "edges": [[[1], [1]]]}')

    def test_invalid_json(self):
        """Syntax errors are wire format errors naming the argument."""
        with pytest.raises(WireFormatError, match="a:"):
            parse_mp_diagram('{"lambda": [2], ', what="a")

    def test_dump_uses_alias(self, gamma1):
        """Serialised diagrams use the lambda key."""
        data = MPDiagramModel.from_diagram(gamma1).model_dump(by_alias=True)
        assert data == {"lambda": [2], "edges": [([0], [1]), ([1], [0]), ([1], [1])]}


class TestMPElement:
    """Tests for MP element parsing."""

    def test_single_diagram_is_unit_coefficient(self, gamma1, gamma1_json):
        """A bare diagram parses as [g]."""
        assert parse_mp_element(gamma1_json) == MPElement.of(gamma1)

    def test_terms(self, gamma1, doubled):
        """Terms accept rational strings and coefficient arrays."""
        text = json.dumps(
            {
                "lambda": [2],
                "terms": [
                    {"edges": [[[0], [1]], [[1], [0]], [[1], [1]]], "coeff": ["-2", "1"]},
                    {"edges": [[[1], [1]], [[1], [1]]], "coeff": "1/2"},
                ],
            }
        )
        expected = MPElement((2,), {gamma1: XI - 2, doubled: PolyXi.constant(Fraction(1, 2))})
        assert parse_mp_element(text) == expected

    def test_repeated_terms_add(self, gamma1):
        """Equal diagrams accumulate and cancel."""
        term = {"edges": [[[0], [1]], [[1], [0]], [[1], [1]]], "coeff": "1"}
        negative = dict(term, coeff="-1")
        text = json.dumps({"lambda": [2], "terms": [term, term, negative, negative]})
        assert parse_mp_element(text).is_zero()

    def test_from_element(self, gamma1_squared):
        """Dumping lists terms in sorted order with string coefficients."""
        data = MPElementModel.from_element(gamma1_squared).model_dump(by_alias=True)
        assert data["lambda"] == [2]
        assert [t["coeff"] for t in data["terms"]] == [["4"], ["-2", "1"], ["-4", "2"]]

    def test_bad_coefficient(self, gamma1):
        """Non-rational coefficients are rejected."""
        text = json.dumps({"lambda": [2], "terms": [{"edges": [[[2], [2]]], "coeff": "x"}]})
        with pytest.raises(WireFormatError):
            parse_mp_element(text)


class TestPAElement:
    """Tests for partition algebra parsing."""

    def test_single_diagram(self):
        """A bare diagram in the requested basis."""
        got = parse_pa_element('{"k": 2, "blocks": [[1, -1], [2, -2]]}', Basis.ORBIT)
        assert got == PAElement.of(SetPartitionDiagram.identity(2), Basis.ORBIT)

    def test_terms(self):
        """Terms carry the basis."""
        text = '{"k": 1, "basis": "orbit", "terms": [{"blocks": [[1], [-1]], "coeff": "3"}]}'
        got = parse_pa_element(text)
        assert got.basis == Basis.ORBIT
        assert len(got) == 1

    def test_bad_basis(self):
        """Only diagram and orbit are bases."""
        with pytest.raises(WireFormatError, match="basis"):
            parse_pa_element('{"k": 1, "basis": "cell", "terms": []}')

    def test_malformed_blocks(self):
        """Blocks must partition the vertices."""
        with pytest.raises(MalformedDiagramError):
            parse_pa_element('{"k": 2, "blocks": [[1, -1]]}')

    def test_roundtrip(self):
        """from_element then to_element recovers the element."""
        a = PAElement.of(SetPartitionDiagram.identity(2), coeff=XI)
        assert PAElementModel.from_element(a).to_element() == a
