"""Data models for mpalg."""

from mpalg.models.diagram import (
    MPDiagramModel,
    MPElementModel,
    PADiagramModel,
    PAElementModel,
    parse_mp_diagram,
    parse_mp_element,
    parse_pa_element,
    validate_model,
)
from mpalg.models.report import Check, CheckContext, CheckFailure, CheckResult, SuiteReport
from mpalg.models.tableau import TableauModel, TableauPairModel

__all__ = [
    "Check",
    "CheckContext",
    "CheckFailure",
    "CheckResult",
    "MPDiagramModel",
    "MPElementModel",
    "PADiagramModel",
    "PAElementModel",
    "SuiteReport",
    "TableauModel",
    "TableauPairModel",
    "parse_mp_diagram",
    "parse_mp_element",
    "parse_pa_element",
    "validate_model",
]
