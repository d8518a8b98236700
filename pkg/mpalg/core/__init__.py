"""Core logic for mpalg.

This module provides the core functionality:
- exact: Polynomials in xi with rational coefficients
- combinatorics: Multisets, partitions, tableaux and their counts
- partition_algebra / multiset_algebra: Diagram bases and products
- schur_weyl: Action on the permutation module M(n, lambda)
- symmetric_functions / rsk: Multiplicity and bijection engines
- SuiteManager: Verification suite discovery and execution
"""

from mpalg.core.config import (
    Config,
    ConfigError,
    ConfigLoader,
    LimitsConfig,
    OutputConfig,
    VerifyConfig,
)
from mpalg.core.errors import (
    BasisMismatchError,
    IncompatibleTableauxError,
    MalformedDiagramError,
    MpalgError,
    OracleDataError,
    ResourceLimitError,
    WireFormatError,
)
from mpalg.core.exact import ONE, XI, ZERO, PolyXi
from mpalg.core.multiset_algebra import MPElement, MultisetDiagram
from mpalg.core.partition_algebra import Basis, PAElement, SetPartitionDiagram
from mpalg.core.suites import SuiteManager, UnknownSuiteError

__all__ = [
    "Basis",
    "BasisMismatchError",
    "Config",
    "ConfigError",
    "ConfigLoader",
    "IncompatibleTableauxError",
    "LimitsConfig",
    "MPElement",
    "MalformedDiagramError",
    "MpalgError",
    "MultisetDiagram",
    "ONE",
    "OracleDataError",
    "OutputConfig",
    "PAElement",
    "PolyXi",
    "ResourceLimitError",
    "SetPartitionDiagram",
    "SuiteManager",
    "UnknownSuiteError",
    "VerifyConfig",
    "WireFormatError",
    "XI",
    "ZERO",
]
