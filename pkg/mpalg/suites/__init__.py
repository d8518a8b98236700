"""Built-in verification suites for mpalg."""

from mpalg.suites.algebra import BalancedSuite, EmbeddingSuite, ExamplesSuite, OrbitBasisSuite
from mpalg.suites.combinatorics import MultiplicitySuite, RestrictionSuite, RskSuite
from mpalg.suites.duality import OracleSuite, SchurWeylSuite

# Registration order is report order.
BUILTIN_SUITES = [
    ExamplesSuite,
    OracleSuite,
    SchurWeylSuite,
    EmbeddingSuite,
    OrbitBasisSuite,
    MultiplicitySuite,
    RestrictionSuite,
    RskSuite,
    BalancedSuite,
]

__all__ = [
    "BUILTIN_SUITES",
    "BalancedSuite",
    "EmbeddingSuite",
    "ExamplesSuite",
    "MultiplicitySuite",
    "OracleSuite",
    "OrbitBasisSuite",
    "RestrictionSuite",
    "RskSuite",
    "SchurWeylSuite",
]
