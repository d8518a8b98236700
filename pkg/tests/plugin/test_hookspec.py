"""Tests for the suite hook specification.

Tests verify that:
- MpalgHookSpec defines the get_checks hook
- hookimpl decorator is available for suites
- SuitePlugin base class provides sensible defaults
"""

from mpalg.plugin import MpalgHookSpec, SuitePlugin, hookimpl


def test_hookspec_defines_get_checks():
    """MpalgHookSpec should define get_checks."""
    assert hasattr(MpalgHookSpec(), "get_checks")


def test_base_suite_has_no_checks():
    """SuitePlugin should opt out by default."""

    class EmptySuite(SuitePlugin):
        name = "empty"

    assert EmptySuite().get_checks("tiny") == []


def test_check_builder_sets_suite():
    """SuitePlugin.check names the owning suite."""

    class OneSuite(SuitePlugin):
        name = "one"

        @hookimpl
        def get_checks(self, size):
            return [self.check("only", lambda ctx: "ok", "a single check")]

    (check,) = OneSuite().get_checks("desk")
    assert check.suite == "one"
    assert check.check_id == "one:only"
    assert check.description == "a single check"
    assert check.run(None) == "ok"
