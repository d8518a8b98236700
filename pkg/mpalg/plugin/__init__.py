"""Plugin system for mpalg verification suites.

Usage:
    from mpalg.plugin import SuitePlugin, hookimpl

    class MySuite(SuitePlugin):
        name = "my-suite"

        @hookimpl
        def get_checks(self, size):
            return [self.check("identity", lambda ctx: "ok")]
"""

from __future__ import annotations

from typing import Callable

import pluggy

from mpalg.models.report import Check, CheckContext
from mpalg.plugin.hookspec import MpalgHookSpec

hookimpl = pluggy.HookimplMarker("mpalg")

__all__ = ["MpalgHookSpec", "SuitePlugin", "hookimpl"]


class SuitePlugin:
    """Base class for verification suites.

    Subclasses must define ``name`` and override ``get_checks``.
    """

    name: str = "base"
    version: str = "0.0.0"
    description: str = ""

    def check(self, name: str, run: Callable[[CheckContext], str], description: str = "") -> Check:
        """Build a check belonging to this suite."""
        return Check(suite=self.name, name=name, description=description, run=run)

    @hookimpl
    def get_checks(self, size: str) -> list[Check]:
        """Default implementation: no checks."""
        return []
