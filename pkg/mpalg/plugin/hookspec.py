"""Hook specifications for mpalg verification suites.

This module defines the pluggy hook specification that suite plugins
implement. Plugins use the @hookimpl decorator to register their
implementations.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import pluggy

if TYPE_CHECKING:
    from mpalg.models.report import Check

hookspec = pluggy.HookspecMarker("mpalg")


class MpalgHookSpec:
    """Hook specification defining the suite interface."""

    @hookspec
    def get_checks(self, size: str) -> list["Check"]:
        """Return the checks this suite runs at the given sweep size.

        Args:
            size: "tiny" for a quick smoke run, "desk" for the full
                acceptance sweep.

        Returns:
            Checks in the order they should be reported.
        """
