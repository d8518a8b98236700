"""Verification suite management for mpalg.

This module provides the SuiteManager class that handles suite discovery
via Python entry points, registration with pluggy, and running checks.
"""

from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from importlib.metadata import entry_points
from typing import Iterable, Optional

import pluggy

from mpalg.core.config import LimitsConfig, VerifyConfig
from mpalg.core.errors import MpalgError
from mpalg.models.report import Check, CheckContext, CheckFailure, CheckResult, SuiteReport
from mpalg.plugin import MpalgHookSpec, SuitePlugin

log = logging.getLogger(__name__)

# Entry point group name for third-party suites
ENTRY_POINT_GROUP = "mpalg.suites"


class UnknownSuiteError(MpalgError):
    """Raised when a requested suite is not registered."""


class SuiteManager:
    """Manages suite discovery, registration and execution.

    Example:
        manager = SuiteManager()
        manager.register_builtins()
        manager.discover()
        report = manager.run(["oracle"], VerifyConfig(size="tiny"))
    """

    def __init__(self) -> None:
        self.pm = pluggy.PluginManager("mpalg")
        self.pm.add_hookspecs(MpalgHookSpec)
        self._suites: dict[str, SuitePlugin] = {}

    def register(self, suite: SuitePlugin) -> None:
        self._suites[suite.name] = suite
        self.pm.register(suite, name=suite.name)

    def unregister(self, name: str) -> None:
        if name in self._suites:
            self.pm.unregister(self._suites.pop(name))

    def register_builtins(self) -> None:
        from mpalg.suites import BUILTIN_SUITES

        for suite_class in BUILTIN_SUITES:
            if suite_class.name not in self._suites:
                self.register(suite_class())

    def discover(self) -> list[str]:
        """Discover and register suites from the ``mpalg.suites`` entry points.

        Returns:
            Names of the suites discovered.
        """
        discovered = []
        for ep in entry_points(group=ENTRY_POINT_GROUP):
            try:
                suite = ep.load()()
            except Exception as e:
                log.warning("skipping suite entry point %s: %s", ep.name, e)
                continue
            if suite.name in self._suites:
                continue
            self.register(suite)
            discovered.append(suite.name)
        return discovered

    def list_suites(self) -> list[str]:
        return list(self._suites.keys())

    def get_suite(self, name: str) -> SuitePlugin | None:
        return self._suites.get(name)

    def get_suite_info(self, name: str) -> dict[str, str] | None:
        suite = self._suites.get(name)
        if suite is None:
            return None
        return {
            "name": suite.name,
            "version": getattr(suite, "version", "0.0.0"),
            "description": getattr(suite, "description", ""),
        }

    def resolve(self, names: Iterable[str]) -> list[str]:
        """Expand ``all`` and reject unknown suite names.

        Raises:
            UnknownSuiteError: Naming the first unknown suite.
        """
        out: list[str] = []
        for name in names:
            expanded = self.list_suites() if name == "all" else [name]
            for suite in expanded:
                if suite not in self._suites:
                    known = ", ".join(self.list_suites())
                    raise UnknownSuiteError(f"unknown suite '{suite}' (known: {known})", field="suite")
                if suite not in out:
                    out.append(suite)
        return out

    def collect(self, names: Iterable[str], size: str) -> list[Check]:
        checks: list[Check] = []
        for name in self.resolve(names):
            checks.extend(self._suites[name].get_checks(size=size))
        return checks

    def run(
        self,
        names: Iterable[str],
        verify: VerifyConfig,
        limits: Optional[LimitsConfig] = None,
    ) -> SuiteReport:
        """Run the selected suites and report in declared check order.

        Each check gets its own random source seeded from the run seed and
        the check id, so results do not depend on thread scheduling.
        """
        limits = limits or LimitsConfig()
        checks = self.collect(names, verify.size)
        log.info("running %d checks on %d thread(s)", len(checks), verify.threads)

        def run_one(check: Check) -> CheckResult:
            ctx = CheckContext(
                rng=random.Random(f"{verify.seed}:{check.check_id}"),
                samples=verify.samples,
                size=verify.size,
                limits=limits,
            )
            start = time.perf_counter()
            try:
                detail = check.run(ctx)
                passed = True
            except CheckFailure as e:
                detail, passed = str(e), False
            except MpalgError as e:
                detail, passed = f"{type(e).__name__}: {e}", False
            except Exception as e:
                log.debug("%s raised", check.check_id, exc_info=True)
                detail, passed = f"{type(e).__name__}: {e}", False
            elapsed = time.perf_counter() - start
            log.info("%s %s (%.2fs)", "PASS" if passed else "FAIL", check.check_id, elapsed)
            return CheckResult(
                suite=check.suite, name=check.name, passed=passed, detail=detail, elapsed=round(elapsed, 4)
            )

        if verify.threads > 1:
            with ThreadPoolExecutor(max_workers=verify.threads) as pool:
                results = list(pool.map(run_one, checks))
        else:
            results = [run_one(c) for c in checks]
        return SuiteReport(seed=verify.seed, size=verify.size, results=results)
