"""Verification check and report models."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Literal

import tomli_w
from pydantic import BaseModel, ConfigDict, Field

from mpalg.core.config import LimitsConfig


@dataclass(frozen=True)
class CheckContext:
    """What a check may draw on while running.

    Attributes:
        rng: Random source seeded from the run seed and the check's name.
        samples: How many random samples sampled checks should draw.
        size: Sweep size, "tiny" or "desk".
        limits: Size caps in force.
    """

    rng: random.Random
    samples: int
    size: str
    limits: LimitsConfig


class CheckFailure(AssertionError):
    """Raised by a check whose property does not hold."""


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailure(message)


class Check(BaseModel):
    """A named property check.

    ``run`` returns a short detail string on success and raises
    CheckFailure otherwise.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    suite: str
    name: str
    description: str = ""
    run: Callable[[CheckContext], str] = Field(exclude=True, repr=False)

    @property
    def check_id(self) -> str:
        return f"{self.suite}:{self.name}"


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    suite: str
    name: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0


class SuiteReport(BaseModel):
    """Results of one ``verify`` run in declared check order."""

    seed: int
    size: Literal["tiny", "desk"]
    results: list[CheckResult] = []

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> dict[str, int]:
        return {
            "total": len(self.results),
            "passed": sum(1 for r in self.results if r.passed),
            "failed": len(self.failures),
        }

    def to_dict(self) -> dict:
        data = self.model_dump()
        data["summary"] = self.summary()
        return data

    def write(self, path: Path) -> None:
        """Write the report as TOML when the suffix is ``.toml``, JSON otherwise."""
        if path.suffix == ".toml":
            path.write_text(tomli_w.dumps(self.to_dict()), encoding="utf-8")
        else:
            path.write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")
