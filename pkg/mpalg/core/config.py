"""TOML configuration for mpalg.

Three sections are read: ``[limits]`` caps the size of anything enumerated or
assembled, ``[output]`` picks colour and the default format, and ``[verify]``
drives the acceptance suites. Files are layered user < git root < local, and
``MPA_THREADS`` is applied on top.
"""

import os
import re
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Optional, TypeVar

import tomli

from mpalg.core.errors import MpalgError
from mpalg.utils.git import find_git_root

THREADS_ENV = "MPA_THREADS"
CONFIG_NAME = "mpalg.toml"
OUTPUT_FORMATS = ("json", "text", "csv")
SIZES = ("tiny", "desk")

_S = TypeVar("_S", bound="_Section")


class ConfigError(MpalgError):
    """A config file could not be read, or holds a value mpalg cannot use.

    Attributes:
        line: Line of the TOML error, when the parser reported one.
        path: File the error came from, if any.
    """

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[Path] = None):
        self.line = line
        self.path = path
        where = " ".join(p for p in (str(path) if path else "", f"line {line}" if line is not None else "") if p)
        super().__init__(f"{where}: {message}" if where else message)


class _Section:
    """Dataclass section built from one TOML table; unknown keys are ignored."""

    name = ""

    @classmethod
    def from_dict(cls: type[_S], data: dict) -> _S:
        return cls(**{f.name: data[f.name] for f in fields(cls) if f.name in data})  # type: ignore[call-arg, arg-type]

    def _positive(self, *keys: str) -> None:
        for key in keys:
            value = getattr(self, key)
            # bool is an int subclass and never a valid count.
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise ConfigError(f"{self.name}.{key} must be a positive integer, got {value!r}")

    def _one_of(self, key: str, choices: tuple[str, ...]) -> None:
        value = getattr(self, key)
        if value not in choices:
            raise ConfigError(f"{self.name}.{key} must be one of {', '.join(choices)}, got {value!r}")


@dataclass
class LimitsConfig(_Section):
    """Size caps guarding enumeration and matrix assembly."""

    name = "limits"

    max_matrix_dim: int = 20_000
    max_enumeration: int = 2_000_000
    max_character_n: int = 8

    def validate(self) -> None:
        self._positive("max_matrix_dim", "max_enumeration", "max_character_n")


@dataclass
class OutputConfig(_Section):
    name = "output"

    color: bool = True
    format: str = "text"

    def validate(self) -> None:
        self._one_of("format", OUTPUT_FORMATS)


@dataclass
class VerifyConfig(_Section):
    """Settings for the verification suites.

    Attributes:
        seed: Seed for sampled checks; equal seeds give equal reports.
        threads: Worker threads used to run checks.
        samples: Random draws per sampled check.
        size: Sweep size, "tiny" or "desk".
    """

    name = "verify"

    seed: int = 20240101
    threads: int = 1
    samples: int = 25
    size: str = "desk"

    def validate(self) -> None:
        self._positive("threads", "samples")
        self._one_of("size", SIZES)


@dataclass
class Config:
    """Complete mpalg configuration."""

    limits: LimitsConfig = field(default_factory=LimitsConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        """Build from parsed TOML; missing tables and keys take defaults."""
        return cls(
            limits=LimitsConfig.from_dict(data.get("limits", {})),
            output=OutputConfig.from_dict(data.get("output", {})),
            verify=VerifyConfig.from_dict(data.get("verify", {})),
        )

    def validate(self) -> "Config":
        """Reject caps and counts that cannot be used.

        Raises:
            ConfigError: On the first invalid value, naming its dotted key.
        """
        self.limits.validate()
        self.verify.validate()
        self.output.validate()
        return self


def merge_tables(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Recursive merge of TOML tables; ``override`` wins on conflicts."""
    out = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = merge_tables(out[key], value)
        else:
            out[key] = value
    return out


class ConfigLoader:
    """Reads, layers and validates mpalg config files.

    Example usage:
        config = ConfigLoader().load(Path("mpalg.toml"))
        config = ConfigLoader().load_merged()  # every file in scope
    """

    def load(self, path: Optional[Path]) -> Config:
        """Load one file, or the defaults when ``path`` is None.

        Raises:
            ConfigError: If the file holds invalid TOML or values.
            FileNotFoundError: If ``path`` does not exist.
        """
        data: dict = {}
        if path is not None:
            if not path.exists():
                raise FileNotFoundError(f"Config file not found: {path}")
            data = self._read(path)
        return self._finish(data)

    def load_merged(self, start_path: Optional[Path] = None) -> Config:
        """Merge every discovered file, lowest precedence first, then apply the environment."""
        data: dict = {}
        for path in self.discover_configs(start_path):
            data = merge_tables(data, self._read(path))
        return self._finish(data)

    def discover_configs(self, start_path: Optional[Path] = None) -> list[Path]:
        """Existing config files, lowest precedence first.

        The candidates are ``~/.config/mpalg/config.toml``, then ``mpalg.toml``
        at the git root, then ``mpalg.toml`` in ``start_path`` (default: the
        working directory). A file reached twice is listed once.
        """
        start = Path.cwd() if start_path is None else Path(start_path).resolve()
        candidates = [Path(os.path.expanduser("~")) / ".config" / "mpalg" / "config.toml"]
        git_root = find_git_root(start)
        if git_root:
            candidates.append(git_root / CONFIG_NAME)
        candidates.append(start / CONFIG_NAME)

        found: list[Path] = []
        seen: set[Path] = set()
        for path in candidates:
            if path.exists() and path.resolve() not in seen:
                seen.add(path.resolve())
                found.append(path)
        return found

    def apply_environment(self, config: Config) -> Config:
        """``MPA_THREADS`` overrides ``verify.threads``.

        Raises:
            ConfigError: If the variable is not an integer.
        """
        raw = os.environ.get(THREADS_ENV)
        if raw:
            try:
                config.verify.threads = int(raw)
            except ValueError as e:
                raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from e
        return config

    def _finish(self, data: dict) -> Config:
        return self.apply_environment(Config.from_dict(data)).validate()

    def _read(self, path: Path) -> dict:
        try:
            return tomli.loads(path.read_text(encoding="utf-8"))
        except tomli.TOMLDecodeError as e:
            match = re.search(r"line (\d+)", str(e))
            raise ConfigError(str(e), line=int(match.group(1)) if match else None, path=path) from e
