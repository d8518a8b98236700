"""Utility helpers for mpalg."""

from mpalg.utils.git import find_git_root
from mpalg.utils.log import configure_logging

__all__ = ["configure_logging", "find_git_root"]
