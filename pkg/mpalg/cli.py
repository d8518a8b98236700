"""Main CLI module for mpalg.

This module re-exports the CLI for convenience. The main implementation
is in __main__.py.
"""

from mpalg.__main__ import cli

__all__ = ["cli"]
