"""Locate the enclosing git checkout, where a shared mpalg.toml may live."""

import os
from pathlib import Path
from typing import Optional

GIT_ROOT_ENV = "MPALG_GIT_ROOT"


def find_git_root(start_path: Optional[Path] = None) -> Optional[Path]:
    """Nearest directory at or above ``start_path`` that holds a ``.git`` entry.

    ``MPALG_GIT_ROOT``, when set, is returned as is. Without ``start_path``
    the search begins in the working directory. Returns None outside a
    checkout.
    """
    pinned = os.environ.get(GIT_ROOT_ENV)
    if pinned:
        return Path(pinned)

    here = Path.cwd() if start_path is None else Path(start_path).resolve()
    return next((d for d in (here, *here.parents) if (d / ".git").exists()), None)
