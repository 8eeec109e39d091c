"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``SKEWCERT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from skewcert.planarity import _lr_py


def _load() -> tuple[ModuleType, str]:
    if os.environ.get("SKEWCERT_PURE_PYTHON", "") not in ("", "0"):
        return _lr_py, "python"
    try:
        from skewcert.planarity import _lr_ext
    except ImportError:
        return _lr_py, "python"
    return _lr_ext, "compiled"


kernel, BACKEND = _load()


def available_kernels() -> dict[str, ModuleType]:
    kernels = {"python": _lr_py}
    try:
        from skewcert.planarity import _lr_ext
    except ImportError:
        pass
    else:
        kernels["compiled"] = _lr_ext
    return kernels
