"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when
``DIKROMA_PURE_PYTHON`` is set, the pure-Python twin is used. Callers go
through ``_backend.kernels`` at call time so :func:`set_backend` takes
effect everywhere.
"""

from __future__ import annotations

import importlib
import os

_MODULES = {"cython": "dikroma._kernels", "python": "dikroma._kernels_py"}


def available() -> list[str]:
    names = []
    for name, mod in _MODULES.items():
        try:
            importlib.import_module(mod)
        except ImportError:
            continue
        names.append(name)
    return names


def load(name: str):
    try:
        return importlib.import_module(_MODULES[name])
    except KeyError:
        raise ValueError(f"unknown backend {name!r}") from None


def set_backend(name: str) -> None:
    global kernels, BACKEND
    kernels = load(name)
    BACKEND = name


if os.environ.get("DIKROMA_PURE_PYTHON"):
    set_backend("python")
else:
    try:
        set_backend("cython")
    except ImportError:
        set_backend("python")
