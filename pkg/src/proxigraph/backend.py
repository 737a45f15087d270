"""Kernel backend selection: compiled extension when available, else the
pure-Python twin.

The initial choice honours PROXIGRAPH_BACKEND=python|compiled; set_backend()
re-points the default at runtime (the CLI --backend flag uses it).  Code
that wants a specific kernel passes the module from get_backend(name).
"""

from __future__ import annotations

import os

from . import _purepy


def _load(name):
    if name == "python":
        return _purepy
    if name == "compiled":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown backend {name!r}")


_requested = os.environ.get("PROXIGRAPH_BACKEND", "auto")
if _requested == "auto":
    try:
        _impl = _load("compiled")
    except ImportError:
        _impl = _purepy
else:
    _impl = _load(_requested)

BACKEND = _impl.BACKEND
triangulate = _impl.triangulate
LinkCutTree = _impl.LinkCutTree


def set_backend(name):
    """Re-point the default backend ('auto' restores the import-time pick)."""
    global _impl
    if name != "auto":
        _impl = _load(name)
    return _impl.BACKEND


def get_backend(name="auto"):
    """The kernel module for a backend name ('auto' = current default)."""
    if name == "auto":
        return _impl
    return _load(name)


def current_backend_name():
    return _impl.BACKEND


def available_backends():
    names = ["python"]
    try:
        _load("compiled")
        names.append("compiled")
    except ImportError:
        pass
    return names
