"""Kernel selection: compiled extension if built, pure-Python twin otherwise."""

from __future__ import annotations

try:
    from . import _kernel as _impl
except ImportError:  # extension not built; fall back to the twin
    from . import _pykernel as _impl

from . import _pykernel

BACKEND = _impl.BACKEND_NAME


def get_backend(name: str | None = None):
    """Return a kernel module by name ('compiled' | 'python' | None=auto)."""
    if name is None:
        return _impl
    if name == "python":
        return _pykernel
    if name == "compiled":
        if _impl.BACKEND_NAME != "compiled":
            raise RuntimeError("compiled kernel requested but not built")
        return _impl
    raise ValueError(f"unknown backend {name!r}")
