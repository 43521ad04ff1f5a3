"""Kernel backend selection.

The compiled extension is preferred when importable; the numpy fallback is
always available. Set NORMCONTROL_BACKEND=python (or =cython) to force a
choice; forcing cython raises if the extension is missing.
"""

import importlib
import os

_FORCED = os.environ.get("NORMCONTROL_BACKEND", "").strip().lower()

if _FORCED == "python":
    from . import _kernels_py as kernels

    BACKEND = "python"
elif _FORCED == "cython":
    from . import _kernels_cy as kernels  # noqa: F401

    BACKEND = "cython"
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"


def get_backend() -> str:
    """Name of the kernel backend active in this process."""
    return BACKEND


def load_backend(name: str):
    """Import a specific kernel module ("python" or "cython") regardless of
    which one is active; used by the benchmark and parity tests."""
    if name == "python":
        return importlib.import_module("normcontrol._kernels_py")
    if name == "cython":
        return importlib.import_module("normcontrol._kernels_cy")
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> tuple[str, ...]:
    names = ["python"]
    try:
        importlib.import_module("normcontrol._kernels_cy")
        names.append("cython")
    except ImportError:
        pass
    return tuple(names)
