"""Pick the kernel implementation at import time.

The compiled extension is preferred.  Set ``SSC_PURE_PYTHON=1`` to force the
pure-Python fallback.
"""

import importlib
import os

from . import _kernel_py


def load_kernel(name):
    """Return the kernel module for ``"cython"`` or ``"python"``."""
    if name == "python":
        return _kernel_py
    if name == "cython":
        return importlib.import_module("sscverify._kernel_c")
    raise ValueError(f"unknown backend {name!r}")


def available_backends():
    names = ["python"]
    try:
        load_kernel("cython")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


if os.environ.get("SSC_PURE_PYTHON", "") not in ("", "0"):
    kernel = _kernel_py
    BACKEND = "python"
else:
    try:
        kernel = load_kernel("cython")
        BACKEND = "cython"
    except ImportError:
        kernel = _kernel_py
        BACKEND = "python"
