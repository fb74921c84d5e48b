"""Selects the support-scan backend at import.

Set ``RIESZ_KERNEL=python`` to force the numpy fallback.
"""
import os

from . import _support_py

try:
    from . import _support_ext
except ImportError:  # extension not built
    _support_ext = None

if _support_ext is not None and os.environ.get("RIESZ_KERNEL", "").lower() != "python":
    scan_supports = _support_ext.scan_supports
    BACKEND = "cython"
else:
    scan_supports = _support_py.scan_supports
    BACKEND = "python"

BACKENDS = {"python": _support_py.scan_supports}
if _support_ext is not None:
    BACKENDS["cython"] = _support_ext.scan_supports
