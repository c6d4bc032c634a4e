"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``EXTFUZZY_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and os.environ.get("EXTFUZZY_PURE_PYTHON", "") in ("", "0"):
    DEFAULT = "cython"
else:
    DEFAULT = "python"


def get_kernels(name=None):
    name = DEFAULT if name is None else name
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
