"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``HIBICX_PURE`` is set to a non-empty value, the pure-Python fallback.
"""
import os

from . import _pykernels

if os.environ.get("HIBICX_PURE"):
    backend = _pykernels
else:
    try:
        from . import _ckernels as backend
    except ImportError:  # extension not built
        backend = _pykernels

BACKEND = backend.NAME
is_minimal = backend.is_minimal
enumerate_module = backend.enumerate_module
least_split = backend.least_split


def available_backends():
    out = [_pykernels]
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out.append(_ckernels)
    return out
