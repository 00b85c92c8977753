"""Kernel backend selection.

The compiled kernels are used when the extension imports; otherwise the
pure-Python twins take over.  Both produce identical results.  Set
``CURVECOLOR_BACKEND=python`` to force the fallback.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

kernels = _ckernels if _ckernels is not None else _pykernels
if os.environ.get("CURVECOLOR_BACKEND"):
    kernels = _BACKENDS.get(os.environ["CURVECOLOR_BACKEND"], kernels)


def available() -> list[str]:
    return sorted(_BACKENDS)


def current() -> str:
    return "cython" if kernels is _ckernels and _ckernels is not None else "python"


def set_backend(name: str) -> None:
    global kernels
    try:
        kernels = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {available()}") from None
