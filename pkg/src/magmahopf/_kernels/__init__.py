"""Tree kernels with a compiled core and a pure-Python fallback.

The compiled module is used when it imports; set ``MAGMAHOPF_PURE=1`` to
force the fallback.
"""

import os

from . import _pure

if os.environ.get("MAGMAHOPF_PURE"):
    _impl = _pure
    BACKEND = "python"
else:
    try:
        from . import _core as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pure
        BACKEND = "python"

split = _impl.split
contract = _impl.contract
coproduct = _impl.coproduct

__all__ = ["BACKEND", "split", "contract", "coproduct"]
