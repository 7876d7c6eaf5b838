"""Chooses the kernel implementation at import time.

``GENLCE_BACKEND=python`` forces the pure-Python kernels,
``GENLCE_BACKEND=compiled`` makes a missing extension an ImportError, and the
default (``auto``) prefers the extension when it was built.
"""

import os

_choice = os.environ.get("GENLCE_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "python", "compiled"):
    raise ImportError(f"GENLCE_BACKEND must be auto, python or compiled, not {_choice!r}")

if _choice == "python":
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        if _choice == "compiled":
            raise
        from . import _pykernels as kernels

BACKEND = kernels.BACKEND_NAME


def available_backends() -> dict:
    """Every importable kernel module keyed by backend name."""
    from . import _pykernels

    found = {_pykernels.BACKEND_NAME: _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found[_ckernels.BACKEND_NAME] = _ckernels
    return found
