"""Kernel backend selection: compiled extension if available, pure Python otherwise.

Set BRAUERKIT_PURE_PYTHON=1 to force the fallback.
"""

import os

from . import _compose_py

if os.environ.get("BRAUERKIT_PURE_PYTHON"):
    _impl = _compose_py
    BACKEND = "python"
else:
    try:
        from . import _compose_c as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _compose_py
        BACKEND = "python"

compose_partner = _impl.compose_partner
compose_table = _impl.compose_table
