"""Select the kernel implementation at import time.

The compiled extension is used when it is importable; set
``CYCLOTOMY_PURE_PYTHON=1`` to force the pure-Python kernels.
"""

import os

from . import _purepy

if os.environ.get("CYCLOTOMY_PURE_PYTHON", "") not in ("", "0"):
    kernels = _purepy
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _purepy

BACKEND = kernels.NAME
