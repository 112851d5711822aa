"""Pick the compiled kernels when they are built, the pure-Python ones otherwise.

Set ``INTERVAL_ORDERING_PURE=1`` to force the fallback.  The compiled
bitmask loops hold masks in 64-bit words, so instances with more than 64
elementary segments always take the Python path for those two loops.
"""

import os

from . import _core_py

python = _core_py
compiled = None

if os.environ.get("INTERVAL_ORDERING_PURE", "") in ("", "0"):
    try:
        from . import _core as compiled  # type: ignore[attr-defined,no-redef]
    except ImportError:  # extension not built
        compiled = None

active = compiled if compiled is not None else python
IMPLEMENTATION = active.IMPLEMENTATION

MAX_COMPILED_SEGMENTS = 64


def for_segments(segments: int):
    """Kernel module able to hold masks over ``segments`` bits."""
    if compiled is not None and segments <= MAX_COMPILED_SEGMENTS:
        return compiled
    return python
