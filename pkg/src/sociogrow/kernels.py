"""Kernel backend selection.

The Cython extension is used when it imports cleanly; otherwise, or when
``SOCIOGROW_PURE=1`` is set, the NumPy/Python fallback is used. Both expose
``knowledge_step``, ``path_length_stats`` and ``triangle_counts`` with the
same signatures.
"""

import logging
import os

from . import _pure

log = logging.getLogger(__name__)

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

if _compiled is not None and os.environ.get("SOCIOGROW_PURE", "") not in ("1", "true", "yes"):
    backend = _compiled
    BACKEND = "cython"
else:
    if _compiled is None:
        log.debug("compiled kernels unavailable, using pure fallback")
    backend = _pure
    BACKEND = "python"

knowledge_step = backend.knowledge_step
path_length_stats = backend.path_length_stats
triangle_counts = backend.triangle_counts


def available_backends() -> dict:
    out = {"python": _pure}
    if _compiled is not None:
        out["cython"] = _compiled
    return out
