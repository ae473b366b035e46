"""Search-kernel selection: compiled extension when built, pure Python otherwise.

Both backends implement the identical search tree (see _bb_py), so results
and node counts do not depend on which one is active.  Set EKRLAB_PURE=1
to force the Python kernel (used by the backend-equivalence tests and the
benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("EKRLAB_PURE") == "1":
    from . import _bb_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _bb as _impl  # type: ignore[attr-defined]

        BACKEND = "native"
    except ImportError:
        from . import _bb_py as _impl

        BACKEND = "python"

max_clique = _impl.max_clique
find_clique = _impl.find_clique
DEFAULT_NODE_BUDGET = 50_000_000

# Part of every cache key; bump when the search or report format changes.
SOLVER_VERSION = "bb1"
