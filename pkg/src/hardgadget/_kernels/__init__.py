"""Kernel backend selection: compiled Cython extension when built, else pure.

Set HARDGADGET_PURE=1 to force the pure-Python twin (used by the benchmark
and by the backend-agreement tests).
"""

import os

if os.environ.get("HARDGADGET_PURE"):
    from . import pure as backend

    IMPLEMENTATION = "pure"
else:
    try:
        from . import speed as backend  # type: ignore[no-redef]

        IMPLEMENTATION = "compiled"
    except ImportError:
        from . import pure as backend

        IMPLEMENTATION = "pure"

FEASIBLE = backend.FEASIBLE
INFEASIBLE = backend.INFEASIBLE
TIMEOUT = backend.TIMEOUT
linf_feasible = backend.linf_feasible
partition_opt = backend.partition_opt
