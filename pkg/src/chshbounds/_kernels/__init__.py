"""Kernel backend selection.

Two interchangeable backends implement the hot numerical loops: a compiled
Cython extension (``native``) and a pure-Python reference (``python``).  The
native backend is preferred when the extension is importable; set the
environment variable ``CHSHBOUNDS_BACKEND`` to ``python`` or ``native``
before import to force a choice.  Both produce bit-identical results, so the
selection affects speed only.
"""

from __future__ import annotations

import importlib
import os

_KERNEL_NAMES = (
    "gp8",
    "spin_matrix",
    "kron2",
    "matmul",
    "expectation",
    "eigvals_hermitian",
    "rng_u64",
    "rng_u01",
    "lhv_mc_sums",
)


def load_backend(name: str):
    """Import and return the kernel module for ``name`` ('python' or 'native')."""
    if name == "python":
        from . import reference

        return reference
    if name == "native":
        return importlib.import_module("chshbounds._kernels._native")
    raise ValueError(f"unknown kernel backend {name!r}; expected 'python' or 'native'")


def available_backends() -> tuple[str, ...]:
    """Names of the backends importable in this installation."""
    names = ["python"]
    try:
        load_backend("native")
    except ImportError:
        pass
    else:
        names.append("native")
    return tuple(names)


_requested = os.environ.get("CHSHBOUNDS_BACKEND")
if _requested:
    _backend = load_backend(_requested)
else:
    try:
        _backend = load_backend("native")
    except ImportError:
        _backend = load_backend("python")

BACKEND_NAME: str = _backend.BACKEND_NAME

gp8 = _backend.gp8
spin_matrix = _backend.spin_matrix
kron2 = _backend.kron2
matmul = _backend.matmul
expectation = _backend.expectation
eigvals_hermitian = _backend.eigvals_hermitian
rng_u64 = _backend.rng_u64
rng_u01 = _backend.rng_u01
lhv_mc_sums = _backend.lhv_mc_sums
