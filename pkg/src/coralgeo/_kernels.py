"""Batch-kernel backend selection and the array-level evaluation API.

At import time the compiled extension (`_ckernels`) is preferred when built;
otherwise the numpy fallback (`_pykernels`) serves.  Set CORALGEO_BACKEND to
``compiled`` or ``numpy`` to force one explicitly (the benchmark and the test
suite use this to exercise both paths).
"""

from __future__ import annotations

import os
from typing import NamedTuple

import numpy as np

from . import _pykernels
from .errors import ParameterError
from .surfaces import CORAL, LETTUCE, SurfaceFamily

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_requested = os.environ.get("CORALGEO_BACKEND", "auto").strip().lower()
if _requested in ("", "auto"):
    _impl = _ckernels if _ckernels is not None else _pykernels
elif _requested in ("compiled", "c", "cython"):
    if _ckernels is None:
        raise ImportError("CORALGEO_BACKEND=compiled but the extension is not built")
    _impl = _ckernels
elif _requested in ("numpy", "python", "fallback"):
    _impl = _pykernels
else:
    raise ImportError(f"unrecognized CORALGEO_BACKEND value {_requested!r}")

BACKEND = "compiled" if _impl is not _pykernels else "numpy"


def backend_name() -> str:
    """Name of the batch backend selected at import ('compiled' or 'numpy')."""
    return BACKEND


def available_backends() -> dict:
    """Importable kernel modules keyed by backend name."""
    out = {"numpy": _pykernels}
    if _ckernels is not None:
        out["compiled"] = _ckernels
    return out


class GridEval(NamedTuple):
    """Flat per-sample arrays from one batch evaluation."""

    positions: np.ndarray  # (m, 3)
    k_forms: np.ndarray    # (m,), NaN at metric-singular samples
    k_paper: np.ndarray    # (m,), NaN unless the family is a coral
    aux: np.ndarray        # (m,), the scalar A; NaN for lettuce


def eval_points(s: SurfaceFamily, u, v) -> GridEval:
    """Evaluate paired samples (u[i], v[i]) with the active backend."""
    u = np.ascontiguousarray(u, dtype=np.float64).ravel()
    v = np.ascontiguousarray(v, dtype=np.float64).ravel()
    if u.shape != v.shape:
        raise ParameterError("u and v sample arrays must have the same length")
    kind = _pykernels.KIND_LETTUCE if s.kind == LETTUCE else _pykernels.KIND_POLAR
    pos, k_forms, k_paper, aux = _impl.surface_grid(kind, s.frequency, u, v)
    if s.kind != CORAL:
        # the closed-form variant is defined for corals only
        k_paper = np.full_like(k_forms, np.nan)
    return GridEval(pos, k_forms, k_paper, aux)


def eval_grid(s: SurfaceFamily, u_values, v_values) -> GridEval:
    """Evaluate the Cartesian product grid, row-major with u outermost."""
    u_values = np.asarray(u_values, dtype=np.float64)
    v_values = np.asarray(v_values, dtype=np.float64)
    if u_values.size == 0 or v_values.size == 0:
        raise ParameterError("grid axes must be non-empty")
    uu, vv = np.meshgrid(u_values, v_values, indexing="ij")
    return eval_points(s, uu.ravel(), vv.ravel())
