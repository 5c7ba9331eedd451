"""Vectorized numpy implementation of the batch surface kernels.

This is the always-available fallback; `_ckernels` is the compiled twin with
identical signatures and semantics.  Keep the arithmetic structure of the two
in sync so their outputs agree to rounding error.
"""

from __future__ import annotations

import numpy as np

from .util import SINGULAR_REL_TOL

KIND_POLAR = 0
KIND_LETTUCE = 1


def surface_grid(kind: int, n: int, u: np.ndarray, v: np.ndarray):
    """Positions and curvature scalars at paired samples (u[i], v[i]).

    Returns ``(pos, k_forms, k_paper, aux)`` where pos has shape (m, 3) and
    the rest shape (m,).  k_forms is the forms-based Gaussian curvature
    det(II)/det(I), NaN at metric-singular samples.  For the polar family,
    aux is A = sqrt(n^2 u^2 sin^2 nv + 4 u^2 cos^2 nv + 1) and k_paper the
    3/2-exponent closed-form curvature -(2(n^2-2)cos^2 nv + n^2 sin^2 nv)/A^3;
    both are NaN for the lettuce strip.
    """
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    cn = np.cos(n * v)
    sn = np.sin(n * v)
    zero = np.zeros_like(u)
    one = np.ones_like(u)
    if kind == KIND_POLAR:
        cv = np.cos(v)
        sv = np.sin(v)
        px, py, pz = u * cv, u * sv, -u * u * cn
        rux, ruy, ruz = cv, sv, -2.0 * u * cn
        rvx, rvy, rvz = -u * sv, u * cv, n * u * u * sn
        ruux, ruuy, ruuz = zero, zero, -2.0 * cn
        ruvx, ruvy, ruvz = -sv, cv, 2.0 * n * u * sn
        rvvx, rvvy, rvvz = -u * cv, -u * sv, n * n * u * u * cn
        a2 = n * n * u * u * sn * sn + 4.0 * u * u * cn * cn + 1.0
        aux = np.sqrt(a2)
        k_paper = -(2.0 * (n * n - 2.0) * cn * cn + n * n * sn * sn) / (aux * a2)
    elif kind == KIND_LETTUCE:
        px, py, pz = v, u, -u * u * cn
        rux, ruy, ruz = zero, one, -2.0 * u * cn
        rvx, rvy, rvz = one, zero, n * u * u * sn
        ruux, ruuy, ruuz = zero, zero, -2.0 * cn
        ruvx, ruvy, ruvz = zero, zero, 2.0 * n * u * sn
        rvvx, rvvy, rvvz = zero, zero, n * n * u * u * cn
        aux = np.full_like(u, np.nan)
        k_paper = np.full_like(u, np.nan)
    else:
        raise ValueError(f"unknown kind code {kind}")

    E = rux * rux + ruy * ruy + ruz * ruz
    F = rux * rvx + ruy * rvy + ruz * rvz
    G = rvx * rvx + rvy * rvy + rvz * rvz
    cx = ruy * rvz - ruz * rvy
    cy = ruz * rvx - rux * rvz
    cz = rux * rvy - ruy * rvx
    det1 = E * G - F * F
    singular = det1 <= SINGULAR_REL_TOL * np.maximum(1.0, E * G)
    with np.errstate(divide="ignore", invalid="ignore"):
        inv_norm = 1.0 / np.sqrt(cx * cx + cy * cy + cz * cz)
        L = (ruux * cx + ruuy * cy + ruuz * cz) * inv_norm
        M = (ruvx * cx + ruvy * cy + ruvz * cz) * inv_norm
        N = (rvvx * cx + rvvy * cy + rvvz * cz) * inv_norm
        k_forms = (L * N - M * M) / det1
    k_forms = np.where(singular, np.nan, k_forms)
    pos = np.column_stack([px, py, pz])
    return pos, k_forms, k_paper, aux
