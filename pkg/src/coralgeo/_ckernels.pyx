# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled batch surface kernels; the hot twin of `_pykernels`.

Same signature and semantics as `_pykernels.surface_grid`; per-point scalar
loop instead of whole-array temporaries.
"""

from libc.math cimport cos, sin, sqrt, NAN

import numpy as np

cdef double SINGULAR_REL_TOL = 1e-12  # keep in sync with util.SINGULAR_REL_TOL


def surface_grid(int kind, int n, u_in, v_in):
    """Positions and curvature scalars at paired samples; see `_pykernels`."""
    u_arr = np.ascontiguousarray(u_in, dtype=np.float64)
    v_arr = np.ascontiguousarray(v_in, dtype=np.float64)
    cdef double[::1] u = u_arr
    cdef double[::1] v = v_arr
    cdef Py_ssize_t m = u.shape[0]
    if v.shape[0] != m:
        raise ValueError("u and v must have the same length")
    if kind != 0 and kind != 1:
        raise ValueError(f"unknown kind code {kind}")

    pos_arr = np.empty((m, 3), dtype=np.float64)
    kf_arr = np.empty(m, dtype=np.float64)
    kp_arr = np.empty(m, dtype=np.float64)
    aux_arr = np.empty(m, dtype=np.float64)
    cdef double[:, ::1] pos = pos_arr
    cdef double[::1] kf = kf_arr
    cdef double[::1] kp = kp_arr
    cdef double[::1] aux = aux_arr

    cdef Py_ssize_t i
    cdef double dn = <double> n
    cdef double uu, vv, cn, sn, cv, sv, a2, a
    cdef double rux, ruy, ruz, rvx, rvy, rvz
    cdef double ruux, ruuy, ruuz, ruvx, ruvy, ruvz, rvvx, rvvy, rvvz
    cdef double E, F, G, det1, eg, cx, cy, cz, inv_norm, L, M, N

    for i in range(m):
        uu = u[i]
        vv = v[i]
        cn = cos(dn * vv)
        sn = sin(dn * vv)
        if kind == 0:
            cv = cos(vv)
            sv = sin(vv)
            pos[i, 0] = uu * cv
            pos[i, 1] = uu * sv
            pos[i, 2] = -uu * uu * cn
            rux = cv
            ruy = sv
            ruz = -2.0 * uu * cn
            rvx = -uu * sv
            rvy = uu * cv
            rvz = dn * uu * uu * sn
            ruux = 0.0
            ruuy = 0.0
            ruuz = -2.0 * cn
            ruvx = -sv
            ruvy = cv
            ruvz = 2.0 * dn * uu * sn
            rvvx = -uu * cv
            rvvy = -uu * sv
            rvvz = dn * dn * uu * uu * cn
            a2 = dn * dn * uu * uu * sn * sn + 4.0 * uu * uu * cn * cn + 1.0
            a = sqrt(a2)
            aux[i] = a
            kp[i] = -(2.0 * (dn * dn - 2.0) * cn * cn + dn * dn * sn * sn) / (a * a2)
        else:
            pos[i, 0] = vv
            pos[i, 1] = uu
            pos[i, 2] = -uu * uu * cn
            rux = 0.0
            ruy = 1.0
            ruz = -2.0 * uu * cn
            rvx = 1.0
            rvy = 0.0
            rvz = dn * uu * uu * sn
            ruux = 0.0
            ruuy = 0.0
            ruuz = -2.0 * cn
            ruvx = 0.0
            ruvy = 0.0
            ruvz = 2.0 * dn * uu * sn
            rvvx = 0.0
            rvvy = 0.0
            rvvz = dn * dn * uu * uu * cn
            aux[i] = NAN
            kp[i] = NAN

        E = rux * rux + ruy * ruy + ruz * ruz
        F = rux * rvx + ruy * rvy + ruz * rvz
        G = rvx * rvx + rvy * rvy + rvz * rvz
        cx = ruy * rvz - ruz * rvy
        cy = ruz * rvx - rux * rvz
        cz = rux * rvy - ruy * rvx
        det1 = E * G - F * F
        eg = E * G
        if eg < 1.0:
            eg = 1.0
        if det1 <= SINGULAR_REL_TOL * eg:
            kf[i] = NAN
        else:
            inv_norm = 1.0 / sqrt(cx * cx + cy * cy + cz * cz)
            L = (ruux * cx + ruuy * cy + ruuz * cz) * inv_norm
            M = (ruvx * cx + ruvy * cy + ruvz * cz) * inv_norm
            N = (rvvx * cx + rvvy * cy + rvvz * cz) * inv_norm
            kf[i] = (L * N - M * M) / det1

    return pos_arr, kf_arr, kp_arr, aux_arr
