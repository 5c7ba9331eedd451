"""Surface tessellation with per-vertex curvature colors, OBJ/PLY writers.

Grid layout: nu x nv cells.  With ``wrap_v`` the angular seam is welded, so
the vertex grid is (nu+1) rows of nv columns (no duplicate ring at v = v_max)
and there are always 2*nu*nv triangles.  When the u range starts on the polar
axis (u = 0), the first vertex row is a ring of coincident points; its
triangles degenerate to the allowed apex fan, and every ring vertex carries
the shared axis curvature limit (-2(n^2-2), the v = 0 limit) instead of NaN.

Color map (one-sided, since curvature here is never positive): linear from
DEEP_BLUE at the most negative curvature in the mesh to WHITE at zero.

Both writers emit deterministic bytes for a given mesh: fixed float
formatting, no timestamps.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .diffgeo import coral_apex_curvature
from .errors import ParameterError
from .surfaces import CANONICAL_U, CANONICAL_V, SurfaceFamily

DEEP_BLUE = (0.05, 0.10, 0.60)
WHITE = (1.0, 1.0, 1.0)


@dataclass(frozen=True)
class Mesh:
    vertices: np.ndarray    # (nverts, 3) float64
    curvature: np.ndarray   # (nverts,) forms-based Gaussian curvature
    colors: np.ndarray      # (nverts, 3) floats in [0, 1]
    triangles: np.ndarray   # (ntris, 3) int32 vertex indices
    wrap_v: bool
    label: str
    singular_apex: bool     # True when the u_min ring sits on the polar axis


def curvature_colors(k: np.ndarray) -> np.ndarray:
    """Linear map: DEEP_BLUE at min(k), WHITE at 0 (values above 0 clamp white)."""
    k = np.asarray(k, dtype=np.float64)
    k_min = float(k.min())
    if k_min >= 0.0:
        t = np.ones_like(k)
    else:
        t = np.clip(1.0 - k / k_min, 0.0, 1.0)
    blue = np.array(DEEP_BLUE)
    return blue + np.outer(t, np.array(WHITE) - blue)


def tessellate(s: SurfaceFamily, u_range=CANONICAL_U, v_range=CANONICAL_V,
               nu: int = 64, nv: int = 256, wrap_v: bool = True) -> Mesh:
    """Sample the surface on a regular grid and triangulate it."""
    if nu < 2 or nv < 2:
        raise ParameterError(f"need nu >= 2 and nv >= 2, got nu={nu} nv={nv}")
    u0, u1 = float(u_range[0]), float(u_range[1])
    v0, v1 = float(v_range[0]), float(v_range[1])
    if not (np.isfinite([u0, u1, v0, v1]).all() and u0 < u1 and v0 < v1):
        raise ParameterError("u_range and v_range must be finite, increasing intervals")

    u = np.linspace(u0, u1, nu + 1)
    if wrap_v:
        v = np.linspace(v0, v1, nv, endpoint=False)
        cols = nv
    else:
        v = np.linspace(v0, v1, nv + 1)
        cols = nv + 1
    ge = _kernels.eval_grid(s, u, v)

    k = ge.k_forms.copy()
    singular = np.isnan(k)
    apex = bool(singular.any())
    if apex:
        k[singular] = coral_apex_curvature(s.frequency)

    i = np.repeat(np.arange(nu), nv)
    j = np.tile(np.arange(nv), nu)
    jn = (j + 1) % nv if wrap_v else j + 1
    a = i * cols + j
    b = (i + 1) * cols + j
    c = i * cols + jn
    d = (i + 1) * cols + jn
    triangles = np.empty((2 * nu * nv, 3), dtype=np.int32)
    triangles[0::2] = np.column_stack([a, b, d])
    triangles[1::2] = np.column_stack([a, d, c])

    return Mesh(
        vertices=ge.positions,
        curvature=k,
        colors=curvature_colors(k),
        triangles=triangles,
        wrap_v=wrap_v,
        label=s.describe(),
        singular_apex=apex,
    )


def _fmt(x: float) -> str:
    return format(float(x), ".9g")


def write_obj(mesh: Mesh, path) -> None:
    """OBJ with the 6-float vertex-color extension: 'v x y z r g b'."""
    lines = [f"# {mesh.label}", "# vertex format: v x y z r g b"]
    for (x, y, z), (r, g, b) in zip(mesh.vertices, mesh.colors):
        lines.append(f"v {_fmt(x)} {_fmt(y)} {_fmt(z)} {_fmt(r)} {_fmt(g)} {_fmt(b)}")
    for t in mesh.triangles:
        lines.append(f"f {t[0] + 1} {t[1] + 1} {t[2] + 1}")
    data = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)


def write_ply(mesh: Mesh, path) -> None:
    """ASCII PLY with uchar vertex colors and a float 'quality' carrying curvature."""
    header = [
        "ply",
        "format ascii 1.0",
        f"comment {mesh.label}",
    ]
    if mesh.singular_apex:
        header.append("comment singular apex ring at u_min: shared axis curvature limit")
    header += [
        f"element vertex {len(mesh.vertices)}",
        "property float x",
        "property float y",
        "property float z",
        "property uchar red",
        "property uchar green",
        "property uchar blue",
        "property float quality",
        f"element face {len(mesh.triangles)}",
        "property list uchar int vertex_indices",
        "end_header",
    ]
    lines = header
    for (x, y, z), (r, g, b), k in zip(mesh.vertices, mesh.colors, mesh.curvature):
        lines.append(f"{_fmt(x)} {_fmt(y)} {_fmt(z)} "
                     f"{int(r * 255.0 + 0.5)} {int(g * 255.0 + 0.5)} {int(b * 255.0 + 0.5)} "
                     f"{_fmt(k)}")
    for t in mesh.triangles:
        lines.append(f"3 {t[0]} {t[1]} {t[2]}")
    data = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)
