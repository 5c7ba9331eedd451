import math

import numpy as np
import pytest

from coralgeo import (ParameterError, coral, coral_apex_curvature, lettuce,
                      tessellate, write_obj, write_ply)

TWO_PI = 2.0 * math.pi


class TestTessellate:
    def test_wrapped_counts(self):
        mesh = tessellate(coral(4), nu=64, nv=256, wrap_v=True)
        assert mesh.vertices.shape == (65 * 256, 3)
        assert mesh.triangles.shape == (2 * 64 * 256, 3)
        assert mesh.curvature.shape == (65 * 256,)
        assert mesh.colors.shape == (65 * 256, 3)

    def test_unwrapped_counts(self):
        mesh = tessellate(coral(4), nu=8, nv=12, wrap_v=False)
        assert mesh.vertices.shape == (9 * 13, 3)
        assert mesh.triangles.shape == (2 * 8 * 12, 3)

    def test_indices_in_range(self):
        mesh = tessellate(coral(3), nu=5, nv=7)
        assert mesh.triangles.min() >= 0
        assert mesh.triangles.max() < len(mesh.vertices)

    def test_seam_welded(self):
        nu, nv = 4, 8
        mesh = tessellate(coral(4), nu=nu, nv=nv, wrap_v=True)
        # the last column's cells must reference column 0, not a duplicate ring
        cols = mesh.triangles % nv
        rows_with_col0 = set(map(tuple, mesh.triangles[(cols == 0).any(axis=1)].tolist()))
        last_col_cells = [t for t in rows_with_col0
                          if any(idx % nv == nv - 1 for idx in t)]
        assert last_col_cells, "no triangle bridges the seam"

    def test_radial_structure(self):
        nu, nv = 16, 32
        mesh = tessellate(coral(4), nu=nu, nv=nv)
        u = np.linspace(0.0, 2.0, nu + 1)
        pts = mesh.vertices.reshape(nu + 1, nv, 3)
        r2 = pts[..., 0] ** 2 + pts[..., 1] ** 2
        np.testing.assert_allclose(r2, (u ** 2)[:, None] * np.ones((1, nv)),
                                   rtol=0, atol=1e-12)

    def test_apex_ring_shares_axis_limit(self):
        nu, nv = 6, 10
        mesh = tessellate(coral(4), nu=nu, nv=nv)
        assert mesh.singular_apex
        np.testing.assert_array_equal(mesh.curvature[:nv], coral_apex_curvature(4))
        assert np.isfinite(mesh.curvature).all()

    def test_no_apex_when_u_min_positive(self):
        mesh = tessellate(coral(4), u_range=(0.5, 2.0), nu=6, nv=10)
        assert not mesh.singular_apex

    def test_lettuce_never_singular(self):
        mesh = tessellate(lettuce(4), nu=6, nv=10)
        assert not mesh.singular_apex
        assert np.isfinite(mesh.curvature).all()

    def test_parameter_validation(self):
        with pytest.raises(ParameterError):
            tessellate(coral(4), nu=1, nv=8)
        with pytest.raises(ParameterError):
            tessellate(coral(4), nu=8, nv=1)
        with pytest.raises(ParameterError):
            tessellate(coral(4), u_range=(2.0, 0.0))
        with pytest.raises(ParameterError):
            tessellate(coral(4), v_range=(1.0, 1.0))

    def test_colors_in_unit_cube_and_monotone(self):
        mesh = tessellate(coral(4), nu=16, nv=32)
        assert (mesh.colors >= 0.0).all() and (mesh.colors <= 1.0).all()
        order = np.argsort(mesh.curvature)
        sorted_colors = mesh.colors[order]
        diffs = np.diff(sorted_colors, axis=0)
        assert (diffs >= -1e-12).all()  # each channel brightens toward K = 0
        # extremes: most negative K is the darkest blue, K closest to 0 whitest
        assert sorted_colors[0, 2] >= sorted_colors[0, 0]


class TestWriters:
    @pytest.fixture()
    def small_mesh(self):
        return tessellate(coral(4), nu=2, nv=2, wrap_v=True)

    def test_obj_line_counts(self, small_mesh, tmp_path):
        path = tmp_path / "m.obj"
        write_obj(small_mesh, path)
        lines = path.read_text().splitlines()
        assert sum(1 for ln in lines if ln.startswith("v ")) == 6
        assert sum(1 for ln in lines if ln.startswith("f ")) == 8

    def test_obj_vertex_color_format(self, small_mesh, tmp_path):
        path = tmp_path / "m.obj"
        write_obj(small_mesh, path)
        first = next(ln for ln in path.read_text().splitlines() if ln.startswith("v "))
        assert len(first.split()) == 7  # v x y z r g b

    def test_obj_indices_one_based(self, small_mesh, tmp_path):
        path = tmp_path / "m.obj"
        write_obj(small_mesh, path)
        for ln in path.read_text().splitlines():
            if ln.startswith("f "):
                idx = [int(tok) for tok in ln.split()[1:]]
                assert min(idx) >= 1 and max(idx) <= 6

    def test_ply_header_counts_roundtrip(self, small_mesh, tmp_path):
        path = tmp_path / "m.ply"
        write_ply(small_mesh, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "ply"
        nvert = next(int(ln.split()[-1]) for ln in lines if ln.startswith("element vertex"))
        nface = next(int(ln.split()[-1]) for ln in lines if ln.startswith("element face"))
        assert nvert == len(small_mesh.vertices)
        assert nface == len(small_mesh.triangles)
        body = lines[lines.index("end_header") + 1:]
        assert len(body) == nvert + nface

    def test_ply_flags_apex(self, small_mesh, tmp_path):
        path = tmp_path / "m.ply"
        write_ply(small_mesh, path)
        assert "comment singular apex ring" in path.read_text()

    def test_exports_byte_deterministic(self, tmp_path):
        mesh = tessellate(coral(4), nu=8, nv=16)
        pairs = []
        for ext, writer in (("obj", write_obj), ("ply", write_ply)):
            a, b = tmp_path / f"a.{ext}", tmp_path / f"b.{ext}"
            writer(mesh, a)
            writer(mesh, b)
            pairs.append((a.read_bytes(), b.read_bytes()))
        for left, right in pairs:
            assert left == right

    def test_write_failure_raises_oserror(self, small_mesh, tmp_path):
        with pytest.raises(OSError):
            write_obj(small_mesh, tmp_path / "missing_dir" / "m.obj")
