import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coralgeo import (ParameterError, SingularPointError, aux_scalar, coral,
                      coral_apex_curvature, coral_curvature_paper,
                      curvature_report, curvature_table, deviation_report,
                      eval_jet, first_form, fundamental_forms,
                      gaussian_curvature_from_forms, lettuce, paraboloid,
                      second_form, table_to_csv, unit_normal, weingarten)

SQRT5 = math.sqrt(5.0)
TWO_PI = 2.0 * math.pi

# reference cells: (u, target) at v in {2pi, pi/2}, both sin(4v) = 0 columns
TABLE_N4 = [(0.5, -9.89), (1.0, -2.50), (1.5, -0.88), (2.0, -0.39)]

reg_u = st.floats(min_value=0.05, max_value=2.0, allow_nan=False)
any_v = st.floats(min_value=0.0, max_value=TWO_PI, allow_nan=False)
freqs = st.integers(min_value=2, max_value=8)


class TestFirstForm:
    def test_reference_point_n4(self):
        E, F, G = first_form(eval_jet(coral(4), (1.0, 0.0)))
        assert (E, F, G) == (5.0, 0.0, 1.0)

    @pytest.mark.parametrize("fam", [coral(3), paraboloid()])
    def test_axis_degeneracy(self, fam):
        E, F, G = first_form(eval_jet(fam, (0.0, 1.1)))
        assert F == 0.0 and G == 0.0
        assert E > 0.0

    def test_quarter_turn_n2(self):
        E, F, G = first_form(eval_jet(coral(2), (1.0, math.pi / 4.0)))
        np.testing.assert_allclose((E, F, G), (1.0, 0.0, 5.0), rtol=0, atol=1e-15)

    @given(u=reg_u, v=any_v, n=freqs)
    @settings(max_examples=80)
    def test_metric_identity(self, u, v, n):
        # EG - F^2 = u^2 A^2 on the polar family
        E, F, G = first_form(eval_jet(coral(n), (u, v)))
        a = aux_scalar(n, u, v)
        target = u * u * a * a
        assert abs((E * G - F * F) - target) <= 1e-9 * target

    @given(u=st.floats(min_value=0.0, max_value=2.0), v=any_v, n=freqs)
    @settings(max_examples=80)
    def test_metric_determinant_nonnegative(self, u, v, n):
        for fam in (coral(n), lettuce(n)):
            E, F, G = first_form(eval_jet(fam, (u, v)))
            assert E * G - F * F >= 0.0


class TestUnitNormal:
    def test_reference_point_n4(self):
        nrm = unit_normal(eval_jet(coral(4), (1.0, 0.0)))
        np.testing.assert_allclose(tuple(nrm), (2.0 / SQRT5, 0.0, 1.0 / SQRT5),
                                   rtol=0, atol=1e-15)

    def test_axis_is_singular(self):
        with pytest.raises(SingularPointError):
            unit_normal(eval_jet(coral(4), (0.0, 0.7)))

    @given(u=reg_u, v=any_v, n=freqs)
    @settings(max_examples=80)
    def test_unit_length(self, u, v, n):
        nrm = unit_normal(eval_jet(coral(n), (u, v)))
        assert abs(nrm.x ** 2 + nrm.y ** 2 + nrm.z ** 2 - 1.0) < 1e-12

    @given(u=reg_u, v=any_v, n=freqs)
    @settings(max_examples=80)
    def test_matches_closed_form(self, u, v, n):
        nrm = unit_normal(eval_jet(coral(n), (u, v)))
        a = aux_scalar(n, u, v)
        cn, sn = math.cos(n * v), math.sin(n * v)
        cv, sv = math.cos(v), math.sin(v)
        np.testing.assert_allclose(
            tuple(nrm),
            ((n * u * sv * sn + 2 * u * cv * cn) / a,
             (2 * u * sv * cn - n * u * cv * sn) / a,
             1.0 / a),
            rtol=0, atol=1e-12)

    def test_lettuce_regular_on_axis(self):
        # the strip has no parametrization degeneracy at u = 0
        nrm = unit_normal(eval_jet(lettuce(4), (0.0, 1.0)))
        assert abs(nrm.x ** 2 + nrm.y ** 2 + nrm.z ** 2 - 1.0) < 1e-12


class TestSecondForm:
    def test_reference_point_n4(self):
        j = eval_jet(coral(4), (1.0, 0.0))
        L, M, N = second_form(j, unit_normal(j))
        np.testing.assert_allclose((L, M, N), (-2.0 / SQRT5, 0.0, 14.0 / SQRT5),
                                   rtol=0, atol=1e-15)

    def test_diagonal_vanishes_where_cos_does(self):
        j = eval_jet(coral(2), (1.0, math.pi / 4.0))
        L, M, N = second_form(j, unit_normal(j))
        assert abs(L) < 1e-15 and abs(N) < 1e-14

    def test_off_diagonal_reference(self):
        # M = n u sin(nv) / A with A = sqrt(5) at this point
        j = eval_jet(coral(4), (0.5, math.pi / 8.0))
        L, M, N = second_form(j, unit_normal(j))
        assert abs(aux_scalar(4, 0.5, math.pi / 8.0) - SQRT5) < 1e-15
        np.testing.assert_allclose(M, 2.0 / SQRT5, rtol=0, atol=1e-15)

    @given(u=reg_u, v=any_v, n=freqs)
    @settings(max_examples=60)
    def test_closed_form_entries(self, u, v, n):
        j = eval_jet(coral(n), (u, v))
        L, M, N = second_form(j, unit_normal(j))
        a = aux_scalar(n, u, v)
        cn, sn = math.cos(n * v), math.sin(n * v)
        np.testing.assert_allclose(
            (L, M, N),
            (-2.0 * cn / a, n * u * sn / a, (n * n - 2.0) * u * u * cn / a),
            rtol=0, atol=1e-12)


class TestWeingarten:
    def test_reference_point_n4(self):
        j = eval_jet(coral(4), (1.0, 0.0))
        E, F, G = first_form(j)
        L, M, N = second_form(j, unit_normal(j))
        w = weingarten(E, F, G, L, M, N)
        np.testing.assert_allclose(
            (w.w11, w.w12, w.w21, w.w22),
            (-2.0 / (5.0 * SQRT5), 0.0, 0.0, 14.0 / SQRT5),
            rtol=0, atol=1e-14)
        np.testing.assert_allclose(w.det, -28.0 / 25.0, rtol=0, atol=1e-14)

    def test_identity_forms_give_identity_operator(self):
        w = weingarten(1.0, 0.0, 1.0, 1.0, 0.0, 1.0)
        assert (w.w11, w.w12, w.w21, w.w22) == (1.0, 0.0, 0.0, 1.0)

    def test_singular_metric_rejected(self):
        with pytest.raises(SingularPointError):
            weingarten(1.0, 0.0, 0.0, 1.0, 0.0, 1.0)

    @given(u=reg_u, v=any_v, n=freqs)
    @settings(max_examples=60)
    def test_det_matches_forms_ratio(self, u, v, n):
        j = eval_jet(coral(n), (u, v))
        E, F, G = first_form(j)
        L, M, N = second_form(j, unit_normal(j))
        k = gaussian_curvature_from_forms(E, F, G, L, M, N)
        assert abs(weingarten(E, F, G, L, M, N).det - k) <= 1e-9 * max(abs(k), 1e-30)


class TestGaussianCurvature:
    def test_n2_matches_monge_value(self):
        # graph of z = y^2 - x^2 has K = -4/(1+4u^2)^2; at u = 1 that is -0.16
        for v in (0.0, 1.0, 2.5, 5.0):
            j = eval_jet(coral(2), (1.0, v))
            E, F, G = first_form(j)
            L, M, N = second_form(j, unit_normal(j))
            np.testing.assert_allclose(gaussian_curvature_from_forms(E, F, G, L, M, N),
                                       -0.16, rtol=0, atol=1e-12)

    def test_reference_point_n4(self):
        j = eval_jet(coral(4), (1.0, 0.0))
        E, F, G = first_form(j)
        L, M, N = second_form(j, unit_normal(j))
        np.testing.assert_allclose(gaussian_curvature_from_forms(E, F, G, L, M, N),
                                   -1.12, rtol=0, atol=1e-14)

    def test_flat_forms(self):
        assert gaussian_curvature_from_forms(1.0, 0.0, 1.0, 0.0, 0.0, 0.0) == 0.0


class TestClosedFormCurvature:
    @pytest.mark.parametrize("u,target", TABLE_N4)
    @pytest.mark.parametrize("v", [TWO_PI, math.pi / 2.0])
    def test_reference_grid_n4(self, u, target, v):
        assert abs(coral_curvature_paper(4, (u, v)) - target) <= 0.01

    def test_n2_reduction(self):
        # -4/(4u^2+1)^{3/2}, constant around each circle
        for u in (0.0, 0.5, 1.3, 2.0):
            expected = -4.0 / (4.0 * u * u + 1.0) ** 1.5
            for v in (0.0, 1.0, 4.0):
                np.testing.assert_allclose(coral_curvature_paper(2, (u, v)), expected,
                                           rtol=1e-15, atol=0)

    def test_axis_value_n2(self):
        np.testing.assert_allclose(coral_curvature_paper(2, (0.0, 1.7)), -4.0,
                                   rtol=0, atol=1e-15)

    def test_frequency_validated(self):
        with pytest.raises(ParameterError):
            coral_curvature_paper(1, (1.0, 0.0))

    @given(u=reg_u, v=any_v, n=freqs)
    @settings(max_examples=100)
    def test_equals_aux_times_forms(self, u, v, n):
        rep = curvature_report(coral(n), (u, v))
        assert abs(rep.k_paper - rep.A * rep.k_forms) < 1e-9

    @given(u=st.floats(min_value=1e-3, max_value=2.0), v=any_v, n=freqs)
    @settings(max_examples=100)
    def test_both_variants_negative(self, u, v, n):
        rep = curvature_report(coral(n), (u, v))
        assert rep.k_forms < 0.0
        assert rep.k_paper < 0.0


class TestCurvatureReport:
    def test_reference_point_n4(self):
        rep = curvature_report(coral(4), (1.0, 0.0))
        np.testing.assert_allclose(rep.k_forms, -1.12, rtol=0, atol=1e-14)
        np.testing.assert_allclose(rep.k_paper, SQRT5 * -1.12, rtol=0, atol=1e-12)
        np.testing.assert_allclose(rep.A, SQRT5, rtol=0, atol=1e-15)
        assert abs(rep.discrepancy) < 1e-9
        np.testing.assert_allclose(rep.h, 34.0 / (5.0 * SQRT5), rtol=0, atol=1e-12)
        assert rep.in_canonical_domain

    @given(u=reg_u, v=any_v, n=freqs)
    @settings(max_examples=60)
    def test_principal_curvatures_consistent(self, u, v, n):
        rep = curvature_report(coral(n), (u, v))
        assert rep.k1 <= rep.k2
        assert abs(rep.k1 * rep.k2 - rep.k_forms) <= 1e-8 * max(abs(rep.k_forms), 1e-30)
        assert abs(0.5 * (rep.k1 + rep.k2) - rep.h) <= 1e-8 * max(abs(rep.h), 1e-30)

    def test_n2_constant_on_circles(self):
        base = curvature_report(coral(2), (1.0, 0.0)).k_forms
        for v in np.linspace(0.0, TWO_PI, 17):
            assert abs(curvature_report(coral(2), (1.0, v)).k_forms - base) < 1e-12

    def test_axis_is_singular(self):
        with pytest.raises(SingularPointError):
            curvature_report(coral(4), (0.0, 0.0))

    def test_family_specific_fields(self):
        let = curvature_report(lettuce(4), (1.0, 1.0))
        assert let.k_paper is None and let.A is None and let.discrepancy is None
        par = curvature_report(paraboloid(), (1.0, 1.0))
        assert par.k_paper is None and par.A is not None

    def test_out_of_domain_flagged(self):
        assert curvature_report(coral(4), (2.5, 0.0)).in_canonical_domain is False

    def test_lettuce_regular_at_u0(self):
        rep = curvature_report(lettuce(3), (0.0, 2.0))
        assert rep.k_forms == 0.0  # K = -2 n^2 u^2 (...)/B^4 vanishes with u


class TestFundamentalForms:
    def test_bundle(self):
        f = fundamental_forms(coral(4), (1.0, 0.0))
        assert (f.E, f.F, f.G) == (5.0, 0.0, 1.0)
        np.testing.assert_allclose((f.L, f.M, f.N), (-2.0 / SQRT5, 0.0, 14.0 / SQRT5),
                                   rtol=0, atol=1e-15)
        np.testing.assert_allclose(f.A, SQRT5, rtol=0, atol=1e-15)
        np.testing.assert_allclose(f.det_first, 5.0, rtol=0, atol=1e-15)

    def test_lettuce_has_no_aux_scalar(self):
        assert fundamental_forms(lettuce(4), (1.0, 1.0)).A is None


class TestCurvatureTable:
    def test_reference_grid(self):
        t = curvature_table(4, [0.5, 1.0, 1.5, 2.0], [TWO_PI, math.pi / 2.0])
        assert t.k_paper.shape == (4, 2)
        for i, (u, target) in enumerate(TABLE_N4):
            for j in range(2):
                assert abs(t.k_paper[i, j] - target) <= 0.01
        # the closed form equals A * k_forms on the whole grid
        for i, u in enumerate(t.u_values):
            for j, v in enumerate(t.v_values):
                a = aux_scalar(4, u, v)
                assert abs(t.k_paper[i, j] - a * t.k_forms[i, j]) < 1e-9

    def test_single_cell(self):
        t = curvature_table(4, [1.0], [TWO_PI])
        assert abs(t.k_paper[0, 0] - (-2.50)) <= 0.01

    def test_csv_layout_row_major(self):
        t = curvature_table(4, [0.5, 1.0], [1.0, 2.0])
        lines = table_to_csv(t, paper_rounding=False).strip().splitlines()
        assert lines[0] == "u,v,K_paper,K_forms"
        us = [float(line.split(",")[0]) for line in lines[1:]]
        vs = [float(line.split(",")[1]) for line in lines[1:]]
        assert us == [0.5, 0.5, 1.0, 1.0]
        assert vs == [1.0, 2.0, 1.0, 2.0]

    def test_csv_rounding_mode(self):
        t = curvature_table(4, [0.5], [TWO_PI])
        cell = table_to_csv(t, paper_rounding=True).strip().splitlines()[1].split(",")[2]
        assert cell == "-9.90"  # half-away rounding of -9.89949...
        full = table_to_csv(t, paper_rounding=False).strip().splitlines()[1].split(",")[2]
        assert abs(float(full) - (-9.8994949366)) < 1e-9

    def test_singular_cell_is_nan(self):
        t = curvature_table(4, [0.0, 1.0], [0.0])
        assert math.isnan(t.k_forms[0, 0])
        assert not math.isnan(t.k_paper[0, 0])

    def test_empty_axes_rejected(self):
        with pytest.raises(ParameterError):
            curvature_table(4, [], [1.0])


class TestDeviationReport:
    def test_n4_negative_and_nonconstant(self):
        dev = deviation_report(coral(4))
        assert dev.all_negative and dev.k_max < 0.0
        assert dev.k_std > 0.0
        assert dev.max_abs_dev > 0.0
        assert dev.k_min <= dev.k_mean <= dev.k_max

    def test_n2_constant_per_circle(self):
        dev = deviation_report(coral(2))
        assert dev.max_circle_std < 1e-12
        assert dev.all_negative

    def test_n4_varies_around_circles(self):
        assert deviation_report(coral(4)).max_circle_std > 0.0

    def test_preconditions(self):
        with pytest.raises(ParameterError):
            deviation_report(lettuce(4))
        with pytest.raises(ParameterError):
            deviation_report(coral(4), u_min=0.0)
        with pytest.raises(ParameterError):
            deviation_report(coral(4), nu=1)


def test_apex_limit_matches_small_u():
    for n in (2, 3, 4, 7):
        k_small = curvature_report(coral(n), (1e-6, 0.0)).k_forms
        assert abs(k_small - coral_apex_curvature(n)) < 1e-9
