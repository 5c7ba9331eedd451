"""Fundamental forms, shape operator, and curvature reports.

Two Gaussian-curvature variants are first-class here and are never silently
reconciled:

* ``k_forms``: the definition det(II)/det(I) = (LN - M^2)/(EG - F^2).
* ``k_paper``: the coral closed form with a 3/2-exponent denominator,
  -(2(n^2-2)cos^2 nv + n^2 sin^2 nv) / A^3  with
  A = sqrt(n^2 u^2 sin^2 nv + 4 u^2 cos^2 nv + 1).

Expanding det(II)/det(I) for the coral yields the same numerator over A^4,
so the two variants differ by exactly one factor of A:  k_paper = A * k_forms.
Reports carry both plus their discrepancy, and the validation suite lists the
mismatch as a known discrepancy rather than a failure.

Orientation convention: the unit normal is (r_u x r_v)/|r_u x r_v|.  Flipping
it would flip the signs of H, k1, k2 but not of the Gaussian curvature.
Principal curvatures are reported with k1 <= k2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ParameterError, SingularPointError
from .surfaces import (CANONICAL_V, CORAL, Jet2, SurfaceFamily, TWO_PI, Vec3,
                       coral, eval_jet, in_canonical_domain)
from .util import SINGULAR_REL_TOL, round_half_away


def _dot(a, b):
    return a.x * b.x + a.y * b.y + a.z * b.z


def _cross(a, b) -> Vec3:
    return Vec3(a.y * b.z - a.z * b.y,
                a.z * b.x - a.x * b.z,
                a.x * b.y - a.y * b.x)


def first_form(j: Jet2):
    """Metric coefficients (E, F, G) = (ru.ru, ru.rv, rv.rv)."""
    return _dot(j.ru, j.ru), _dot(j.ru, j.rv), _dot(j.rv, j.rv)


def unit_normal(j: Jet2) -> Vec3:
    """Unit normal (ru x rv)/|ru x rv|; raises SingularPointError where it vanishes."""
    cr = _cross(j.ru, j.rv)
    nsq = _dot(cr, cr)  # equals EG - F^2 by the Lagrange identity
    E, _, G = first_form(j)
    if nsq <= SINGULAR_REL_TOL * max(1.0, E * G):
        raise SingularPointError("unit normal undefined: ru x rv vanishes at this point")
    inv = 1.0 / np.sqrt(nsq)
    return Vec3(cr.x * inv, cr.y * inv, cr.z * inv)


def second_form(j: Jet2, normal: Vec3):
    """Shape coefficients (L, M, N) = (ruu.n, ruv.n, rvv.n) for a unit normal n."""
    return _dot(j.ruu, normal), _dot(j.ruv, normal), _dot(j.rvv, normal)


def aux_scalar(n: int, u: float, v: float) -> float:
    """The scalar A with |ru x rv| = u*A on the polar families.

    A = sqrt(n^2 u^2 sin^2 nv + 4 u^2 cos^2 nv + 1); note A(0, v) = 1.
    """
    cn = np.cos(n * v)
    sn = np.sin(n * v)
    return float(np.sqrt(n * n * u * u * sn * sn + 4.0 * u * u * cn * cn + 1.0))


@dataclass(frozen=True)
class FundamentalForms:
    """First-form (E, F, G) and second-form (L, M, N) coefficients.

    A is the polar-family scalar from :func:`aux_scalar`; None for lettuce.
    """

    E: float
    F: float
    G: float
    L: float
    M: float
    N: float
    A: float | None = None

    @property
    def det_first(self) -> float:
        return self.E * self.G - self.F * self.F

    @property
    def det_second(self) -> float:
        return self.L * self.N - self.M * self.M


def fundamental_forms(s: SurfaceFamily, q) -> FundamentalForms:
    """Both forms at (u, v); requires a regular point for the normal."""
    u, v = q
    j = eval_jet(s, q)
    E, F, G = first_form(j)
    L, M, N = second_form(j, unit_normal(j))
    A = aux_scalar(s.frequency, u, v) if s.radial else None
    return FundamentalForms(float(E), float(F), float(G),
                            float(L), float(M), float(N), A)


@dataclass(frozen=True)
class WeingartenMatrix:
    """The shape operator I^-1 * II in the (ru, rv) basis."""

    w11: float
    w12: float
    w21: float
    w22: float

    @property
    def det(self) -> float:
        return self.w11 * self.w22 - self.w12 * self.w21

    @property
    def trace(self) -> float:
        return self.w11 + self.w22


def weingarten(E, F, G, L, M, N) -> WeingartenMatrix:
    """Shape operator from form coefficients via the cofactor expansion of I^-1."""
    det1 = E * G - F * F
    if det1 <= SINGULAR_REL_TOL * max(1.0, E * G):
        raise SingularPointError("metric is singular (EG - F^2 ~ 0): no shape operator")
    inv = 1.0 / det1
    return WeingartenMatrix(
        w11=float((G * L - F * M) * inv),
        w12=float((G * M - F * N) * inv),
        w21=float((E * M - F * L) * inv),
        w22=float((E * N - F * M) * inv),
    )


def gaussian_curvature_from_forms(E, F, G, L, M, N) -> float:
    """Gaussian curvature det(II)/det(I) = (LN - M^2)/(EG - F^2)."""
    det1 = E * G - F * F
    if det1 <= SINGULAR_REL_TOL * max(1.0, E * G):
        raise SingularPointError("metric is singular (EG - F^2 ~ 0): curvature undefined")
    return float((L * N - M * M) / det1)


def coral_curvature_paper(n: int, q) -> float:
    """Closed-form coral curvature with the 3/2-exponent denominator.

    Evaluates -(2(n^2-2)cos^2 nv + n^2 sin^2 nv) / A^3 verbatim.  The
    forms-based det(II)/det(I) carries A^4 in the denominator instead, so this
    variant equals A * k_forms identically; both are reported side by side.
    Defined for every (u, v), including the u = 0 axis (A = 1 there).
    """
    if n < 2:
        raise ParameterError(f"coral frequency must be an integer >= 2, got {n}")
    u, v = q
    cn = np.cos(n * v)
    sn = np.sin(n * v)
    a2 = n * n * u * u * sn * sn + 4.0 * u * u * cn * cn + 1.0
    return float(-(2.0 * (n * n - 2.0) * cn * cn + n * n * sn * sn) / a2 ** 1.5)


def coral_apex_curvature(n: int) -> float:
    """Limit of k_forms on the axis u = 0, approached along v = 0: -2(n^2 - 2)."""
    return -2.0 * (n * n - 2.0)


@dataclass(frozen=True)
class CurvatureReport:
    """All curvature quantities at one regular point.

    k_paper and discrepancy (= k_paper - A * k_forms) are present for corals
    only; A is present for the polar families.  k1 <= k2.
    """

    k_forms: float
    h: float
    k1: float
    k2: float
    k_paper: float | None = None
    A: float | None = None
    discrepancy: float | None = None
    in_canonical_domain: bool = True


def curvature_report(s: SurfaceFamily, q) -> CurvatureReport:
    """Curvature bundle at (u, v); raises SingularPointError on the polar axis."""
    u, v = q
    j = eval_jet(s, q)
    E, F, G = first_form(j)
    L, M, N = second_form(j, unit_normal(j))
    k = gaussian_curvature_from_forms(E, F, G, L, M, N)
    w = weingarten(E, F, G, L, M, N)
    h = 0.5 * w.trace
    root = np.sqrt(max(h * h - k, 0.0))
    k_paper = A = gap = None
    if s.radial:
        A = aux_scalar(s.frequency, u, v)
    if s.kind == CORAL:
        k_paper = coral_curvature_paper(s.n, q)
        gap = k_paper - A * k
    return CurvatureReport(
        k_forms=float(k),
        h=float(h),
        k1=float(h - root),
        k2=float(h + root),
        k_paper=None if k_paper is None else float(k_paper),
        A=None if A is None else float(A),
        discrepancy=None if gap is None else float(gap),
        in_canonical_domain=in_canonical_domain(u, v),
    )


@dataclass(frozen=True)
class CurvatureTable:
    """Both curvature variants over a u x v grid of coral samples."""

    n: int
    u_values: tuple
    v_values: tuple
    k_paper: np.ndarray  # shape (len(u_values), len(v_values))
    k_forms: np.ndarray


def curvature_table(n: int, u_values, v_values) -> CurvatureTable:
    """Grid of k_paper and k_forms for the n-coral (k_forms NaN where singular)."""
    u_values = tuple(float(u) for u in u_values)
    v_values = tuple(float(v) for v in v_values)
    if not u_values or not v_values:
        raise ParameterError("u_values and v_values must be non-empty")
    ge = _kernels.eval_grid(coral(n), u_values, v_values)
    shape = (len(u_values), len(v_values))
    return CurvatureTable(n, u_values, v_values,
                          ge.k_paper.reshape(shape), ge.k_forms.reshape(shape))


def table_to_csv(table: CurvatureTable, paper_rounding: bool = True) -> str:
    """CSV rendering, header ``u,v,K_paper,K_forms``, row-major with u outer.

    With paper_rounding the K cells are rounded half-away-from-zero to two
    decimals (the reproduction convention); otherwise full precision.
    """
    def cell(x: float) -> str:
        if np.isnan(x):
            return "nan"
        if paper_rounding:
            return f"{round_half_away(x, 2):.2f}"
        return repr(float(x))

    lines = ["u,v,K_paper,K_forms"]
    for i, u in enumerate(table.u_values):
        for jv, v in enumerate(table.v_values):
            lines.append(f"{repr(u)},{repr(v)},{cell(table.k_paper[i, jv])},"
                         f"{cell(table.k_forms[i, jv])}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DeviationReport:
    """Spread statistics of k_forms over the canonical domain of a coral.

    ``all_negative`` confirms the saddle character (max k_forms < 0);
    ``k_std`` > 0 is what shows the curvature is *not* constant, and
    ``max_circle_std`` measures variation around fixed-u circles (zero for
    n = 2, positive for n >= 3).
    """

    family: SurfaceFamily
    u_range: tuple
    grid: tuple
    k_min: float
    k_max: float
    k_mean: float
    k_std: float
    max_abs_dev: float
    max_circle_std: float
    all_negative: bool


def deviation_report(s: SurfaceFamily, nu: int = 64, nv: int = 64,
                     u_min: float = 0.1, u_max: float = 2.0) -> DeviationReport:
    """Scan k_forms on an nu x nv grid with u in [u_min, u_max], v over a full turn."""
    if s.kind != CORAL:
        raise ParameterError("deviation reports are defined for coral surfaces")
    if nu < 2 or nv < 2:
        raise ParameterError("need nu >= 2 and nv >= 2")
    if not (0.0 < u_min < u_max):
        raise ParameterError("need 0 < u_min < u_max")
    u = np.linspace(u_min, u_max, nu)
    v = np.linspace(CANONICAL_V[0], TWO_PI, nv, endpoint=False)
    k = _kernels.eval_grid(s, u, v).k_forms.reshape(nu, nv)
    mean = float(k.mean())
    return DeviationReport(
        family=s,
        u_range=(float(u_min), float(u_max)),
        grid=(nu, nv),
        k_min=float(k.min()),
        k_max=float(k.max()),
        k_mean=mean,
        k_std=float(k.std()),
        max_abs_dev=float(np.abs(k - mean).max()),
        max_circle_std=float(k.std(axis=1).max()),
        all_negative=bool(k.max() < 0.0),
    )
