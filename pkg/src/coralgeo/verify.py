"""Independent numerical verification of the closed-form geometry.

Three layers:

* :func:`fd_jet`: derivative jets rebuilt from positions alone via
  second-order central difference quotients.  The stencil arithmetic runs at
  extended precision (``np.longdouble``) through the duck-typed
  :func:`~coralgeo.surfaces.eval_position`, so the quotients carry the
  scheme's O(step^2) truncation error instead of float64 cancellation noise;
  at the default step the second partials come out ~1e-8 accurate, tight
  enough to serve as an oracle for the hand-coded jets.
* :func:`monge_curvature`: the classical graph-surface curvature
  (fxx fyy - fxy^2)/(1 + fx^2 + fy^2)^2, used as a second independent route
  for the n = 2 polar surface (the graph of z = y^2 - x^2).
* :func:`validate_all`: runs every cross-check behind the CLI ``validate``
  command and assembles a deterministic report.  The equality of the two
  curvature variants is *expected to fail* by exactly the factor A; it is
  reported under "known discrepancies" and does not fail the suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from . import _kernels
from .diffgeo import (aux_scalar, coral_curvature_paper, curvature_report,
                      deviation_report, first_form,
                      gaussian_curvature_from_forms, second_form,
                      unit_normal, weingarten)
from .errors import ParameterError
from .surfaces import (CORAL, Jet2, SurfaceFamily, TWO_PI, Vec3, coral,
                       eval_jet, eval_position, lettuce, paraboloid)

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class FiniteDifferenceConfig:
    """Central-difference settings; the scheme is fixed second-order central."""

    step: float = 1e-5
    scheme: ClassVar[str] = "central-2"

    def __post_init__(self) -> None:
        if not (1e-8 <= self.step <= 1e-2):
            raise ParameterError(f"fd step must lie in [1e-8, 1e-2], got {self.step!r}")


def fd_jet(s: SurfaceFamily, q, cfg: FiniteDifferenceConfig | None = None) -> Jet2:
    """Jet from central difference quotients of eval_position only."""
    if cfg is None:
        cfg = FiniteDifferenceConfig()
    ld = np.longdouble
    u0, v0, h = ld(q[0]), ld(q[1]), ld(cfg.step)

    def at(uu, vv):
        p = eval_position(s, (uu, vv))
        return np.array([p.x, p.y, p.z], dtype=ld)

    f0 = at(u0, v0)
    fpu, fmu = at(u0 + h, v0), at(u0 - h, v0)
    fpv, fmv = at(u0, v0 + h), at(u0, v0 - h)
    fpp, fpm = at(u0 + h, v0 + h), at(u0 + h, v0 - h)
    fmp, fmm = at(u0 - h, v0 + h), at(u0 - h, v0 - h)
    two_h = 2.0 * h
    h2 = h * h

    def vec(a) -> Vec3:
        return Vec3(float(a[0]), float(a[1]), float(a[2]))

    return Jet2(
        p=vec(f0),
        ru=vec((fpu - fmu) / two_h),
        rv=vec((fpv - fmv) / two_h),
        ruu=vec((fpu - 2.0 * f0 + fmu) / h2),
        ruv=vec((fpp - fpm - fmp + fmm) / (4.0 * h2)),
        rvv=vec((fpv - 2.0 * f0 + fmv) / h2),
    )


def monge_curvature(fx, fy, fxx, fxy, fyy) -> float:
    """Gaussian curvature of a graph z = f(x, y) from its partials."""
    w = 1.0 + fx * fx + fy * fy
    return float((fxx * fyy - fxy * fxy) / (w * w))


def _k_from_jet(j: Jet2) -> float:
    E, F, G = first_form(j)
    L, M, N = second_form(j, unit_normal(j))
    return gaussian_curvature_from_forms(E, F, G, L, M, N)


def _jet_gap(a: Jet2, b: Jet2) -> float:
    worst = 0.0
    for va, vb in zip(a, b):
        for ca, cb in zip(va, vb):
            worst = max(worst, abs(float(ca) - float(cb)))
    return worst


PASS = "pass"
FAIL = "fail"
KNOWN = "known-discrepancy"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    worst_residual: float
    location: str
    tolerance: float
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "worst_residual": self.worst_residual,
            "location": self.location,
            "tolerance": self.tolerance,
            "note": self.note,
        }


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple
    seed: int
    grid: int
    fd_step: float

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def known_discrepancies(self) -> tuple:
        return tuple(c for c in self.checks if c.status == KNOWN)

    def to_text(self) -> str:
        lines = [
            f"validation report (grid {self.grid}x{self.grid}, fd step {self.fd_step:g}, seed {self.seed})",
            f"overall: {'PASS' if self.passed else 'FAIL'}",
            "",
        ]
        name_w = max(len(c.name) for c in self.checks)
        for c in self.checks:
            if c.status == KNOWN:
                continue
            lines.append(f"{c.name:<{name_w}}  {c.status:<4}  "
                         f"residual {c.worst_residual:<12.4g} tol {c.tolerance:<8.3g} at {c.location}")
        known = self.known_discrepancies
        if known:
            lines.append("")
            lines.append("known discrepancies (expected, not failures):")
            for c in known:
                lines.append(f"{c.name:<{name_w}}  residual {c.worst_residual:.4g} at {c.location}")
                if c.note:
                    lines.append(f"    {c.note}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "seed": self.seed,
            "grid": self.grid,
            "fd_step": self.fd_step,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
        return json.dumps(doc, indent=2) + "\n"


def _grid(lo: float, hi: float, count: int) -> np.ndarray:
    return np.linspace(lo, hi, count)


def validate_all(n_values=(2, 3, 4, 5), grid: int = 21,
                 fd: FiniteDifferenceConfig | None = None,
                 samples: int = 1000, seed: int = DEFAULT_SEED) -> ValidationReport:
    """Run every cross-check and return the assembled report.

    Deterministic for fixed arguments: grids are uniform and the sampled
    checks draw from a generator seeded with ``seed`` (recorded in the
    report).
    """
    if fd is None:
        fd = FiniteDifferenceConfig()
    checks: list[CheckResult] = []
    us = _grid(0.0, 2.0, grid)
    vs = _grid(0.0, TWO_PI, grid)
    corals = [coral(n) for n in n_values]
    families = corals + [lettuce(4), paraboloid()]

    # analytic jets vs difference quotients, and the K pipelines they feed
    k_worst, k_loc = 0.0, ""
    for fam in families:
        worst, loc = 0.0, ""
        for u in us:
            for v in vs:
                a = eval_jet(fam, (u, v))
                b = fd_jet(fam, (u, v), fd)
                gap = _jet_gap(a, b)
                if gap > worst:
                    worst, loc = gap, f"{fam.describe()} u={u:.6g} v={v:.6g}"
                if u > 0.05 or not fam.radial:
                    kgap = abs(_k_from_jet(a) - _k_from_jet(b))
                    if kgap > k_worst:
                        k_worst, k_loc = kgap, f"{fam.describe()} u={u:.6g} v={v:.6g}"
        checks.append(CheckResult(f"jets_fd[{fam.kind}]", PASS if worst < 1e-6 else FAIL,
                                  worst, loc, 1e-6))
    checks.append(CheckResult("k_forms_fd", PASS if k_worst < 1e-6 else FAIL,
                              k_worst, k_loc, 1e-6))

    # fd error must shrink ~4x when the step is halved (truncation regime)
    probe_pts = [(1.7, 0.9), (0.6, 2.2), (1.2, 4.4)]
    errs = []
    for step in (1e-3, 5e-4):
        worst = 0.0
        for n in (4, 5):
            for (u, v) in probe_pts:
                worst = max(worst, _jet_gap(eval_jet(coral(n), (u, v)),
                                            fd_jet(coral(n), (u, v), FiniteDifferenceConfig(step))))
        errs.append(worst)
    ratio = errs[0] / errs[1]
    checks.append(CheckResult("fd_convergence_order", PASS if 3.0 <= ratio <= 5.0 else FAIL,
                              ratio, "steps 1e-3 -> 5e-4", 0.0,
                              note="ratio of worst jet errors; 4 means clean second order"))

    # rotating v by one lobe must rotate the surface about the z axis
    worst, loc = 0.0, ""
    for n in n_values:
        fam = coral(n)
        theta = TWO_PI / n
        ct, st = np.cos(theta), np.sin(theta)
        for u in us:
            for v in vs:
                p = eval_position(fam, (u, v))
                q = eval_position(fam, (u, v + theta))
                rx = ct * p.x - st * p.y
                ry = st * p.x + ct * p.y
                gap = max(abs(q.x - rx), abs(q.y - ry), abs(q.z - p.z))
                if gap > worst:
                    worst, loc = gap, f"n={n} u={u:.6g} v={v:.6g}"
    checks.append(CheckResult("rotation_symmetry", PASS if worst < 1e-12 else FAIL,
                              worst, loc, 1e-12))

    # the n = 2 coral and the hyperbolic paraboloid are one surface
    worst, loc = 0.0, "entire grid"
    for u in us:
        for v in vs:
            gap = _jet_gap(eval_jet(coral(2), (u, v)), eval_jet(paraboloid(), (u, v)))
            if gap > worst:
                worst, loc = gap, f"u={u:.6g} v={v:.6g}"
    checks.append(CheckResult("coral2_equals_paraboloid", PASS if worst < 1e-15 else FAIL,
                              worst, loc, 1e-15))

    # EG - F^2 = u^2 A^2 on the polar families
    worst, loc = 0.0, ""
    for n in (2, 3, 4, 5, 7):
        fam = coral(n)
        for u in _grid(0.05, 2.0, grid):
            for v in vs:
                E, F, G = first_form(eval_jet(fam, (u, v)))
                a = aux_scalar(n, u, v)
                target = u * u * a * a
                rel = abs((E * G - F * F) - target) / target
                if rel > worst:
                    worst, loc = rel, f"n={n} u={u:.6g} v={v:.6g}"
    checks.append(CheckResult("metric_identity", PASS if worst < 1e-9 else FAIL,
                              worst, loc, 1e-9))

    # cross-product normal vs its closed form on the coral
    worst, loc = 0.0, ""
    for n in n_values:
        fam = coral(n)
        for u in _grid(0.1, 2.0, grid):
            for v in vs:
                nrm = unit_normal(eval_jet(fam, (u, v)))
                a = aux_scalar(n, u, v)
                cn, sn = np.cos(n * v), np.sin(n * v)
                cv, sv = np.cos(v), np.sin(v)
                ref = ((n * u * sv * sn + 2.0 * u * cv * cn) / a,
                       (2.0 * u * sv * cn - n * u * cv * sn) / a,
                       1.0 / a)
                gap = max(abs(nrm.x - ref[0]), abs(nrm.y - ref[1]), abs(nrm.z - ref[2]))
                if gap > worst:
                    worst, loc = gap, f"n={n} u={u:.6g} v={v:.6g}"
    checks.append(CheckResult("normal_closed_form", PASS if worst < 1e-12 else FAIL,
                              worst, loc, 1e-12))

    # n = 2: the forms pipeline must match the graph-surface oracle
    worst, loc = 0.0, ""
    for i, u in enumerate(_grid(0.02, 2.0, 100)):
        v = TWO_PI * i / 100.0
        x, y = u * np.cos(v), u * np.sin(v)
        oracle = monge_curvature(-2.0 * x, 2.0 * y, -2.0, 0.0, 2.0)
        gap = abs(_k_from_jet(eval_jet(coral(2), (u, v))) - oracle)
        if gap > worst:
            worst, loc = gap, f"u={u:.6g} v={v:.6g}"
    checks.append(CheckResult("monge_oracle_n2", PASS if worst < 1e-9 else FAIL,
                              worst, loc, 1e-9,
                              note="z = y^2 - x^2 graph curvature -4/(1+4u^2)^2"))

    # n = 2 curvature is constant around each fixed-u circle
    worst, loc = 0.0, ""
    for u in (0.3, 0.9, 1.5, 2.0):
        k = _kernels.eval_grid(coral(2), [u], np.linspace(0.0, TWO_PI, 64, endpoint=False)).k_forms
        s = float(k.std())
        if s > worst:
            worst, loc = s, f"u={u:.6g}"
    checks.append(CheckResult("circle_constancy_n2", PASS if worst < 1e-12 else FAIL,
                              worst, loc, 1e-12))

    # seeded random sweeps: structural relation, shape-operator identities
    rng = np.random.default_rng(seed)
    worst, loc = 0.0, ""
    wdet_worst, wdet_loc = 0.0, ""
    eig_worst, eig_loc = 0.0, ""
    kp_gap_worst, kp_gap_loc = 0.0, ""
    for _ in range(samples):
        n = int(rng.integers(2, 8))
        u = float(rng.uniform(0.05, 2.0))
        v = float(rng.uniform(0.0, TWO_PI))
        fam = coral(n)
        rep = curvature_report(fam, (u, v))
        gap = abs(rep.k_paper - rep.A * rep.k_forms)
        if gap > worst:
            worst, loc = gap, f"n={n} u={u:.6g} v={v:.6g}"
        j = eval_jet(fam, (u, v))
        E, F, G = first_form(j)
        L, M, N = second_form(j, unit_normal(j))
        w = weingarten(E, F, G, L, M, N)
        k = gaussian_curvature_from_forms(E, F, G, L, M, N)
        wgap = abs(w.det - k) / max(abs(k), 1e-30)
        if wgap > wdet_worst:
            wdet_worst, wdet_loc = wgap, f"n={n} u={u:.6g} v={v:.6g}"
        for lam in (rep.k1, rep.k2):
            char = abs(lam * lam - w.trace * lam + w.det)
            if char > eig_worst:
                eig_worst, eig_loc = char, f"n={n} u={u:.6g} v={v:.6g}"
        kp_gap = abs(rep.k_paper - rep.k_forms)
        if kp_gap > kp_gap_worst:
            kp_gap_worst, kp_gap_loc = kp_gap, f"n={n} u={u:.6g} v={v:.6g}"
    checks.append(CheckResult("structural_relation", PASS if worst < 1e-9 else FAIL,
                              worst, loc, 1e-9,
                              note="|k_paper - A*k_forms| over seeded regular samples"))
    checks.append(CheckResult("weingarten_det", PASS if wdet_worst < 1e-9 else FAIL,
                              wdet_worst, wdet_loc, 1e-9,
                              note="det(W) vs (LN - M^2)/(EG - F^2), relative"))
    checks.append(CheckResult("eigen_consistency", PASS if eig_worst < 1e-8 else FAIL,
                              eig_worst, eig_loc, 1e-8,
                              note="characteristic polynomial of W at k1, k2"))

    # both curvature variants stay negative away from the axis
    worst, loc = -np.inf, ""
    for n in n_values:
        ge = _kernels.eval_grid(coral(n), _grid(0.05, 2.0, grid), vs)
        top = float(np.nanmax(np.maximum(ge.k_forms, ge.k_paper)))
        if top > worst:
            worst, loc = top, f"n={n}"
    checks.append(CheckResult("negativity", PASS if worst < 0.0 else FAIL,
                              worst, loc, 0.0,
                              note="max of k_forms and k_paper over the canonical grid; must stay < 0"))

    # the n = 4 coral curvature varies; that is the whole point of the report
    dev = deviation_report(coral(4))
    checks.append(CheckResult("nonconstancy_n4",
                              PASS if (dev.k_std > 0.0 and dev.all_negative) else FAIL,
                              dev.k_std, f"grid {dev.grid[0]}x{dev.grid[1]} u in {dev.u_range}", 0.0,
                              note="std of k_forms must be positive with max still negative"))

    # batch kernels must reproduce the scalar pipeline
    worst, loc = 0.0, ""
    for fam in families:
        gu = _grid(0.1, 2.0, grid)
        ge = _kernels.eval_grid(fam, gu, vs)
        idx = 0
        for u in gu:
            for v in vs:
                k_scalar = _k_from_jet(eval_jet(fam, (u, v)))
                p_scalar = eval_position(fam, (u, v))
                gap = abs(float(ge.k_forms[idx]) - k_scalar)
                gap = max(gap, float(np.max(np.abs(ge.positions[idx] - p_scalar.as_array()))))
                if gap > worst:
                    worst, loc = gap, f"{fam.describe()} u={u:.6g} v={v:.6g}"
                idx += 1
    checks.append(CheckResult("backend_vs_scalar", PASS if worst < 1e-10 else FAIL,
                              worst, loc, 1e-10,
                              note=f"active backend: {_kernels.BACKEND}"))

    # expected failure: the two curvature variants differ by the factor A
    checks.append(CheckResult("closed_form_equals_forms", KNOWN,
                              kp_gap_worst, kp_gap_loc, 0.0,
                              note="k_paper = A * k_forms identically (A >= 1), so the two variants "
                                   "agree only on the axis where A = 1: the closed form divides by "
                                   "A^3 where det(II)/det(I) divides by A^4.  Reference grid values "
                                   "are reproduced by the closed-form variant only; this is "
                                   "documented, not reconciled."))

    return ValidationReport(tuple(checks), seed=seed, grid=grid, fd_step=fd.step)
