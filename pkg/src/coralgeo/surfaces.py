"""Parametrized saddle-surface families and their exact derivative jets.

Three families over parameters (u, v), u radial-like and v angular (radians):

* ``coral(n)``:      r(u, v) = (u cos v, u sin v, -u^2 cos nv), integer n >= 2.
  The frequency n sets how many saddle ripples run around the axis.
* ``paraboloid()``:  r(u, v) = (u cos v, u sin v, -u^2 cos 2v).  Identical to
  ``coral(2)``; it is the graph z = y^2 - x^2 in polar form.
* ``lettuce(n)``:    r(u, v) = (v, u, -u^2 cos nv), the strip obtained by
  cutting the polar surface open.

The canonical parameter box is u in [0, 2], v in [0, 2pi].  All formulas are
entire, so evaluation outside the box is permitted; callers that build
reports should consult :func:`in_canonical_domain` instead of expecting an
error.

Derivatives are hand-coded closed forms, not symbolic output.  Evaluation is
duck-typed over the scalar type (plain floats or ``np.longdouble``), which is
what lets the finite-difference verification layer run these same formulas at
extended precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ParameterError

TWO_PI = 2.0 * np.pi

CORAL = "coral"
LETTUCE = "lettuce"
PARABOLOID = "paraboloid"
_KINDS = (CORAL, LETTUCE, PARABOLOID)

CANONICAL_U = (0.0, 2.0)
CANONICAL_V = (0.0, TWO_PI)


class Vec3(NamedTuple):
    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)


class DomainPoint(NamedTuple):
    """A parameter pair; any (u, v) sequence is accepted wherever one is."""

    u: float
    v: float

    @property
    def in_canonical_domain(self) -> bool:
        return in_canonical_domain(self.u, self.v)


class Jet2(NamedTuple):
    """Position and all first/second partials of r at one (u, v)."""

    p: Vec3
    ru: Vec3
    rv: Vec3
    ruu: Vec3
    ruv: Vec3
    rvv: Vec3


@dataclass(frozen=True)
class SurfaceFamily:
    """One of the three families plus its integer frequency.

    ``n`` is meaningful for coral (n >= 2) and lettuce (n >= 1); the
    hyperbolic paraboloid is the fixed n = 2 member of the polar family.
    """

    kind: str
    n: int = 2

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown surface kind {self.kind!r}")
        if self.kind == CORAL and self.n < 2:
            raise ParameterError(f"coral frequency must be an integer >= 2, got {self.n}")
        if self.kind == LETTUCE and self.n < 1:
            raise ParameterError(f"lettuce frequency must be an integer >= 1, got {self.n}")
        if self.kind == PARABOLOID and self.n != 2:
            raise ParameterError("the hyperbolic paraboloid has fixed frequency 2")

    @property
    def frequency(self) -> int:
        return 2 if self.kind == PARABOLOID else self.n

    @property
    def radial(self) -> bool:
        """True for the polar-form families (coral, paraboloid)."""
        return self.kind != LETTUCE

    def describe(self) -> str:
        return f"{self.kind} n={self.frequency}"


def coral(n: int) -> SurfaceFamily:
    return SurfaceFamily(CORAL, n)


def lettuce(n: int) -> SurfaceFamily:
    return SurfaceFamily(LETTUCE, n)


def paraboloid() -> SurfaceFamily:
    return SurfaceFamily(PARABOLOID, 2)


def in_canonical_domain(u: float, v: float) -> bool:
    return (CANONICAL_U[0] <= u <= CANONICAL_U[1]
            and CANONICAL_V[0] <= v <= CANONICAL_V[1])


def eval_position(s: SurfaceFamily, q) -> Vec3:
    """Surface point r(u, v) for the family ``s``."""
    u, v = q
    n = s.frequency
    z = -u * u * np.cos(n * v)
    if s.radial:
        return Vec3(u * np.cos(v), u * np.sin(v), z)
    return Vec3(v, u, z)


def eval_jet(s: SurfaceFamily, q) -> Jet2:
    """Position plus exact first and second partials at (u, v).

    Note the degeneracy of the polar families on the axis: every component of
    r_v carries a factor of u, so r_v = 0 at u = 0.  The jet itself is still
    well defined there; downstream curvature code decides how to treat the
    induced metric singularity.
    """
    u, v = q
    n = s.frequency
    cn = np.cos(n * v)
    sn = np.sin(n * v)
    if s.radial:
        cv = np.cos(v)
        sv = np.sin(v)
        return Jet2(
            p=Vec3(u * cv, u * sv, -u * u * cn),
            ru=Vec3(cv, sv, -2.0 * u * cn),
            rv=Vec3(-u * sv, u * cv, n * u * u * sn),
            ruu=Vec3(0.0, 0.0, -2.0 * cn),
            ruv=Vec3(-sv, cv, 2.0 * n * u * sn),
            rvv=Vec3(-u * cv, -u * sv, n * n * u * u * cn),
        )
    return Jet2(
        p=Vec3(v, u, -u * u * cn),
        ru=Vec3(0.0, 1.0, -2.0 * u * cn),
        rv=Vec3(1.0, 0.0, n * u * u * sn),
        ruu=Vec3(0.0, 0.0, -2.0 * cn),
        ruv=Vec3(0.0, 0.0, 2.0 * n * u * sn),
        rvv=Vec3(0.0, 0.0, n * n * u * u * cn),
    )
