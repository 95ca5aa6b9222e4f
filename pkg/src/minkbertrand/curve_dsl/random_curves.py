"""Random smooth unit-speed curves on S^2_1 and H^2, for property suites.

A random ambient curve y(v) is written in the expression language as a
small trigonometric/hyperbolic perturbation of a pseudo-circle or geodesic,
projected radially with f = y / sqrt(|<y, y>|), checked on a grid and
reparametrized by arc length.  Draws that violate the sign of <y, y>, have a
non-space-like tangent, or miss the requested geodesic-curvature bound are
rejected and redrawn.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import GeometryError
from ..lorentz_core import det3, mink_dot
from .curves import CurveSpec, Space, UnitSpeedCurve

FAMILIES = {
    Space.S12: ("hyperbolic", "circular"),
    Space.H2: ("circular", "geodesic"),
}


def _wiggle(rng: np.random.Generator, amp: float) -> str:
    e = rng.uniform(-amp, amp)
    w = rng.uniform(0.5, 2.0)
    p = rng.uniform(0.0, 2 * math.pi)
    fn = "sin" if rng.random() < 0.5 else "cos"
    return f"{e!r}*{fn}({w!r}*v+{p!r})"


def _ambient(rng: np.random.Generator, space: Space, family: str, amp: float) -> tuple[str, str, str]:
    w = [_wiggle(rng, amp) for _ in range(3)]
    if space is Space.S12 and family == "hyperbolic":
        c = rng.uniform(1.3, 2.2)
        return (f"{c!r}+{w[0]}", f"sinh(v)+{w[1]}", f"cosh(v)+{w[2]}")
    if space is Space.S12 and family == "circular":
        h = rng.uniform(-0.5, 0.5)
        return (f"sin(v)+{w[0]}", f"cos(v)+{w[1]}", f"{h!r}+{w[2]}")
    if space is Space.H2 and family == "circular":
        r = rng.uniform(0.6, 1.4)
        c = r * rng.uniform(1.3, 2.0)
        return (f"{r!r}*cos(v/{r!r})+{w[0]}", f"{r!r}*sin(v/{r!r})+{w[1]}", f"{c!r}+{w[2]}")
    if space is Space.H2 and family == "geodesic":
        return (f"sinh(v)+{w[0]}", w[1], f"cosh(v)+{w[2]}")
    raise ValueError(f"no family {family!r} on {space.value}")


def projected_spec(space: Space, ys: tuple[str, str, str], domain: tuple[float, float]) -> CurveSpec:
    y1, y2, y3 = (f"({y})" for y in ys)
    q = f"{y1}^2+{y2}^2-{y3}^2" if space is Space.S12 else f"{y3}^2-{y1}^2-{y2}^2"
    return CurveSpec.from_strings(space, *(f"{y}/sqrt({q})" for y in (y1, y2, y3)), domain)


def _acceptable(spec: CurveSpec, n_check: int = 101) -> bool:
    for v in spec.grid(n_check):
        s = spec.sample(v)
        q = mink_dot(s.d1, s.d1)
        e2 = s.d1.x1**2 + s.d1.x2**2 + s.d1.x3**2
        if q < 1e-3 * e2 or e2 < 1e-6:
            return False
    return True


def geodesic_curvatures(curve, n: int = 101) -> list[float]:
    return [det3(s.position, s.d1, s.d2) for s in curve.samples(curve.grid(n))]


def random_spherical_curve(
    rng: np.random.Generator,
    space: Space,
    family: str | None = None,
    amp: float = 0.15,
    min_kg_sq: float | None = None,
    domain: tuple[float, float] = (-1.0, 1.0),
    tol: float = 1e-11,
    max_tries: int = 200,
) -> UnitSpeedCurve:
    """Draw a unit-speed curve on ``space``.

    With ``min_kg_sq`` set, the geodesic curvature must satisfy
    kappa_g^2 >= min_kg_sq on a 101-point check grid.
    """
    if space is Space.FREE:
        raise ValueError("random curves live on S12 or H2")
    for _ in range(max_tries):
        fam = family or FAMILIES[space][int(rng.integers(len(FAMILIES[space])))]
        spec = projected_spec(space, _ambient(rng, space, fam, amp), domain)
        try:
            if not _acceptable(spec):
                continue
            curve = UnitSpeedCurve(spec, tol)
            if min_kg_sq is not None and min(k * k for k in geodesic_curvatures(curve)) < min_kg_sq:
                continue
        except GeometryError:
            continue
        return curve
    raise RuntimeError(f"no acceptable random curve on {space.value} after {max_tries} draws")

