"""Lorentzian Sabban frames of unit-speed space-like curves on S^2_1 and H^2.

Along f on S^2_1 (or g on H^2) the frame is {f, t = f', s = f x t} with

    S^2_1:  f' = t,  t' = -f - kg s,  s' = -kg t
    H^2:    g' = t,  t' =  g + kg s,  s' = -kg t

and geodesic curvature kg = det(f, t, t').  Also here: evolutes, centres of
geodesic curvature, the height function and contact checks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .curve_dsl import Curve, CurveSample, Space
from .errors import BadParameter, EvoluteUndefined, NotOnSphere, NotUnitSpeed
from .jets import Jet3
from .lorentz_core import MinkVec3, det3, euclid_norm, mink_cross, mink_dot

FRAME_TOL = 1e-9
EVOLUTE_TOL = 1e-9


@dataclass(frozen=True)
class SabbanFrame:
    base: MinkVec3
    t: MinkVec3
    s: MinkVec3
    kappa_g: float
    kappa_g_prime: float
    space: Space


def _space(space) -> Space:
    space = Space(space)
    if space is Space.FREE:
        raise BadParameter("Sabban frames need an S12 or H2 curve")
    return space


def sabban_frame(sample: CurveSample, space: Space | str) -> SabbanFrame:
    space = _space(space)
    f, t = sample.position, sample.d1
    if abs(mink_dot(f, f) - space.sign) > FRAME_TOL:
        raise NotOnSphere(f"<f, f> = {mink_dot(f, f)!r}, expected {space.sign}")
    if abs(mink_dot(t, t) - 1.0) > FRAME_TOL:
        raise NotUnitSpeed(f"<t, t> = {mink_dot(t, t)!r}, expected 1")
    # d/dv det(f, t, t') = det(f, t, t''): the other two terms repeat a row
    return SabbanFrame(f, t, mink_cross(f, t), det3(f, t, sample.d2), det3(f, t, sample.d3), space)


def frame_ode_residual(curve: Curve, space: Space | str, v: float) -> float:
    """Largest component residual of the spherical Frenet-Serret equations at ``v``."""
    space = _space(space)
    sample = curve.sample(v)
    fr = sabban_frame(sample, space)
    f, t, s, kg = fr.base, fr.t, fr.s, fr.kappa_g
    t_prime = sample.d2
    s_prime = mink_cross(f, sample.d2)  # f' x t vanishes since f' = t
    if space is Space.S12:
        t_expected = -f - s * kg
    else:
        t_expected = f + s * kg
    rows = (sample.d1 - t, t_prime - t_expected, s_prime + t * kg)
    return max(max(abs(c) for c in r) for r in rows)


def _root(kg: float) -> float:
    q = kg * kg - 1.0
    if q <= EVOLUTE_TOL:
        raise EvoluteUndefined(f"kappa_g^2 - 1 = {q!r} is not positive enough")
    return math.sqrt(q)


def evolute(frame: SabbanFrame) -> MinkVec3:
    """de Sitter evolute (-kg f - s)/r, or hyperbolic evolute (kg g + s)/r, r = sqrt(kg^2 - 1)."""
    r = _root(frame.kappa_g)
    if frame.space is Space.S12:
        return (frame.base * (-frame.kappa_g) - frame.s) / r
    return (frame.base * frame.kappa_g + frame.s) / r


def evolute_derivative(frame: SabbanFrame) -> MinkVec3:
    """Closed-form parameter derivative of :func:`evolute`.

    With P = (kg f + s)/r one has P' = -kg' (f + kg s) / r^3; the de Sitter
    evolute is -P and the hyperbolic one is P.
    """
    r = _root(frame.kappa_g)
    p_prime = (frame.base + frame.s * frame.kappa_g) * (-frame.kappa_g_prime / r**3)
    return -p_prime if frame.space is Space.S12 else p_prime


def evolute_derivative_by_jets(sample: CurveSample, space: Space | str) -> MinkVec3:
    """Derivative of the evolute obtained by pushing first-order jets through its formula.

    Independent of :func:`evolute_derivative`: the only inputs are the exact
    derivatives f' = t, s' = f x t', kg' = det(f, t, t'').
    """
    fr = sabban_frame(sample, space)
    s_prime = mink_cross(fr.base, sample.d2)
    _root(fr.kappa_g)
    kg = Jet3(fr.kappa_g, fr.kappa_g_prime)
    root = (kg * kg - 1.0) ** 0.5
    sign = -1.0 if fr.space is Space.S12 else 1.0
    comps = []
    for f_i, t_i, s_i, sp_i in zip(fr.base, fr.t, fr.s, s_prime):
        num = kg * Jet3(f_i, t_i) + Jet3(s_i, sp_i)
        comps.append((num / root * sign).c1)
    return MinkVec3(*comps)


def height_function(curve: Curve, u: MinkVec3, v: float) -> tuple[float, float, float]:
    """h(v) = <f(v), u> and its first two derivatives (extended to H^2 curves with g in place of f)."""
    sample = curve.sample(v)
    return (mink_dot(sample.position, u), mink_dot(sample.d1, u), mink_dot(sample.d2, u))


class CriticalPoint(enum.Enum):
    NOT_CRITICAL = "NotCritical"
    CRITICAL = "Critical"
    DEGENERATE_CRITICAL = "DegenerateCritical"


class ConsistencyError(AssertionError):
    """A classification disagreed with its geometric characterisation."""


def critical_point_classification(curve: Curve, u: MinkVec3, v: float, tol: float = 1e-9) -> CriticalPoint:
    """Classify ``v`` as a critical point of the height function in direction ``u``.

    Critical points are cross-checked against u lying in span{f, s}, and
    degenerate ones against u = +-(kg f + s)/sqrt(kg^2 - 1); a disagreement
    raises :class:`ConsistencyError`.
    """
    space = _space(curve.space)
    if abs(mink_dot(u, u) - space.sign) > tol:
        raise BadParameter(f"direction u must lie on {space.value}: <u, u> = {mink_dot(u, u)!r}")
    sample = curve.sample(v)
    h1, h2 = mink_dot(sample.d1, u), mink_dot(sample.d2, u)
    if abs(h1) >= tol:
        return CriticalPoint.NOT_CRITICAL
    fr = sabban_frame(sample, space)
    off_span = euclid_norm(fr.t * mink_dot(u, fr.t))
    if off_span >= 10 * tol:
        raise ConsistencyError(f"critical point but u is {off_span!r} away from span(f, s)")
    if abs(h2) >= tol:
        return CriticalPoint.CRITICAL
    if fr.kappa_g**2 - 1.0 > EVOLUTE_TOL:
        centre = (fr.base * fr.kappa_g + fr.s) / _root(fr.kappa_g)
        gap = min(euclid_norm(u - centre), euclid_norm(u + centre))
        if gap >= 10 * tol:
            raise ConsistencyError(f"degenerate critical point but u is {gap!r} from the curvature centres")
    return CriticalPoint.DEGENERATE_CRITICAL


def curvature_center(frame: SabbanFrame) -> tuple[MinkVec3, MinkVec3, float]:
    """Centres u_+, u_- of geodesic curvature and the pseudo-radius r0.

    On S^2_1: u_+- = +-(kg f + s)/r with r0 = kg/r, so <f, u_+> = r0.
    On H^2:   u_+ = h_g (the hyperbolic evolute), u_- = -h_g, r0 = -kg/r,
    again with <g, u_+> = r0.
    """
    r = _root(frame.kappa_g)
    if frame.space is Space.S12:
        u_plus = (frame.base * frame.kappa_g + frame.s) / r
        return u_plus, -u_plus, frame.kappa_g / r
    u_plus = evolute(frame)
    return u_plus, -u_plus, -frame.kappa_g / r


def contact_function(curve: Curve, v0: float, v: float | None = None) -> tuple[float, float, float, float]:
    """psi = <base(v), u0> - r and its first three derivatives at ``v``.

    u0 is the evolute at ``v0`` and r = <base(v0), u0>: on H^2 this is the
    pseudo-radius r0; on S^2_1 the evolute is the centre u_-, whose radius
    is -r0.
    """
    space = _space(curve.space)
    fr = sabban_frame(curve.sample(v0), space)
    u0 = evolute(fr)
    _, _, r0 = curvature_center(fr)
    r = r0 if space is Space.H2 else -r0
    s = curve.sample(v0 if v is None else v)
    return (
        mink_dot(s.position, u0) - r,
        mink_dot(s.d1, u0),
        mink_dot(s.d2, u0),
        mink_dot(s.d3, u0),
    )


def contact_order_check(curve: Curve, v0: float, tol: float = 1e-9) -> bool:
    """True when the curve and its pseudo-circle of geodesic curvature at ``v0``
    agree to at least three points (psi, psi', psi'' all below ``tol``)."""
    psi = contact_function(curve, v0)
    return all(abs(x) < tol for x in psi[:3])
