"""Frenet apparatus of space-like and time-like curves in Minkowski 3-space.

Curvature and torsion use the general-parameter formulas

    kappa = |a' x a''| / |<a', a'>|^(3/2),    tau = det(a', a'', a''') / |a' x a''|^2

with the pseudo norm, so the input need not be unit speed.  Space-like curves
must have a space-like principal normal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curve_dsl import Curve, CurveSample
from .errors import (
    DegenerateCurvature,
    LightLikeDarboux,
    UnsupportedNormal,
    WrongCausalType,
)
from .lorentz_core import (
    CausalCharacter,
    MinkVec3,
    causal_character,
    det3,
    euclid_norm,
    mink_cross,
    mink_dot,
    pseudo_norm,
)

DEGENERACY_TOL = 1e-9
LIGHTLIKE_DARBOUX_TOL = 1e-9


@dataclass(frozen=True)
class FrenetApparatus:
    T: MinkVec3
    N: MinkVec3
    B: MinkVec3
    kappa: float
    tau: float
    curve_character: CausalCharacter
    darboux_character: CausalCharacter

    @property
    def darboux(self) -> MinkVec3:
        return darboux_vector(self)


def darboux_vector(app: FrenetApparatus) -> MinkVec3:
    """-tau T + kappa B for space-like curves, tau T + kappa B for time-like ones."""
    if app.curve_character is CausalCharacter.TIME_LIKE:
        return app.T * app.tau + app.B * app.kappa
    return app.T * (-app.tau) + app.B * app.kappa


def _curvature_torsion(sample: CurveSample, speed_sq: float) -> tuple[float, float, MinkVec3]:
    d1, d2, d3 = sample.d1, sample.d2, sample.d3
    cross = mink_cross(d1, d2)
    if euclid_norm(cross) <= DEGENERACY_TOL * euclid_norm(d1) ** 3:
        raise DegenerateCurvature(f"velocity and acceleration are (nearly) parallel: |a' x a''| = {euclid_norm(cross)!r}")
    cross_sq = abs(mink_dot(cross, cross))
    kappa = math.sqrt(cross_sq) / speed_sq**1.5
    if cross_sq == 0.0:
        raise UnsupportedNormal("osculating plane is light-like")
    tau = det3(d1, d2, d3) / cross_sq
    return kappa, tau, cross


def _normal(sample: CurveSample, T: MinkVec3, t_sign: float) -> MinkVec3:
    # component of a'' orthogonal to T, normalised; required space-like
    n = sample.d2 - T * (t_sign * mink_dot(sample.d2, T))
    if causal_character(n, 1e-9) is not CausalCharacter.SPACE_LIKE or euclid_norm(n) == 0.0:
        raise UnsupportedNormal("principal normal is not space-like")
    return n / pseudo_norm(n)


def frenet_spacelike(sample: CurveSample) -> FrenetApparatus:
    d1 = sample.d1
    if causal_character(d1) is not CausalCharacter.SPACE_LIKE or euclid_norm(d1) == 0.0:
        raise WrongCausalType(f"velocity {d1!r} is not space-like")
    speed_sq = mink_dot(d1, d1)
    kappa, tau, _ = _curvature_torsion(sample, speed_sq)
    T = d1 / math.sqrt(speed_sq)
    N = _normal(sample, T, 1.0)
    B = mink_cross(N, T)
    return _finish(T, N, B, kappa, tau, CausalCharacter.SPACE_LIKE)


def frenet_timelike(sample: CurveSample) -> FrenetApparatus:
    d1 = sample.d1
    if causal_character(d1) is not CausalCharacter.TIME_LIKE:
        raise WrongCausalType(f"velocity {d1!r} is not time-like")
    speed_sq = -mink_dot(d1, d1)
    kappa, tau, _ = _curvature_torsion(sample, speed_sq)
    T = d1 / math.sqrt(speed_sq)
    N = _normal(sample, T, -1.0)
    B = mink_cross(T, N)
    return _finish(T, N, B, kappa, tau, CausalCharacter.TIME_LIKE)


def _finish(T, N, B, kappa, tau, character) -> FrenetApparatus:
    app = FrenetApparatus(T, N, B, kappa, tau, character, CausalCharacter.SPACE_LIKE)
    D = darboux_vector(app)
    return FrenetApparatus(T, N, B, kappa, tau, character, causal_character(D))


def frenet(sample: CurveSample) -> FrenetApparatus:
    """Dispatch on the causal character of the velocity."""
    if causal_character(sample.d1) is CausalCharacter.TIME_LIKE:
        return frenet_timelike(sample)
    return frenet_spacelike(sample)


def darboux_indicatrix(app: FrenetApparatus) -> tuple[MinkVec3, str]:
    """Normalised Darboux vector and the sphere it lands on ("S12" or "H2")."""
    D = darboux_vector(app)
    q = mink_dot(D, D)
    if abs(q) <= LIGHTLIKE_DARBOUX_TOL * euclid_norm(D) ** 2:
        raise LightLikeDarboux(f"Darboux vector is light-like: <D, D> = {q!r}")
    return D / math.sqrt(abs(q)), ("S12" if q > 0 else "H2")


def frenet_ode_residual(sample: CurveSample) -> float:
    """Largest component residual of the Frenet equations at one point.

    The frame derivatives are formed analytically from a', a'', a''' (no
    finite differences) and converted to arc-length derivatives, then
    compared with T' = kN, N' = -kT + tB, B' = tN (space-like curve) or
    T' = kN, N' = kT + tB, B' = -tN (time-like curve).
    """
    app = frenet(sample)
    d1, d2, d3 = sample.d1, sample.d2, sample.d3
    timelike = app.curve_character is CausalCharacter.TIME_LIKE
    eps = -1.0 if timelike else 1.0

    sig = math.sqrt(eps * mink_dot(d1, d1))
    sig_v = eps * mink_dot(d1, d2) / sig
    T = d1 / sig
    T_v = (d2 - T * sig_v) / sig
    p = mink_dot(d2, T)
    p_v = mink_dot(d3, T) + mink_dot(d2, T_v)
    n = d2 - T * (eps * p)
    n_v = d3 - T * (eps * p_v) - T_v * (eps * p)
    nu = math.sqrt(mink_dot(n, n))
    nu_v = mink_dot(n, n_v) / nu
    N = n / nu
    N_v = (n_v - N * nu_v) / nu
    if timelike:
        B_v = mink_cross(T_v, N) + mink_cross(T, N_v)
    else:
        B_v = mink_cross(N_v, T) + mink_cross(N, T_v)
    T_s, N_s, B_s = T_v / sig, N_v / sig, B_v / sig

    k, t = app.kappa, app.tau
    if timelike:
        rows = (T_s - app.N * k, N_s - app.T * k - app.B * t, B_s + app.N * t)
    else:
        rows = (T_s - app.N * k, N_s + app.T * k - app.B * t, B_s - app.N * t)
    return max(max(abs(c) for c in r) for r in rows)


def _ratio_spread(curve: Curve, n_grid: int) -> float:
    ratios = []
    for s in curve.samples(curve.grid(n_grid)):
        app = frenet(s)
        ratios.append(app.tau / app.kappa)
    return max(ratios) - min(ratios)


def torsion_curvature_spread(curve: Curve, n_grid: int = 100) -> float:
    """max - min of tau/kappa over a uniform grid."""
    return _ratio_spread(curve, n_grid)


def is_helix(curve: Curve, n_grid: int = 100, tol: float = 1e-9) -> bool:
    return _ratio_spread(curve, n_grid) < tol


def bertrand_condition_residual(curve: Curve, A: float, B: float, n_grid: int = 100) -> float:
    """max |A kappa + B tau - 1| over a uniform grid."""
    worst = 0.0
    for s in curve.samples(curve.grid(n_grid)):
        app = frenet(s)
        worst = max(worst, abs(A * app.kappa + B * app.tau - 1.0))
    return worst
