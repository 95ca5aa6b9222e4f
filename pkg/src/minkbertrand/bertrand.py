"""Bertrand curves generated by unit-speed space-like curves on S^2_1 or H^2.

For a generator f with Sabban frame {f, t, s}, constants a != 0 and xi,

    gamma(v) = a * int_0^v f dt + a tanh(xi) * int_0^v f x f' dt

is a space-like (f on S^2_1) or time-like (f on H^2) Bertrand curve whose
curvature and torsion are

    kappa = eps cosh^2(xi) (1 - tanh(xi) kg) / a,   tau = cosh^2(xi) (kg - tanh(xi)) / a,

so that a (eps kappa + tanh(xi) tau) = 1.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Sequence

from .curve_dsl import Curve, CurveSample, Space
from .errors import BadParameter, DegenerateBertrandPoint, ThetaZero
from .frenet import darboux_indicatrix, frenet
from .lorentz_core import MinkVec3, euclid_dist, mink_cross
from .quadrature import integrate_vector
from .spherical_frames import SabbanFrame, evolute, sabban_frame

QUAD_TOL = 1e-10
FACTOR_TOL = 1e-6


@dataclass(frozen=True)
class BertrandConfig:
    a: float
    xi: float
    space: Space
    epsilon: int = 1

    def __post_init__(self):
        if self.a == 0 or not math.isfinite(self.a):
            raise BadParameter(f"Bertrand scale a must be finite and non-zero, got {self.a!r}")
        if not math.isfinite(self.xi):
            raise BadParameter(f"xi must be finite, got {self.xi!r}")
        if self.epsilon not in (1, -1):
            raise BadParameter(f"epsilon must be +1 or -1, got {self.epsilon!r}")
        object.__setattr__(self, "space", Space(self.space))
        if self.space is Space.FREE:
            raise BadParameter("the generator of a Bertrand curve lives on S12 or H2")

    @classmethod
    def from_surface(cls, u: float, theta: float, space: Space | str) -> BertrandConfig:
        """Constants of the u-level curve of a constant slope surface.

        S12: xi = tanh(theta) ln u, a = u cosh(theta) cosh(xi);
        H2:  xi = coth(theta) ln u, a = u sinh(theta) cosh(xi).
        """
        space = Space(space)
        if theta == 0:
            raise ThetaZero("theta must be non-zero")
        if not u > 0:
            raise BadParameter(f"u must be positive, got {u!r}")
        if space is Space.S12:
            xi = math.tanh(theta) * math.log(u)
            a = u * math.cosh(theta) * math.cosh(xi)
        elif space is Space.H2:
            xi = math.log(u) / math.tanh(theta)
            a = u * math.sinh(theta) * math.cosh(xi)
        else:
            raise BadParameter("the generator of a Bertrand curve lives on S12 or H2")
        return cls(a, xi, space)

    @property
    def A(self) -> float:
        return self.a

    @property
    def B(self) -> float:
        return self.a * math.tanh(self.xi)


def _check_generator(curve: Curve, cfg: BertrandConfig) -> None:
    if Space(curve.space) is not cfg.space:
        raise BadParameter(f"generator lives on {curve.space.value}, configuration expects {cfg.space.value}")
    lo, hi = curve.domain
    if not lo <= 0.0 <= hi:
        raise BadParameter(f"generator domain [{lo!r}, {hi!r}] must contain the base point 0")


def bertrand_velocity(sample: CurveSample, cfg: BertrandConfig) -> MinkVec3:
    """gamma' = a (f + tanh(xi) f x f')."""
    return (sample.position + mink_cross(sample.position, sample.d1) * math.tanh(cfg.xi)) * cfg.a


def _derivatives(frame: SabbanFrame, cfg: BertrandConfig) -> tuple[MinkVec3, MinkVec3, MinkVec3]:
    a, th = cfg.a, math.tanh(cfg.xi)
    f, t, s, kg, kgp = frame.base, frame.t, frame.s, frame.kappa_g, frame.kappa_g_prime
    factor = 1.0 - th * kg
    d1 = (f + s * th) * a
    d2 = t * (a * factor)
    # t' = -f - kg s on S12 and t' = f + kg s on H2
    sign = -1.0 if frame.space is Space.S12 else 1.0
    d3 = f * (sign * a * factor) - t * (a * th * kgp) + s * (sign * a * kg * factor)
    return d1, d2, d3


def bertrand_point(curve: Curve, cfg: BertrandConfig, v: float, quad_tol: float = QUAD_TOL) -> MinkVec3:
    """gamma(v) by adaptive quadrature from the base point 0."""
    _check_generator(curve, cfg)
    curve._check_in_domain(v)
    return MinkVec3(*integrate_vector(lambda x: tuple(bertrand_velocity(curve.sample(x), cfg)), 0.0, v, quad_tol))


def bertrand_points(curve: Curve, cfg: BertrandConfig, vs: Sequence[float], quad_tol: float = QUAD_TOL) -> list[MinkVec3]:
    """gamma at many parameters, integrating once across the sorted grid.

    Each gap between consecutive sorted parameters (and the base point 0)
    is integrated to ``quad_tol``; the error grows at most linearly in the
    number of gaps.
    """
    _check_generator(curve, cfg)
    for v in vs:
        curve._check_in_domain(v)
    fn = lambda x: tuple(bertrand_velocity(curve.sample(x), cfg))  # noqa: E731
    ordered = sorted(set(float(v) for v in vs))
    split = bisect.bisect_left(ordered, 0.0)
    result = {0.0: (0.0, 0.0, 0.0)}
    for side in (ordered[split:], ordered[:split][::-1]):
        prev, acc = 0.0, (0.0, 0.0, 0.0)
        for v in side:
            if v != prev:
                inc = integrate_vector(fn, prev, v, quad_tol)
                acc = tuple(p + q for p, q in zip(acc, inc))
            result[v] = acc
            prev = v
    return [MinkVec3(*result[float(v)]) for v in vs]


def bertrand_derivatives(curve: Curve, cfg: BertrandConfig, v: float, quad_tol: float = QUAD_TOL) -> CurveSample:
    """gamma(v) by quadrature and gamma', gamma'', gamma''' in closed form from the Sabban frame."""
    frame = sabban_frame(curve.sample(v), cfg.space)
    return CurveSample(bertrand_point(curve, cfg, v, quad_tol), *_derivatives(frame, cfg))


class BertrandCurve(Curve):
    """The Bertrand curve of a generator, sampled like any other curve."""

    space = Space.FREE

    def __init__(self, generator: Curve, cfg: BertrandConfig, quad_tol: float = QUAD_TOL):
        _check_generator(generator, cfg)
        self.generator = generator
        self.cfg = cfg
        self.quad_tol = quad_tol
        self.domain = generator.domain

    def sample(self, v: float) -> CurveSample:
        return bertrand_derivatives(self.generator, self.cfg, v, self.quad_tol)

    def samples(self, vs: Sequence[float]) -> list[CurveSample]:
        points = bertrand_points(self.generator, self.cfg, vs, self.quad_tol)
        out = []
        for v, p in zip(vs, points):
            frame = sabban_frame(self.generator.sample(v), self.cfg.space)
            out.append(CurveSample(p, *_derivatives(frame, self.cfg)))
        return out


def predicted_kappa_tau(kappa_g: float, cfg: BertrandConfig) -> tuple[float, float]:
    c2 = math.cosh(cfg.xi) ** 2
    th = math.tanh(cfg.xi)
    return cfg.epsilon * c2 * (1.0 - th * kappa_g) / cfg.a, c2 * (kappa_g - th) / cfg.a


def point_epsilon(kappa_g: float, cfg: BertrandConfig) -> int:
    """The sign making the predicted curvature non-negative: sign(a) sign(1 - tanh(xi) kg)."""
    factor = 1.0 - math.tanh(cfg.xi) * kappa_g
    return (1 if cfg.a > 0 else -1) * (1 if factor > 0 else -1)


def _checked_frames(generator: Curve, cfg: BertrandConfig, vs: Sequence[float]) -> list[SabbanFrame]:
    th = math.tanh(cfg.xi)
    frames = [sabban_frame(s, cfg.space) for s in generator.samples(vs)]
    first_sign = None
    for v, fr in zip(vs, frames):
        factor = 1.0 - th * fr.kappa_g
        if abs(factor) <= FACTOR_TOL:
            raise DegenerateBertrandPoint(f"1 - tanh(xi) kappa_g = {factor!r} vanishes", v)
        sign = factor > 0
        if first_sign is None:
            first_sign = sign
        elif sign != first_sign:
            raise DegenerateBertrandPoint("1 - tanh(xi) kappa_g changes sign", v)
    return frames


@dataclass(frozen=True)
class BertrandReport:
    """Maxima over a grid of the curvature/torsion discrepancies and the Bertrand identity."""

    kappa_abs: float
    tau_abs: float
    kappa_rel: float
    tau_rel: float
    identity: float
    n_points: int

    @property
    def r1(self) -> float:
        return max(self.kappa_abs, self.tau_abs)

    @property
    def r1_rel(self) -> float:
        return max(self.kappa_rel, self.tau_rel)

    @property
    def r2(self) -> float:
        return self.identity


def bertrand_identity_report(target: Curve, generator: Curve, cfg: BertrandConfig, vs: Sequence[float]) -> BertrandReport:
    """Compare the numerical Frenet curvature/torsion of ``target`` with the
    predicted values from the generator's geodesic curvature.

    Relative errors are taken against max(|predicted|, cosh^2(xi)/|a|) so that
    zeros of the torsion do not blow them up.
    """
    frames = _checked_frames(generator, cfg, vs)
    th = math.tanh(cfg.xi)
    scale = math.cosh(cfg.xi) ** 2 / abs(cfg.a)
    ka = ta = kr = tr = ident = 0.0
    for fr, s in zip(frames, target.samples(vs)):
        eps = point_epsilon(fr.kappa_g, cfg)
        kp, tp = predicted_kappa_tau(fr.kappa_g, BertrandConfig(cfg.a, cfg.xi, cfg.space, eps))
        app = frenet(s)
        dk, dt = abs(app.kappa - kp), abs(app.tau - tp)
        ka, ta = max(ka, dk), max(ta, dt)
        kr = max(kr, dk / max(abs(kp), scale))
        tr = max(tr, dt / max(abs(tp), scale))
        ident = max(ident, abs(cfg.a * (eps * app.kappa + th * app.tau) - 1.0))
    return BertrandReport(ka, ta, kr, tr, ident, len(vs))


def verify_bertrand(curve: Curve, cfg: BertrandConfig, n_grid: int = 100, quad_tol: float = QUAD_TOL) -> BertrandReport:
    return bertrand_identity_report(BertrandCurve(curve, cfg, quad_tol), curve, cfg, curve.grid(n_grid))


def darboux_equals_evolute(curve: Curve, cfg: BertrandConfig, n_grid: int = 100, quad_tol: float = QUAD_TOL) -> float:
    """Max Euclidean distance between the Darboux indicatrix of the Bertrand
    curve and the evolute of its generator.

    The indicatrix is defined up to the orientation of the parameter; the
    sign is fixed at the first grid point and then held.
    """
    vs = curve.grid(n_grid)
    bc = BertrandCurve(curve, cfg, quad_tol)
    sign = None
    worst = 0.0
    for g, b in zip(curve.samples(vs), bc.samples(vs)):
        ev = evolute(sabban_frame(g, cfg.space))
        ind, _ = darboux_indicatrix(frenet(b))
        if sign is None:
            sign = 1.0 if euclid_dist(ind, ev) <= euclid_dist(ind, -ev) else -1.0
        worst = max(worst, euclid_dist(ind, ev * sign))
    return worst


def helix_spreads(curve: Curve, cfg: BertrandConfig, n_grid: int = 100, quad_tol: float = QUAD_TOL) -> tuple[float, float]:
    """(max - min of kappa_g on the generator, max - min of tau/kappa on the Bertrand curve)."""
    vs = curve.grid(n_grid)
    frames = _checked_frames(curve, cfg, vs)
    kgs = [fr.kappa_g for fr in frames]
    ratios = []
    for s in BertrandCurve(curve, cfg, quad_tol).samples(vs):
        app = frenet(s)
        ratios.append(app.tau / app.kappa)
    return max(kgs) - min(kgs), max(ratios) - min(ratios)


def helix_correspondence(curve: Curve, cfg: BertrandConfig, n_grid: int = 100, tol: float = 1e-9) -> tuple[bool, bool]:
    """(generator is a pseudo-circle, Bertrand curve is a helix), both judged by spread < ``tol``."""
    kg_spread, ratio_spread = helix_spreads(curve, cfg, n_grid)
    return kg_spread < tol, ratio_spread < tol


__all__ = [
    "BertrandConfig",
    "BertrandCurve",
    "BertrandReport",
    "bertrand_derivatives",
    "bertrand_identity_report",
    "bertrand_point",
    "bertrand_points",
    "bertrand_velocity",
    "darboux_equals_evolute",
    "helix_correspondence",
    "helix_spreads",
    "point_epsilon",
    "predicted_kappa_tau",
    "verify_bertrand",
]
