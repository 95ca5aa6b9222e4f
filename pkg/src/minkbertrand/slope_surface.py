"""Space-like constant slope surfaces over curves on S^2_1 and H^2.

    space-like cone:  x(u, v) = u cosh(theta) (cosh(xi) f + sinh(xi) f x f'),   xi = tanh(theta) ln u
    time-like cone:   x(u, v) = u sinh(theta) (cosh(xi) g + sinh(xi) g x g'),   xi = coth(theta) ln u

For fixed u the v-curve is the velocity of a Bertrand curve with a = u cosh(theta)
cosh(xi) (resp. u sinh(theta) cosh(xi)), which the checks below exploit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .bertrand import BertrandConfig, _derivatives, bertrand_identity_report
from .curve_dsl import Curve, CurveSample, Space, linspace
from .errors import BadCone, BadParameter, DegenerateNormal, ThetaZero
from .jets import Jet3, jet_apply, jet_variable
from .lorentz_core import MinkVec3, euclid_norm, mink_cross, mink_dot, pseudo_norm
from .quadrature import integrate_vector
from .spherical_frames import sabban_frame

NORMAL_TOL = 1e-12


class Cone(enum.Enum):
    SPACE_LIKE_CONE = "SpaceLikeCone"
    TIME_LIKE_CONE = "TimeLikeCone"

    @property
    def space(self) -> Space:
        return Space.S12 if self is Cone.SPACE_LIKE_CONE else Space.H2

    @classmethod
    def for_space(cls, space) -> Cone:
        space = Space(space)
        if space is Space.FREE:
            raise BadCone("constant slope surfaces need a curve on S12 or H2")
        return cls.SPACE_LIKE_CONE if space is Space.S12 else cls.TIME_LIKE_CONE


@dataclass(frozen=True)
class SurfaceConfig:
    theta: float
    cone: Cone
    u_range: tuple[float, float]
    v_range: tuple[float, float]
    nu: int = 2
    nv: int = 2

    def __post_init__(self):
        if self.theta == 0:
            raise ThetaZero("theta must be non-zero")
        if not math.isfinite(self.theta):
            raise BadParameter(f"theta must be finite, got {self.theta!r}")
        object.__setattr__(self, "cone", Cone(self.cone))
        u0, u1 = self.u_range
        if not (0 < u0 <= u1 and math.isfinite(u1)):
            raise BadParameter(f"u range must satisfy 0 < u_min <= u_max, got [{u0!r}, {u1!r}]")
        v0, v1 = self.v_range
        if not (math.isfinite(v0) and math.isfinite(v1) and v0 <= v1):
            raise BadParameter(f"v range must satisfy v_min <= v_max, got [{v0!r}, {v1!r}]")
        if self.nu < 2 or self.nv < 2:
            raise BadParameter(f"mesh needs nu, nv >= 2, got {self.nu} x {self.nv}")


def _check(curve: Curve, cone: Cone, theta: float) -> None:
    if theta == 0:
        raise ThetaZero("theta must be non-zero")
    if Space(curve.space) is not cone.space:
        raise BadCone(f"{cone.value} needs a curve on {cone.space.value}, got {curve.space.value}")


def _coefficients(u, theta: float, cone: Cone):
    """p(u), q(u) with x = p f + q f x f'; accepts floats or jets in u."""
    if cone is Cone.SPACE_LIKE_CONE:
        k, slope = math.cosh(theta), math.tanh(theta)
    else:
        k, slope = math.sinh(theta), 1.0 / math.tanh(theta)
    if isinstance(u, Jet3):
        xi = jet_apply("ln", u) * slope
        return u * k * jet_apply("cosh", xi), u * k * jet_apply("sinh", xi)
    if not u > 0:
        raise BadParameter(f"u must be positive, got {u!r}")
    xi = slope * math.log(u)
    return u * k * math.cosh(xi), u * k * math.sinh(xi)


def _point(sample: CurveSample, p: float, q: float) -> MinkVec3:
    return sample.position * p + mink_cross(sample.position, sample.d1) * q


def surface_point(curve: Curve, cfg: SurfaceConfig, u: float, v: float) -> MinkVec3:
    _check(curve, cfg.cone, cfg.theta)
    p, q = _coefficients(u, cfg.theta, cfg.cone)
    return _point(curve.sample(v), p, q)


def surface_jet(curve: Curve, cfg: SurfaceConfig, u: float, v: float) -> tuple[MinkVec3, MinkVec3, MinkVec3]:
    """x, x_u, x_v at one point; x_u through a jet in u, x_v from the curve's exact derivatives."""
    _check(curve, cfg.cone, cfg.theta)
    if not u > 0:
        raise BadParameter(f"u must be positive, got {u!r}")
    p, q = _coefficients(jet_variable(u), cfg.theta, cfg.cone)
    s = curve.sample(v)
    fxf1 = mink_cross(s.position, s.d1)
    x = s.position * p.c0 + fxf1 * q.c0
    x_u = s.position * p.c1 + fxf1 * q.c1
    # (f x f')' = f x f''
    x_v = s.d1 * p.c0 + mink_cross(s.position, s.d2) * q.c0
    return x, x_u, x_v


def unit_normal(x_u: MinkVec3, x_v: MinkVec3) -> MinkVec3:
    n = mink_cross(x_u, x_v)
    if euclid_norm(n) < NORMAL_TOL or abs(mink_dot(n, n)) < NORMAL_TOL**2:
        raise DegenerateNormal(f"x_u x x_v = {n!r} is degenerate")
    return n / pseudo_norm(n)


@dataclass(frozen=True)
class SurfaceMesh:
    """Row-major samples: index r * nv + c holds (u_r, v_c)."""

    vertices: tuple[MinkVec3, ...]
    normals: tuple[MinkVec3, ...]
    nu: int
    nv: int
    us: tuple[float, ...]
    vs: tuple[float, ...]

    def vertex(self, r: int, c: int) -> MinkVec3:
        return self.vertices[r * self.nv + c]


def generate_mesh(curve: Curve, cfg: SurfaceConfig) -> SurfaceMesh:
    _check(curve, cfg.cone, cfg.theta)
    us = linspace(*cfg.u_range, cfg.nu)
    vs = linspace(*cfg.v_range, cfg.nv)
    samples = curve.samples(vs)
    coeffs = [_coefficients(jet_variable(u), cfg.theta, cfg.cone) for u in us]
    vertices, normals = [], []
    for p, q in coeffs:
        for s in samples:
            fxf1 = mink_cross(s.position, s.d1)
            vertices.append(s.position * p.c0 + fxf1 * q.c0)
            x_u = s.position * p.c1 + fxf1 * q.c1
            x_v = s.d1 * p.c0 + mink_cross(s.position, s.d2) * q.c0
            normals.append(unit_normal(x_u, x_v))
    return SurfaceMesh(tuple(vertices), tuple(normals), cfg.nu, cfg.nv, tuple(us), tuple(vs))


def slope_values(curve: Curve, cfg: SurfaceConfig) -> list[float]:
    """<x, n> / (|x| |n|) on the mesh grid, with pseudo norms."""
    mesh = generate_mesh(curve, cfg)
    return [mink_dot(x, n) / (pseudo_norm(x) * pseudo_norm(n)) for x, n in zip(mesh.vertices, mesh.normals)]


def constant_slope_residual(curve: Curve, cfg: SurfaceConfig) -> float:
    """max |q - mean(q)| of the slope values; zero for a constant slope surface."""
    q = slope_values(curve, cfg)
    mean = math.fsum(q) / len(q)
    return max(abs(x - mean) for x in q)


def cone_residual(curve: Curve, cfg: SurfaceConfig) -> float:
    """max |<x, x> - (+-u^2 cosh^2 or -u^2 sinh^2 theta)| on the mesh grid."""
    mesh = generate_mesh(curve, cfg)
    if cfg.cone is Cone.SPACE_LIKE_CONE:
        target = lambda u: (u * math.cosh(cfg.theta)) ** 2  # noqa: E731
    else:
        target = lambda u: -((u * math.sinh(cfg.theta)) ** 2)  # noqa: E731
    worst = 0.0
    for r, u in enumerate(mesh.us):
        for c in range(mesh.nv):
            x = mesh.vertex(r, c)
            worst = max(worst, abs(mink_dot(x, x) - target(u)))
    return worst


def induced_metric_minimum(curve: Curve, cfg: SurfaceConfig) -> tuple[float, float]:
    """(min <x_u, x_u>, min Gram determinant) over the grid; both positive on a space-like surface."""
    _check(curve, cfg.cone, cfg.theta)
    lo_e = lo_g = math.inf
    for u in linspace(*cfg.u_range, cfg.nu):
        for v in linspace(*cfg.v_range, cfg.nv):
            _, xu, xv = surface_jet(curve, cfg, u, v)
            e, f, g = mink_dot(xu, xu), mink_dot(xu, xv), mink_dot(xv, xv)
            lo_e = min(lo_e, e)
            lo_g = min(lo_g, e * g - f * f)
    return lo_e, lo_g


def _fixed_u(curve: Curve, u: float, theta: float) -> tuple[SurfaceConfig, BertrandConfig]:
    cone = Cone.for_space(curve.space)
    _check(curve, cone, theta)
    cfg = SurfaceConfig(theta, cone, (u, u), tuple(curve.domain))
    return cfg, BertrandConfig.from_surface(u, theta, cone.space)


def derivative_on_surface_check(curve: Curve, u: float, theta: float, n_grid: int = 100) -> float:
    """max |gamma'(v) - x(u, v)| (Euclidean) for the Bertrand curve with the constants of the u-level curve."""
    cfg, bcfg = _fixed_u(curve, u, theta)
    p, q = _coefficients(u, theta, cfg.cone)
    worst = 0.0
    for s in curve.samples(curve.grid(n_grid)):
        d1, _, _ = _derivatives(sabban_frame(s, bcfg.space), bcfg)
        worst = max(worst, euclid_norm(d1 - _point(s, p, q)))
    return worst


class SurfaceIntegralCurve(Curve):
    """v -> int_0^v x(u, t) dt at fixed u; derivatives straight from the surface."""

    space = Space.FREE

    def __init__(self, curve: Curve, u: float, theta: float, quad_tol: float = 1e-10):
        self.cfg, self.bertrand_cfg = _fixed_u(curve, u, theta)
        lo, hi = curve.domain
        if not lo <= 0.0 <= hi:
            raise BadParameter(f"curve domain [{lo!r}, {hi!r}] must contain the base point 0")
        self.curve = curve
        self.domain = curve.domain
        self.quad_tol = quad_tol
        self.p, self.q = _coefficients(u, theta, self.cfg.cone)

    def _derivs(self, s: CurveSample) -> tuple[MinkVec3, MinkVec3, MinkVec3]:
        f, f1, f2, f3 = s.position, s.d1, s.d2, s.d3
        p, q = self.p, self.q
        x = f * p + mink_cross(f, f1) * q
        x_v = f1 * p + mink_cross(f, f2) * q
        x_vv = f2 * p + (mink_cross(f1, f2) + mink_cross(f, f3)) * q
        return x, x_v, x_vv

    def _integrand(self, t: float) -> tuple[float, float, float]:
        s = self.curve.sample(t)
        return tuple(_point(s, self.p, self.q))

    def sample(self, v: float) -> CurveSample:
        self._check_in_domain(v)
        pos = MinkVec3(*integrate_vector(self._integrand, 0.0, v, self.quad_tol))
        return CurveSample(pos, *self._derivs(self.curve.sample(v)))

    def samples(self, vs: Sequence[float]) -> list[CurveSample]:
        # cumulative integration across the sorted grid, as for Bertrand curves
        ordered = sorted(set(float(v) for v in vs))
        for v in ordered:
            self._check_in_domain(v)
        pos = {0.0: (0.0, 0.0, 0.0)}
        for side in ([v for v in ordered if v >= 0], [v for v in ordered if v < 0][::-1]):
            prev, acc = 0.0, (0.0, 0.0, 0.0)
            for v in side:
                if v != prev:
                    inc = integrate_vector(self._integrand, prev, v, self.quad_tol)
                    acc = tuple(a + b for a, b in zip(acc, inc))
                pos[v] = acc
                prev = v
        return [CurveSample(MinkVec3(*pos[float(v)]), *self._derivs(self.curve.sample(v))) for v in vs]


def integral_curve_bertrand_check(curve: Curve, u: float, theta: float, n_grid: int = 100) -> float:
    """Bertrand identity residual max |a(eps kappa + tanh(xi) tau) - 1| of the integrated u-level curve."""
    target = SurfaceIntegralCurve(curve, u, theta)
    report = bertrand_identity_report(target, curve, target.bertrand_cfg, curve.grid(n_grid))
    return report.identity
