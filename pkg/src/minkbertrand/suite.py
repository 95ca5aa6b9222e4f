"""Verification suites: the worked examples, and checks on an arbitrary generator."""

from __future__ import annotations

import math

import numpy as np

from .bertrand import (
    BertrandConfig,
    BertrandCurve,
    bertrand_points,
    darboux_equals_evolute,
    helix_spreads,
    verify_bertrand,
)
from .curve_dsl import Curve, Space, preset, random_spherical_curve, validate_on_sphere, validate_unit_speed
from .errors import EvoluteUndefined, GeometryError
from .frenet import frenet_ode_residual
from .io_export import VerificationReport
from .lorentz_core import MinkVec3, euclid_dist, mink_dot
from .slope_surface import (
    Cone,
    SurfaceConfig,
    SurfaceIntegralCurve,
    cone_residual,
    constant_slope_residual,
    derivative_on_surface_check,
    integral_curve_bertrand_check,
)
from .spherical_frames import contact_function, curvature_center, evolute, frame_ode_residual, sabban_frame

THETA = 1.5
U = math.e
SEED = 20240531


def example_336_closed_form(v: float, u: float = U, theta: float = THETA) -> MinkVec3:
    xi = math.tanh(theta) * math.log(u)
    k = u * math.cosh(theta)
    return MinkVec3(-k * math.cosh(xi) * (math.cos(v) - 1), k * math.cosh(xi) * math.sin(v), k * math.sinh(xi) * v)


def example_46_closed_form(v: float, u: float = U, theta: float = THETA) -> MinkVec3:
    xi = math.log(u) / math.tanh(theta)
    k = u * math.sinh(theta)
    return MinkVec3(k * math.cosh(xi) * (math.cosh(v) - 1), k * math.sinh(xi) * v, k * math.cosh(xi) * math.sinh(v))


CLOSED_FORMS = {"example_336": example_336_closed_form, "example_46": example_46_closed_form}


def closed_form_error(name: str, n: int = 200, domain=None) -> float:
    """Max componentwise gap between the integrated example Bertrand curve and its closed form."""
    curve = preset(name)
    lo, hi = domain or ((0.0, 2 * math.pi) if name == "example_336" else (0.0, 2.0))
    vs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    cfg = BertrandConfig.from_surface(U, THETA, curve.space)
    pts = bertrand_points(curve, cfg, vs)
    exact = CLOSED_FORMS[name]
    return max(max(abs(p - q) for p, q in zip(pt, exact(v))) for v, pt in zip(vs, pts))


def _frame_residual(curve: Curve, n: int) -> float:
    return max(frame_ode_residual(curve, curve.space, v) for v in curve.grid(n))


def _frenet_residual(curve: Curve, n: int) -> float:
    return max(frenet_ode_residual(s) for s in curve.samples(curve.grid(n)))


def _kg_range(curve: Curve, n: int) -> tuple[float, float]:
    kgs = [sabban_frame(s, curve.space).kappa_g for s in curve.samples(curve.grid(n))]
    return min(kgs), max(kgs)


def _contact_residual(curve: Curve, n: int) -> float:
    worst = 0.0
    for v in curve.grid(n):
        worst = max(worst, max(abs(x) for x in contact_function(curve, v)[:3]))
    return worst


def curve_checks(
    report: VerificationReport,
    label: str,
    curve: Curve,
    cfg: BertrandConfig,
    n_grid: int = 100,
    tol: float = 1e-7,
    theta: float | None = None,
    u: float | None = None,
) -> VerificationReport:
    """Every applicable check on one generator; checks that do not apply are skipped."""
    add = report.add
    add(f"{label}.on_sphere", validate_on_sphere(curve, n_grid), 1e-9)
    add(f"{label}.unit_speed", validate_unit_speed(curve, n_grid), 1e-9)
    add(f"{label}.sabban_ode", _frame_residual(curve, n_grid), tol)
    bert = verify_bertrand(curve, cfg, n_grid)
    add(f"{label}.bertrand_identity", bert.r2, tol, f"a={cfg.a!r} xi={cfg.xi!r}")
    add(f"{label}.kappa_tau_relative", bert.r1_rel, tol)
    add(f"{label}.bertrand_frenet_ode", _frenet_residual(BertrandCurve(curve, cfg), n_grid), tol)
    kg_spread, ratio_spread = helix_spreads(curve, cfg, n_grid)
    pc, helix = kg_spread < 1e-9, ratio_spread < 1e-9
    add(f"{label}.helix_iff_pseudo_circle", float(pc != helix), 0.0, f"kg_spread={kg_spread!r} ratio_spread={ratio_spread!r}")
    lo, hi = _kg_range(curve, n_grid)
    if min(lo * lo, hi * hi) - 1.0 > 1e-9 and lo * hi > 0:
        add(f"{label}.darboux_is_evolute", darboux_equals_evolute(curve, cfg, n_grid), tol)
        add(f"{label}.three_point_contact", _contact_residual(curve, min(n_grid, 10)), 1e-9)
    if theta is not None and u is not None:
        lo_v, hi_v = curve.domain
        scfg = SurfaceConfig(theta, Cone.for_space(curve.space), (0.5 * u, 2.0 * u), (lo_v, hi_v), 50, 50)
        add(f"{label}.constant_slope", constant_slope_residual(curve, scfg), 1e-8)
        add(f"{label}.cone_membership", cone_residual(curve, scfg), 1e-9)
        add(f"{label}.derivative_on_surface", derivative_on_surface_check(curve, u, theta, n_grid), 1e-9)
        add(f"{label}.integral_curve_bertrand", integral_curve_bertrand_check(curve, u, theta, n_grid), tol)
    return report


def example_suite(n_grid: int = 100) -> VerificationReport:
    """The worked examples, the pseudo-circles and two seeded random generators."""
    report = VerificationReport()
    add = report.add

    for name in ("example_336", "example_46"):
        curve = preset(name)
        cfg = BertrandConfig.from_surface(U, THETA, curve.space)
        add(f"{name}.closed_form", closed_form_error(name), 1e-8, "200 points")
        curve_checks(report, name, curve, cfg, n_grid, theta=THETA, u=U)
        integral = SurfaceIntegralCurve(curve, U, THETA)
        exact = CLOSED_FORMS[name]
        vs = curve.grid(n_grid)
        gap = max(euclid_dist(s.position, exact(v)) for v, s in zip(vs, integral.samples(vs)))
        add(f"{name}.integral_curve_closed_form", gap, 1e-8)

    root2 = math.sqrt(2.0)
    for name, expected, radius in (
        ("pseudo_circle_s12", MinkVec3(-1.0, 0.0, 0.0), root2),
        ("pseudo_circle_h2", MinkVec3(0.0, 0.0, 1.0), -root2),
    ):
        curve = preset(name, [root2])
        cfg = BertrandConfig.from_surface(U, THETA, curve.space)
        curve_checks(report, name, curve, cfg, n_grid)
        gap = r_gap = 0.0
        for s in curve.samples(curve.grid(n_grid)):
            fr = sabban_frame(s, curve.space)
            gap = max(gap, euclid_dist(evolute(fr), expected))
            u_plus, _, _ = curvature_center(fr)
            r_gap = max(r_gap, abs(mink_dot(s.position, u_plus) - radius))
        add(f"{name}.evolute_constant", gap, 1e-8)
        add(f"{name}.centre_radius", r_gap, 1e-8, f"r0={radius!r}")

    rng = np.random.default_rng(SEED)
    for space, theta in ((Space.S12, 0.7), (Space.H2, 0.9)):
        curve = random_spherical_curve(rng, space, min_kg_sq=1.2 if space is Space.S12 else None)
        # the sign of xi opposite to kappa_g keeps 1 - tanh(xi) kappa_g > 1
        lo, _ = _kg_range(curve, n_grid)
        cfg = BertrandConfig(1.3, -0.4 if lo > 0 else 0.4, space)
        u = 0.5 if lo > 0 else 2.0
        label = f"random_{space.value}"
        try:
            curve_checks(report, label, curve, cfg, n_grid, theta=theta, u=u)
        except EvoluteUndefined as exc:
            add(f"{label}.evolute", math.inf, 0.0, str(exc))
        except GeometryError as exc:
            add(f"{label}.error", math.inf, 0.0, f"{type(exc).__name__}: {exc}")
    return report
