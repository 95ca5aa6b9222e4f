"""Parametric curves built from expressions, and unit-speed reparametrization."""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import BadParameter, DegenerateSpeed, DomainError, UnknownPreset, WrongCausalType
from ..jets import jet_variable
from ..lorentz_core import CausalCharacter, MinkVec3, causal_character, euclid_norm, mink_dot
from ..quadrature import integrate
from .expr import Expr, compile_many, parse_expression, serialize

MIN_SPEED = 1e-9
MEMO_SIZE = 8192


class Space(enum.Enum):
    S12 = "S12"
    H2 = "H2"
    FREE = "Free"

    @property
    def sign(self) -> float:
        """<x, x> on the corresponding unit sphere."""
        return {Space.S12: 1.0, Space.H2: -1.0}[self]


@dataclass(frozen=True)
class CurveSample:
    """Position and the first three parameter derivatives at one point."""

    position: MinkVec3
    d1: MinkVec3
    d2: MinkVec3
    d3: MinkVec3


def linspace(lo: float, hi: float, n: int) -> list[float]:
    if n < 2:
        raise BadParameter(f"grid needs at least 2 points, got {n}")
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n - 1)] + [hi]


class Curve:
    """Anything that can be sampled with derivatives on a closed interval.

    Subclasses provide ``space``, ``domain`` and :meth:`sample`.
    """

    space: Space
    domain: tuple[float, float]

    def sample(self, v: float) -> CurveSample:
        raise NotImplementedError

    def samples(self, vs: Sequence[float]) -> list[CurveSample]:
        return [self.sample(v) for v in vs]

    def grid(self, n: int) -> list[float]:
        return linspace(self.domain[0], self.domain[1], n)

    def _check_in_domain(self, v: float) -> float:
        lo, hi = self.domain
        slack = 1e-12 * max(1.0, hi - lo)
        if not (lo - slack <= v <= hi + slack):
            raise DomainError(f"parameter {v!r} outside curve domain [{lo!r}, {hi!r}]")
        return min(max(v, lo), hi)


@dataclass(frozen=True)
class CurveSpec(Curve):
    """Three component expressions in ``v`` on a closed interval."""

    space: Space
    x_expr: Expr
    y_expr: Expr
    z_expr: Expr
    domain: tuple[float, float]
    _fns: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lo, hi = self.domain
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise BadParameter(f"curve domain must satisfy v_min < v_max, got [{lo!r}, {hi!r}]")
        object.__setattr__(self, "_fns", compile_many((self.x_expr, self.y_expr, self.z_expr)))

    @classmethod
    def from_strings(cls, space: Space | str, x: str, y: str, z: str, domain: tuple[float, float]) -> CurveSpec:
        return cls(Space(space), parse_expression(x), parse_expression(y), parse_expression(z), tuple(domain))

    def sample(self, v: float) -> CurveSample:
        return eval_curve(self, v)

    def texts(self) -> tuple[str, str, str]:
        return tuple(serialize(e) for e in (self.x_expr, self.y_expr, self.z_expr))


def eval_curve(spec: CurveSpec, v: float) -> CurveSample:
    v = spec._check_in_domain(v)
    var = jet_variable(v)
    jx, jy, jz = spec._fns(var)
    try:
        return CurveSample(
            MinkVec3(jx.c0, jy.c0, jz.c0),
            MinkVec3(jx.c1, jy.c1, jz.c1),
            MinkVec3(jx.c2, jy.c2, jz.c2),
            MinkVec3(jx.c3, jy.c3, jz.c3),
        )
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def validate_on_sphere(curve: Curve, n_grid: int = 100) -> float:
    """Largest deviation of <f, f> from +-1 over a uniform grid."""
    if curve.space is Space.FREE:
        raise BadParameter("sphere validation needs an S12 or H2 curve")
    target = curve.space.sign
    return max(abs(mink_dot(s.position, s.position) - target) for s in curve.samples(curve.grid(n_grid)))


def validate_unit_speed(curve: Curve, n_grid: int = 100) -> float:
    """Largest deviation of <f', f'> from 1 over a uniform grid."""
    return max(abs(mink_dot(s.d1, s.d1) - 1.0) for s in curve.samples(curve.grid(n_grid)))


class UnitSpeedCurve(Curve):
    """Arc-length reparametrization of a space-like curve.

    The arc length from ``v_min`` is tabulated on uniform knots by adaptive
    quadrature.  A parameter is recovered from an arc length by a safeguarded
    Newton iteration inside the knot bracket (bisection whenever Newton would
    leave it), started from a quintic Hermite guess built from dv/ds and
    d2v/ds2 at the knots; derivatives follow from the chain rule with
    ds/dv = |c'(v)|.
    """

    def __init__(self, base: Curve, tol: float = 1e-10, n_knots: int = 128):
        self.base = base
        self.space = base.space
        self.tol = tol
        lo, hi = base.domain
        self.knots = linspace(lo, hi, n_knots + 1)
        # speed and its parameter derivative at the knots; also rejects bad input early
        self.knot_speed, self.knot_accel = [], []
        for v in self.knots:
            d = self.base.sample(v)
            sig = self._speed(v, d.d1)
            self.knot_speed.append(sig)
            self.knot_accel.append(mink_dot(d.d1, d.d2) / sig)
        seg_tol = tol / n_knots
        acc = [0.0]
        for a, b in zip(self.knots, self.knots[1:]):
            acc.append(acc[-1] + integrate(self._speed, a, b, seg_tol))
        self.arc = acc
        self.domain = (0.0, acc[-1])
        self._memo: dict[float, CurveSample] = {}

    def _speed(self, v: float, d1: MinkVec3 | None = None) -> float:
        if d1 is None:
            d1 = self.base.sample(v).d1
        q = mink_dot(d1, d1)
        if euclid_norm(d1) < MIN_SPEED or abs(q) < MIN_SPEED**2:
            raise DegenerateSpeed(f"speed below {MIN_SPEED} at v = {v!r}")
        if causal_character(d1) is not CausalCharacter.SPACE_LIKE:
            raise WrongCausalType(f"tangent is not space-like at v = {v!r}")
        return math.sqrt(q)

    def arc_length_at(self, v: float) -> float:
        k = min(max(bisect.bisect_right(self.knots, v) - 1, 0), len(self.knots) - 2)
        return self.arc[k] + integrate(self._speed, self.knots[k], v, 0.1 * self.tol / len(self.knots), min_depth=0)

    def _guess(self, k: int, s: float) -> float:
        s_lo, s_hi = self.arc[k], self.arc[k + 1]
        h = s_hi - s_lo
        t = (s - s_lo) / h
        t2, t3 = t * t, t * t * t
        t4, t5 = t3 * t, t3 * t2
        # v(t) with dv/dt = h / speed and d2v/dt2 = -h^2 speed' / speed^3 at both ends
        sig0, sig1 = self.knot_speed[k], self.knot_speed[k + 1]
        m0, m1 = h / sig0, h / sig1
        w0 = -h * h * self.knot_accel[k] / sig0**3
        w1 = -h * h * self.knot_accel[k + 1] / sig1**3
        return (
            (1 - 10 * t3 + 15 * t4 - 6 * t5) * self.knots[k]
            + (t - 6 * t3 + 8 * t4 - 3 * t5) * m0
            + 0.5 * (t2 - 3 * t3 + 3 * t4 - t5) * w0
            + 0.5 * (t3 - 2 * t4 + t5) * w1
            + (-4 * t3 + 7 * t4 - 3 * t5) * m1
            + (10 * t3 - 15 * t4 + 6 * t5) * self.knots[k + 1]
        )

    def parameter_at(self, s: float) -> float:
        s = self._check_in_domain(s)
        k = min(max(bisect.bisect_right(self.arc, s) - 1, 0), len(self.arc) - 2)
        v_lo, v_hi = self.knots[k], self.knots[k + 1]
        s_lo = self.arc[k]
        if s <= s_lo:
            return v_lo
        if s >= self.arc[k + 1]:
            return v_hi
        v = self._guess(k, s)
        if not v_lo < v < v_hi:
            v = 0.5 * (v_lo + v_hi)
        a, b = v_lo, v_hi
        inner_tol = 0.1 * self.tol / len(self.knots)
        # once a Newton step is this small the next error is ~ step^2 and negligible
        small_step = 1e-8 * (v_hi - v_lo)
        for _ in range(100):
            resid = s_lo + integrate(self._speed, v_lo, v, inner_tol, min_depth=0) - s
            if abs(resid) <= inner_tol:
                return v
            if resid > 0:
                b = v
            else:
                a = v
            step = resid / self._speed(v)
            v_new = v - step
            if not a < v_new < b:
                v_new = 0.5 * (a + b)
            elif abs(step) <= small_step:
                return v_new
            if abs(v_new - v) <= 4e-16 * max(1.0, abs(v)):
                return v_new
            v = v_new
        return v

    def sample(self, s: float) -> CurveSample:
        # grids are revisited by most checks; inversion is the expensive part
        hit = self._memo.get(s)
        if hit is None:
            if len(self._memo) >= MEMO_SIZE:
                self._memo.clear()
            hit = self._memo[s] = self._sample(s)
        return hit

    def _sample(self, s: float) -> CurveSample:
        c = self.base.sample(self.parameter_at(s))
        c1, c2, c3 = c.d1, c.d2, c.d3
        sig2 = mink_dot(c1, c1)
        sig = math.sqrt(sig2)
        sig_v = mink_dot(c1, c2) / sig
        sig_vv = (mink_dot(c2, c2) + mink_dot(c1, c3) - sig_v * sig_v) / sig
        v1 = 1.0 / sig
        v2 = -sig_v / (sig2 * sig)
        v3 = -sig_vv / (sig2 * sig2) + 3.0 * sig_v * sig_v / (sig2 * sig2 * sig)
        return CurveSample(
            c.position,
            c1 * v1,
            c2 * (v1 * v1) + c1 * v2,
            c3 * (v1 * v1 * v1) + c2 * (3.0 * v1 * v2) + c1 * v3,
        )


def reparametrize_unit_speed(spec: Curve, tol: float = 1e-10) -> UnitSpeedCurve:
    return UnitSpeedCurve(spec, tol)


PRESETS = ("example_336", "example_46", "pseudo_circle_s12", "pseudo_circle_h2")


def preset(name: str, params: Sequence[float] = (), domain: tuple[float, float] | None = None) -> CurveSpec:
    """Named curves: the two worked examples and the two pseudo-circle families.

    ``pseudo_circle_s12(c)`` and ``pseudo_circle_h2(c)`` need ``c > 1``; their
    geodesic curvature is ``c / sqrt(c^2 - 1)``.
    """
    params = [float(p) for p in params]
    if name in ("example_336", "example_46"):
        if params:
            raise BadParameter(f"preset {name} takes no parameters, got {params}")
        if name == "example_336":
            return CurveSpec.from_strings(Space.S12, "sin(v)", "cos(v)", "0", domain or (0.0, 2 * math.pi))
        return CurveSpec.from_strings(Space.H2, "sinh(v)", "0", "cosh(v)", domain or (-2.0, 2.0))
    if name in ("pseudo_circle_s12", "pseudo_circle_h2"):
        if len(params) != 1:
            raise BadParameter(f"preset {name} takes exactly one parameter c, got {params}")
        c = params[0]
        if not c > 1.0:
            raise BadParameter(f"preset {name} needs c > 1, got c = {c!r}")
        r = repr(math.sqrt(c * c - 1.0))
        if name == "pseudo_circle_s12":
            return CurveSpec.from_strings(
                Space.S12, repr(c), f"{r}*sinh(v/{r})", f"{r}*cosh(v/{r})", domain or (-2.0, 2.0)
            )
        return CurveSpec.from_strings(
            Space.H2, f"{r}*cos(v/{r})", f"{r}*sin(v/{r})", repr(c), domain or (0.0, 2 * math.pi * float(r))
        )
    raise UnknownPreset(f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}")
