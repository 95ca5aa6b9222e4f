import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import kg_range, safe_config
from minkbertrand.bertrand import (
    BertrandConfig,
    BertrandCurve,
    bertrand_derivatives,
    bertrand_point,
    bertrand_points,
    bertrand_velocity,
    darboux_equals_evolute,
    helix_correspondence,
    point_epsilon,
    predicted_kappa_tau,
    verify_bertrand,
)
from minkbertrand.curve_dsl import CurveSpec, Space, preset
from minkbertrand.errors import BadParameter, DegenerateBertrandPoint, NotUnitSpeed, ThetaZero
from minkbertrand.frenet import darboux_indicatrix, frenet
from minkbertrand.lorentz_core import mink_dot
from minkbertrand.spherical_frames import sabban_frame
from minkbertrand.suite import example_46_closed_form, example_336_closed_form

THETA, U = 1.5, math.e
R2 = math.sqrt(2)


def test_config_from_surface():
    c = BertrandConfig.from_surface(U, THETA, Space.S12)
    assert c.xi == pytest.approx(math.tanh(1.5))
    assert c.a == pytest.approx(math.e * math.cosh(1.5) * math.cosh(math.tanh(1.5)))
    h = BertrandConfig.from_surface(U, THETA, "H2")
    assert h.xi == pytest.approx(1 / math.tanh(1.5))
    assert h.a == pytest.approx(math.e * math.sinh(1.5) * math.cosh(1 / math.tanh(1.5)))
    assert c.B == pytest.approx(c.a * math.tanh(c.xi))


def test_config_validation():
    with pytest.raises(BadParameter):
        BertrandConfig(0.0, 0.1, Space.S12)
    with pytest.raises(BadParameter):
        BertrandConfig(1.0, 0.1, Space.FREE)
    with pytest.raises(BadParameter):
        BertrandConfig(1.0, 0.1, Space.S12, epsilon=0)
    with pytest.raises(ThetaZero):
        BertrandConfig.from_surface(1.0, 0.0, Space.S12)
    with pytest.raises(BadParameter):
        BertrandConfig.from_surface(-1.0, 1.0, Space.H2)


@pytest.mark.parametrize(
    "name, space, exact, hi",
    [("example_336", Space.S12, example_336_closed_form, 2 * math.pi), ("example_46", Space.H2, example_46_closed_form, 2.0)],
)
def test_examples_match_closed_form(name, space, exact, hi):
    curve = preset(name)
    cfg = BertrandConfig.from_surface(U, THETA, space)
    for v in (0.0, 0.37, 1.2, hi):
        p = bertrand_point(curve, cfg, v)
        assert max(abs(x - y) for x, y in zip(p, exact(v))) < 1e-8
    assert tuple(bertrand_point(curve, cfg, 0.0)) == (0.0, 0.0, 0.0)


def test_batch_points_agree_with_single_points():
    curve = preset("example_46")
    cfg = BertrandConfig.from_surface(U, THETA, Space.H2)
    vs = [1.5, -1.0, 0.0, 0.25, -1.9, 1.5]
    batch = bertrand_points(curve, cfg, vs)
    for v, p in zip(vs, batch):
        assert max(abs(x - y) for x, y in zip(p, bertrand_point(curve, cfg, v))) < 1e-9


def test_generator_checks():
    cfg = BertrandConfig(1.0, 0.2, Space.H2)
    with pytest.raises(BadParameter):
        bertrand_point(preset("example_336"), cfg, 0.5)
    shifted = preset("example_336", domain=(1.0, 2.0))
    with pytest.raises(BadParameter):
        bertrand_point(shifted, BertrandConfig(1.0, 0.2, Space.S12), 1.5)


def test_derivatives_at_origin_of_example_336():
    curve = preset("example_336")
    cfg = BertrandConfig.from_surface(U, THETA, Space.S12)
    d = bertrand_derivatives(curve, cfg, 0.0)
    # f(0) = (0, 1, 0), s(0) = (0, 0, 1)
    want = (0.0, cfg.a, cfg.a * math.tanh(cfg.xi))
    assert max(abs(x - y) for x, y in zip(d.d1, want)) < 1e-12
    assert mink_dot(d.d1, d.d1) == pytest.approx(cfg.a**2 / math.cosh(cfg.xi) ** 2, rel=1e-12)
    # d2 is parallel to t with factor a (1 - tanh(xi) kappa_g) = a
    assert max(abs(x - y) for x, y in zip(d.d2, curve.sample(0.0).d1 * cfg.a)) < 1e-12


def test_predicted_kappa_tau_examples():
    cfg = BertrandConfig(1.7, 0.6, Space.S12)
    k, t = predicted_kappa_tau(0.0, cfg)
    c2, th = math.cosh(0.6) ** 2, math.tanh(0.6)
    assert k == pytest.approx(c2 / 1.7) and t == pytest.approx(-c2 * th / 1.7)
    k, t = predicted_kappa_tau(th, cfg)
    assert k * cfg.a == pytest.approx(1.0) and t == pytest.approx(0.0, abs=1e-15)
    k, _ = predicted_kappa_tau(1 / th, cfg)
    assert k == pytest.approx(0.0, abs=1e-15)
    assert point_epsilon(1 / th + 0.1, cfg) == -1
    assert point_epsilon(0.0, BertrandConfig(-1.0, 0.6, Space.S12)) == -1


@pytest.mark.parametrize("name, space", [("example_336", Space.S12), ("example_46", Space.H2)])
def test_examples_satisfy_identity_and_are_helices(name, space):
    curve = preset(name)
    cfg = BertrandConfig.from_surface(U, THETA, space)
    rep = verify_bertrand(curve, cfg)
    assert rep.r1 < 1e-8 and rep.r2 < 1e-8
    assert helix_correspondence(curve, cfg) == (True, True)


@pytest.mark.parametrize("name, centre", [("pseudo_circle_s12", (-1, 0, 0)), ("pseudo_circle_h2", (0, 0, 1))])
def test_darboux_indicatrix_of_pseudo_circle(name, centre):
    curve = preset(name, [R2])
    cfg = BertrandConfig(1.3, -0.4, curve.space)
    assert darboux_equals_evolute(curve, cfg, 40) < 1e-8
    point, _ = darboux_indicatrix(frenet(BertrandCurve(curve, cfg).sample(0.5)))
    assert min(max(abs(x - sign * c) for x, c in zip(point, centre)) for sign in (1, -1)) < 1e-8
    assert helix_correspondence(curve, cfg, 40) == (True, True)


def test_degenerate_point_reported():
    # kappa_g = sqrt(2) and tanh(xi) = 1/sqrt(2) make the factor vanish
    curve = preset("pseudo_circle_s12", [R2])
    cfg = BertrandConfig(1.0, math.atanh(1 / R2), Space.S12)
    with pytest.raises(DegenerateBertrandPoint) as info:
        verify_bertrand(curve, cfg, 10)
    assert info.value.parameter == curve.domain[0]


def test_random_curves_satisfy_identity(s12_curves, h2_curves):
    for curve in s12_curves[1][:5] + h2_curves[1][:5]:
        cfg = safe_config(curve)
        rep = verify_bertrand(curve, cfg, 50)
        assert rep.r2 < 1e-7
        assert rep.r1_rel < 1e-7


def test_random_steep_curves_darboux_is_evolute(s12_curves, h2_curves):
    for curve in s12_curves[0][:3] + h2_curves[0][:3]:
        assert darboux_equals_evolute(curve, safe_config(curve), 40) < 1e-7


def test_varying_curvature_gives_no_helix(s12_curves):
    for curve in s12_curves[1]:
        lo, hi = kg_range(curve)
        if hi - lo > 0.1:
            assert helix_correspondence(curve, safe_config(curve), 40) == (False, False)
            return
    pytest.fail("no random curve with a geodesic curvature spread above 0.1")


@pytest.fixture(scope="module")
def sample_curves(s12_curves, h2_curves):
    return [s12_curves[0][0], s12_curves[1][0], h2_curves[0][0], h2_curves[1][0]]


@settings(max_examples=40, deadline=None)
@given(idx=st.integers(0, 3), t=st.floats(0.05, 0.95), a=st.floats(0.5, 3.0), xi=st.floats(0.05, 0.6))
def test_velocity_causal_character(sample_curves, idx, t, a, xi):
    curve = sample_curves[idx]
    cfg = BertrandConfig(a, xi, curve.space)
    v = curve.domain[0] + t * (curve.domain[1] - curve.domain[0])
    d1 = bertrand_velocity(curve.sample(v), cfg)
    q = a * a / math.cosh(xi) ** 2
    assert abs(mink_dot(d1, d1) - curve.space.sign * q) < 1e-9 * max(1.0, q)


@settings(max_examples=8, deadline=None)
@given(idx=st.integers(0, 3), t=st.floats(0.1, 0.9))
def test_quadrature_matches_closed_form_velocity(sample_curves, idx, t):
    curve = sample_curves[idx]
    cfg = safe_config(curve)
    lo, hi = curve.domain
    v = lo + t * (hi - lo)
    h = 1e-4
    p, m = bertrand_point(curve, cfg, v + h, 1e-12), bertrand_point(curve, cfg, v - h, 1e-12)
    fd = [(x - y) / (2 * h) for x, y in zip(p, m)]
    d1 = bertrand_derivatives(curve, cfg, v).d1
    assert max(abs(x - y) for x, y in zip(fd, d1)) < 1e-6


@settings(max_examples=25, deadline=None)
@given(idx=st.integers(0, 3), t=st.floats(0.0, 1.0))
def test_darboux_character_follows_geodesic_curvature(sample_curves, idx, t):
    curve = sample_curves[idx]
    cfg = safe_config(curve)
    lo, hi = curve.domain
    v = lo + t * (hi - lo)
    kg = sabban_frame(curve.sample(v), curve.space).kappa_g
    app = frenet(BertrandCurve(curve, cfg).sample(v))
    # tau^2 - kappa^2 = cosh^2(xi) (kappa_g^2 - 1) / a^2 on both spheres
    lhs = app.tau**2 - app.kappa**2
    if abs(kg * kg - 1) > 1e-6:
        assert (lhs > 0) == (kg * kg > 1)


def test_generator_must_be_unit_speed():
    curve = CurveSpec.from_strings("S12", "sin(2*v)", "cos(2*v)", "0", (0.0, 1.0))
    with pytest.raises(NotUnitSpeed):
        BertrandCurve(curve, BertrandConfig(1.0, 0.1, Space.S12)).sample(0.5)
