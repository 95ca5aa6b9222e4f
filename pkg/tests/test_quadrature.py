import math

import pytest
from hypothesis import given, strategies as st

from minkbertrand.errors import QuadratureFailure
from minkbertrand.quadrature import integrate, integrate_vector


def test_cubic_is_exact():
    assert integrate(lambda x: x**3 - 2 * x + 1, -1.0, 2.0) == pytest.approx(3.75 - 3 + 3, abs=1e-14)


def test_vector_components():
    r = integrate_vector(lambda x: (math.sin(x), math.cos(x), math.exp(x)), 0.0, math.pi, 1e-12)
    assert r[0] == pytest.approx(2.0, abs=1e-12)
    assert abs(r[1]) < 1e-12
    assert r[2] == pytest.approx(math.exp(math.pi) - 1, abs=1e-11)


def test_reversed_and_empty_intervals():
    assert integrate(math.exp, 1.0, 0.0) == pytest.approx(1 - math.e, abs=1e-10)
    assert integrate(math.exp, 0.5, 0.5) == 0.0


def test_interval_of_one_ulp():
    a = -1.0
    b = math.nextafter(a, 0.0)
    assert integrate(lambda x: 1.0, a, b, 1e-15) == pytest.approx(b - a, rel=1e-12)


def test_singular_integrand_fails_loudly():
    with pytest.raises(QuadratureFailure):
        integrate(lambda x: 1.0 / x if x else 1e300, 0.0, 1.0, 1e-10)


def test_budget():
    with pytest.raises(QuadratureFailure):
        integrate(lambda x: math.sin(1000 * x), 0.0, 10.0, 1e-14, max_intervals=50)


@given(st.floats(-3, 3), st.floats(0.01, 4), st.floats(0.2, 5))
def test_oscillatory_against_antiderivative(a, width, w):
    b = a + width
    exact = (math.cos(w * a) - math.cos(w * b)) / w
    assert abs(integrate(lambda x: math.sin(w * x), a, b, 1e-11) - exact) < 1e-10
