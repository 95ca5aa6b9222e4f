import math

import pytest
import sympy
from hypothesis import given, strategies as st

from minkbertrand.curve_dsl.expr import compile_expression, parse_expression
from minkbertrand.errors import DivisionByZero, DomainError
from minkbertrand.jets import (
    ELEMENTARY,
    Jet3,
    jet_add,
    jet_apply,
    jet_constant,
    jet_div,
    jet_mul,
    jet_neg,
    jet_pow,
    jet_sub,
    jet_variable,
)


def close(a, b, tol=1e-15):
    return all(abs(x - y) <= tol * max(1.0, abs(y)) for x, y in zip(a.coeffs(), b))


def test_constructors():
    assert jet_variable(0).coeffs() == (0, 1, 0, 0)
    assert jet_constant(5).coeffs() == (5, 0, 0, 0)
    assert jet_variable(2).coeffs() == (2, 1, 0, 0)


def test_arithmetic_examples():
    assert jet_mul(jet_variable(1), jet_variable(1)).coeffs() == (1, 2, 2, 0)
    assert jet_add(jet_constant(1), jet_variable(0)).coeffs() == (1, 1, 0, 0)
    assert jet_div(jet_constant(1), jet_variable(2)).coeffs() == (0.5, -0.25, 0.25, -0.375)
    assert jet_sub(jet_variable(3), jet_constant(1)).coeffs() == (2, 1, 0, 0)
    assert jet_neg(jet_variable(3)).coeffs() == (-3, -1, 0, 0)


def test_elementary_examples():
    assert close(jet_apply("sin", jet_variable(0)), (0, 1, 0, -1))
    assert close(jet_apply("cosh", jet_variable(0)), (1, 0, 1, 0))
    s, c = math.sinh(1), math.cosh(1)
    assert close(jet_apply("sinh", jet_variable(1)), (s, c, s, c))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        jet_div(jet_variable(1), jet_constant(0))
    with pytest.raises(DivisionByZero):
        jet_div(jet_variable(1), jet_variable(0))


@pytest.mark.parametrize("fn, x", [("ln", 0.0), ("ln", -1.0), ("sqrt", 0.0), ("sqrt", -2.0), ("tan", math.pi / 2)])
def test_domain_errors(fn, x):
    with pytest.raises(DomainError):
        jet_apply(fn, jet_variable(x))


def test_exp_overflow_and_non_finite():
    with pytest.raises(DomainError):
        jet_apply("exp", jet_variable(1000.0))
    with pytest.raises(DomainError):
        Jet3(math.nan)
    with pytest.raises(DomainError):
        jet_apply("cos", jet_variable(1)) * 1e308 * 1e308


def test_unknown_function():
    with pytest.raises(DomainError):
        jet_apply("erf", jet_variable(0.5))


def test_integer_power_is_repeated_multiplication():
    x = jet_variable(-1.5)
    assert jet_pow(x, 3).coeffs() == (x * x * x).coeffs()
    assert jet_pow(x, 2.0).coeffs() == (x * x).coeffs()
    assert jet_pow(x, jet_constant(2)).coeffs() == (x * x).coeffs()
    assert close(jet_pow(x, -1), (1 / x).coeffs())


def test_fractional_power_needs_positive_base():
    with pytest.raises(DomainError):
        jet_pow(jet_variable(-1.0), 0.5)
    r = jet_pow(jet_variable(4.0), 0.5)
    assert close(r, jet_apply("sqrt", jet_variable(4.0)).coeffs(), 1e-14)


def _fd5(fn, x, h=1e-5):
    return (fn(x - 2 * h) - 8 * fn(x - h) + 8 * fn(x + h) - fn(x + 2 * h)) / (12 * h)


SAFE = {"tan": (-1.2, 1.2), "ln": (0.1, 5.0), "sqrt": (0.1, 5.0)}


@pytest.mark.parametrize("name", sorted(ELEMENTARY))
@given(data=st.data())
def test_elementary_matches_finite_differences(name, data):
    lo, hi = SAFE.get(name, (-3.0, 3.0))
    x = data.draw(st.floats(lo, hi))
    impl = ELEMENTARY[name]
    jet = impl(jet_variable(x))
    for k in (1, 2, 3):
        fd = _fd5(lambda y: impl(jet_variable(y)).coeffs()[k - 1], x)
        assert abs(jet.coeffs()[k] - fd) <= 1e-6 * max(1.0, abs(fd))


SYMBOLIC = [
    "sin(v)*cos(2*v)",
    "exp(-v^2/2)",
    "sqrt(1+v^2)",
    "ln(2+sin(v))",
    "tanh(v)^3-v",
    "cosh(v)/(1+v^2)",
    "tan(v/3)*sinh(v)",
    "(v^2+1)^(1/3)",
    "exp(sin(v))*sqrt(cosh(v))",
    "v^3-2*v+1/(3+v)",
]


@pytest.mark.parametrize("text", SYMBOLIC)
def test_composition_matches_symbolic_derivatives(text):
    v = sympy.Symbol("v")
    expr = sympy.sympify(text.replace("^", "**").replace("ln", "log"), locals={"v": v})
    derivs = [sympy.lambdify(v, sympy.diff(expr, v, k), "math") for k in range(4)]
    fn = compile_expression(parse_expression(text))
    for x in (-1.7, -0.4, 0.0, 0.9, 1.8):
        jet = fn(jet_variable(x))
        for k in range(4):
            exact = derivs[k](x)
            assert abs(jet.coeffs()[k] - exact) <= 1e-12 * max(1.0, abs(exact)), (text, x, k)


@given(st.floats(-2, 2), st.floats(-2, 2))
def test_product_and_quotient_rules(x, c):
    a = jet_apply("sin", jet_variable(x)) + c
    b = jet_apply("exp", jet_variable(x))
    p = a * b
    q = a / b
    assert close(q * b, a.coeffs(), 1e-12)
    assert close(p / b, a.coeffs(), 1e-12)


@pytest.mark.parametrize("fn", ["sinh", "cosh"])
def test_hyperbolic_overflow_is_domain_error(fn):
    with pytest.raises(DomainError):
        jet_apply(fn, jet_variable(711.0))
