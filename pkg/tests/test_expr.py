import math

import pytest
from hypothesis import given, settings, strategies as st

from minkbertrand.curve_dsl.expr import (
    FUNCTIONS,
    Binary,
    Number,
    Unary,
    Variable,
    compile_expression,
    compile_many,
    contains_variable,
    evaluate,
    parse_expression,
    serialize,
)
from minkbertrand.errors import DomainError, ParseError
from minkbertrand.jets import jet_variable

V = Variable()


def test_precedence():
    assert parse_expression("1+2*v") == Binary("+", Number(1.0), Binary("*", Number(2.0), V))
    assert parse_expression("-v^2") == Unary("neg", Binary("^", V, Number(2.0)))
    assert parse_expression("2^3^2") == Binary("^", Number(2.0), Binary("^", Number(3.0), Number(2.0)))
    assert parse_expression("2^-1") == Binary("^", Number(2.0), Unary("neg", Number(1.0)))
    assert parse_expression("a" if False else "sin(v)") == Unary("sin", V)


@pytest.mark.parametrize(
    "text, v, expected",
    [
        ("-v^2", 3.0, -9.0),
        ("2^3^2", 0.0, 512.0),
        ("2^-1", 0.0, 0.5),
        ("1 - 2 - 3", 0.0, -4.0),
        ("8/4/2", 0.0, 1.0),
        ("sqrt(2)*cosh(v)", 0.0, math.sqrt(2)),
        ("pi/2 + e", 0.0, math.pi / 2 + math.e),
        ("1.5e2*v", 2.0, 300.0),
    ],
)
def test_evaluate(text, v, expected):
    assert evaluate(parse_expression(text), v) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("1+", 2),
        ("sin v", 4),
        ("(v", 2),
        ("v)", 1),
        ("foo(v)", 0),
        ("x", 0),
        ("2 $ 3", 2),
        ("sin()", 4),
        ("v v", 2),
    ],
)
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.offset == offset


def test_contains_variable():
    assert contains_variable(parse_expression("sin(v)+1"))
    assert not contains_variable(parse_expression("sin(pi)+1"))


def test_constant_expression_compiles():
    fn = compile_expression(parse_expression("2*pi"))
    assert fn(jet_variable(5.0)).coeffs() == (2 * math.pi, 0, 0, 0)


def test_domain_error_at_evaluation():
    fn = compile_expression(parse_expression("ln(v)"))
    with pytest.raises(DomainError):
        fn(jet_variable(-1.0))


# random trees for round-trip and compiler agreement

leaves = st.one_of(
    st.just(V),
    st.floats(0, 1e6, allow_nan=False, allow_infinity=False).map(Number),
    st.sampled_from([Number(math.pi, "pi"), Number(math.e, "e")]),
)


def _extend(children):
    return st.one_of(
        st.builds(Unary, st.sampled_from(("neg",) + FUNCTIONS), children),
        st.builds(Binary, st.sampled_from("+-*/^"), children, children),
    )


trees = st.recursive(leaves, _extend, max_leaves=12)


@settings(max_examples=300)
@given(trees)
def test_serialize_round_trip(tree):
    assert parse_expression(serialize(tree)) == tree


def _same(a, b):
    return all(x == y or (math.isclose(x, y, rel_tol=1e-12, abs_tol=1e-300)) for x, y in zip(a.coeffs(), b.coeffs()))


@settings(max_examples=300)
@given(st.lists(trees, min_size=1, max_size=4), st.floats(-2, 2))
def test_compile_many_agrees_with_single(trees_, x):
    singles = []
    for t in trees_:
        try:
            singles.append(compile_expression(t)(jet_variable(x)))
        except (DomainError, ZeroDivisionError):
            return
    many = compile_many(trees_)(jet_variable(x))
    assert len(many) == len(singles)
    for a, b in zip(many, singles):
        assert _same(a, b)
