import math

import pytest
from hypothesis import given, settings, strategies as st

from minkbertrand.lorentz_core import (
    CausalCharacter,
    MinkVec3,
    causal_character,
    det3,
    mink_cross,
    mink_dot,
    on_de_sitter,
    on_hyperbolic,
    pseudo_norm,
)

coord = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)
vectors = st.builds(MinkVec3, coord, coord, coord)


def scale(*vs):
    return math.prod(max(1.0, math.sqrt(v.x1**2 + v.x2**2 + v.x3**2)) for v in vs)


def test_dot_examples():
    assert mink_dot(MinkVec3(0, 0, 1), MinkVec3(0, 0, 1)) == -1
    assert mink_dot(MinkVec3(1, 0, 0), MinkVec3(0, 1, 0)) == 0
    assert mink_dot(MinkVec3(1, 2, 3), MinkVec3(4, 5, 6)) == -4


def test_pseudo_norm_examples():
    assert pseudo_norm(MinkVec3(0, 0, 0)) == 0
    assert pseudo_norm(MinkVec3(0, 0, 2)) == 2
    assert pseudo_norm(MinkVec3(1, 1, 1)) == 1


@pytest.mark.parametrize(
    "vec, expected",
    [
        ((1, 0, 0), CausalCharacter.SPACE_LIKE),
        ((0, 0, 1), CausalCharacter.TIME_LIKE),
        ((1, 0, 1), CausalCharacter.LIGHT_LIKE),
        ((0, 0, 0), CausalCharacter.SPACE_LIKE),
        ((3, 4, 5), CausalCharacter.LIGHT_LIKE),
    ],
)
def test_causal_character(vec, expected):
    assert causal_character(MinkVec3(*vec)) is expected


def test_causal_tolerance_is_relative():
    # light-like up to rounding at a large scale
    x = MinkVec3(3e8, 4e8, 5e8 * (1 + 1e-15))
    assert causal_character(x) is CausalCharacter.LIGHT_LIKE


def test_cross_examples():
    assert mink_cross(MinkVec3(1, 0, 0), MinkVec3(0, 1, 0)) == MinkVec3(0, 0, -1)
    x = MinkVec3(1.5, -2, 0.25)
    assert mink_cross(x, x) == MinkVec3(0, 0, 0)
    for v in (0.0, 0.4, 2.0, 5.5):
        f = MinkVec3(math.sin(v), math.cos(v), 0)
        f1 = MinkVec3(math.cos(v), -math.sin(v), 0)
        c = mink_cross(f, f1)
        assert max(abs(a - b) for a, b in zip(c, (0, 0, 1))) < 1e-15


def test_sphere_membership():
    assert on_de_sitter(MinkVec3(1, 0, 0), 1e-12)
    assert on_hyperbolic(MinkVec3(0, 0, 1), 1e-12)
    assert on_de_sitter(MinkVec3(math.sqrt(2), 0, 1), 1e-12)
    assert not on_hyperbolic(MinkVec3(1, 0, 0), 1e-12)


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        MinkVec3(math.nan, 0, 0)
    with pytest.raises(ValueError):
        MinkVec3(0, math.inf, 0)


def test_immutable():
    x = MinkVec3(1, 2, 3)
    with pytest.raises(AttributeError):
        x.x1 = 5


@settings(max_examples=300)
@given(vectors, vectors, vectors)
def test_cross_is_dual_of_determinant(x, y, z):
    assert abs(mink_dot(mink_cross(x, y), z) - det3(x, y, z)) <= 1e-12 * scale(x, y, z)


@given(vectors, vectors)
def test_cross_antisymmetric_exactly(x, y):
    assert mink_cross(x, y) + mink_cross(y, x) == MinkVec3(0, 0, 0)


@settings(max_examples=300)
@given(vectors, vectors, vectors)
def test_double_cross_expansion(x, y, z):
    lhs = mink_cross(mink_cross(x, y), z)
    rhs = x * mink_dot(y, z) - y * mink_dot(x, z)
    assert max(abs(a - b) for a, b in zip(lhs, rhs)) <= 1e-12 * scale(x, y, z)


@given(vectors, vectors)
def test_cross_orthogonal_to_factors(x, y):
    c = mink_cross(x, y)
    tol = 1e-12 * scale(x, x, y)
    assert abs(mink_dot(c, x)) <= tol
    assert abs(mink_dot(c, y)) <= 1e-12 * scale(x, y, y)


@given(vectors, vectors)
def test_cross_norm_identity(x, y):
    c = mink_cross(x, y)
    rhs = -mink_dot(x, x) * mink_dot(y, y) + mink_dot(x, y) ** 2
    assert abs(mink_dot(c, c) - rhs) <= 1e-12 * scale(x, x, y, y)


@given(vectors, vectors, st.floats(-10, 10))
def test_dot_bilinear_symmetric(x, y, k):
    assert mink_dot(x, y) == mink_dot(y, x)
    assert abs(mink_dot(x * k, y) - k * mink_dot(x, y)) <= 1e-12 * scale(x, y) * max(1, abs(k))
