"""Linear algebra of Minkowski 3-space with signature (+, +, -).

The third coordinate is the time-like axis.  Vectors are small immutable
value objects; everything here is pure.
"""

from __future__ import annotations

import enum
import math
from typing import Iterator

CAUSAL_TOL = 1e-12


class MinkVec3:
    """A vector (x1, x2, x3) in Minkowski 3-space."""

    __slots__ = ("x1", "x2", "x3")

    def __init__(self, x1: float, x2: float, x3: float):
        x1 = float(x1)
        x2 = float(x2)
        x3 = float(x3)
        if not (math.isfinite(x1) and math.isfinite(x2) and math.isfinite(x3)):
            raise ValueError(f"non-finite component in ({x1}, {x2}, {x3})")
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)
        object.__setattr__(self, "x3", x3)

    def __setattr__(self, name, value):
        raise AttributeError("MinkVec3 is immutable")

    def __iter__(self) -> Iterator[float]:
        yield self.x1
        yield self.x2
        yield self.x3

    def __eq__(self, other) -> bool:
        if not isinstance(other, MinkVec3):
            return NotImplemented
        return self.x1 == other.x1 and self.x2 == other.x2 and self.x3 == other.x3

    def __hash__(self) -> int:
        return hash((self.x1, self.x2, self.x3))

    def __repr__(self) -> str:
        return f"MinkVec3({self.x1!r}, {self.x2!r}, {self.x3!r})"

    def __add__(self, other: MinkVec3) -> MinkVec3:
        return MinkVec3(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: MinkVec3) -> MinkVec3:
        return MinkVec3(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> MinkVec3:
        return MinkVec3(-self.x1, -self.x2, -self.x3)

    def __mul__(self, k: float) -> MinkVec3:
        return MinkVec3(self.x1 * k, self.x2 * k, self.x3 * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> MinkVec3:
        return MinkVec3(self.x1 / k, self.x2 / k, self.x3 / k)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)


ORIGIN = MinkVec3(0.0, 0.0, 0.0)


class CausalCharacter(enum.Enum):
    SPACE_LIKE = "SpaceLike"
    TIME_LIKE = "TimeLike"
    LIGHT_LIKE = "LightLike"


def mink_dot(x: MinkVec3, y: MinkVec3) -> float:
    return x.x1 * y.x1 + x.x2 * y.x2 - x.x3 * y.x3


def euclid_norm(x: MinkVec3) -> float:
    return math.sqrt(x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3)


def euclid_dist(x: MinkVec3, y: MinkVec3) -> float:
    return euclid_norm(x - y)


def pseudo_norm(x: MinkVec3) -> float:
    """Return sqrt(|<x, x>|)."""
    return math.sqrt(abs(mink_dot(x, x)))


def causal_character(x: MinkVec3, tol: float = CAUSAL_TOL) -> CausalCharacter:
    """Classify ``x``; the threshold is relative to the squared Euclidean norm.

    The zero vector is space-like by convention.
    """
    q = mink_dot(x, x)
    scale = x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3
    if scale == 0.0 or q > tol * scale:
        return CausalCharacter.SPACE_LIKE
    if q < -tol * scale:
        return CausalCharacter.TIME_LIKE
    return CausalCharacter.LIGHT_LIKE


def mink_cross(x: MinkVec3, y: MinkVec3) -> MinkVec3:
    """Lorentzian cross product, characterised by <x*y, z> = det(x, y, z)."""
    return MinkVec3(
        x.x2 * y.x3 - x.x3 * y.x2,
        x.x3 * y.x1 - x.x1 * y.x3,
        x.x2 * y.x1 - x.x1 * y.x2,
    )


def det3(x: MinkVec3, y: MinkVec3, z: MinkVec3) -> float:
    """Ordinary determinant of the 3x3 matrix with rows x, y, z."""
    return (
        x.x1 * (y.x2 * z.x3 - y.x3 * z.x2)
        - x.x2 * (y.x1 * z.x3 - y.x3 * z.x1)
        + x.x3 * (y.x1 * z.x2 - y.x2 * z.x1)
    )


def on_de_sitter(x: MinkVec3, tol: float = 1e-12) -> bool:
    return abs(mink_dot(x, x) - 1.0) <= tol


def on_hyperbolic(x: MinkVec3, tol: float = 1e-12) -> bool:
    return abs(mink_dot(x, x) + 1.0) <= tol
