"""Order-3 truncated Taylor arithmetic.

A :class:`Jet3` carries a value and its first three derivatives with respect
to a single parameter.  Arithmetic and elementary functions propagate all
four coefficients exactly (up to rounding), so curvature and torsion never
need finite differences.
"""

from __future__ import annotations

import math
from typing import Callable, Union

from .errors import DivisionByZero, DomainError

Number = Union[int, float]


class Jet3:
    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0: float, c1: float = 0.0, c2: float = 0.0, c3: float = 0.0):
        # x * 0.0 is 0.0 for finite x and nan otherwise: one comparison instead of four calls
        if c0 * 0.0 + c1 * 0.0 + c2 * 0.0 + c3 * 0.0 != 0.0:
            raise DomainError(f"non-finite jet ({c0}, {c1}, {c2}, {c3})")
        self.c0 = c0
        self.c1 = c1
        self.c2 = c2
        self.c3 = c3

    def coeffs(self) -> tuple[float, float, float, float]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __repr__(self) -> str:
        return f"Jet3({self.c0!r}, {self.c1!r}, {self.c2!r}, {self.c3!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Jet3):
            return NotImplemented
        return self.coeffs() == other.coeffs()

    __hash__ = None

    def __add__(self, b):
        if isinstance(b, Jet3):
            return Jet3(self.c0 + b.c0, self.c1 + b.c1, self.c2 + b.c2, self.c3 + b.c3)
        return Jet3(self.c0 + b, self.c1, self.c2, self.c3)

    __radd__ = __add__

    def __sub__(self, b):
        if isinstance(b, Jet3):
            return Jet3(self.c0 - b.c0, self.c1 - b.c1, self.c2 - b.c2, self.c3 - b.c3)
        return Jet3(self.c0 - b, self.c1, self.c2, self.c3)

    def __rsub__(self, b):
        return Jet3(b - self.c0, -self.c1, -self.c2, -self.c3)

    def __neg__(self):
        return Jet3(-self.c0, -self.c1, -self.c2, -self.c3)

    def __mul__(self, b):
        if isinstance(b, Jet3):
            a0, a1, a2, a3 = self.c0, self.c1, self.c2, self.c3
            b0, b1, b2, b3 = b.c0, b.c1, b.c2, b.c3
            return Jet3(
                a0 * b0,
                a1 * b0 + a0 * b1,
                a2 * b0 + 2.0 * a1 * b1 + a0 * b2,
                a3 * b0 + 3.0 * a2 * b1 + 3.0 * a1 * b2 + a0 * b3,
            )
        return Jet3(self.c0 * b, self.c1 * b, self.c2 * b, self.c3 * b)

    __rmul__ = __mul__

    def __truediv__(self, b):
        if isinstance(b, Jet3):
            return self * b.reciprocal()
        if b == 0:
            raise DivisionByZero("jet division by zero constant")
        return Jet3(self.c0 / b, self.c1 / b, self.c2 / b, self.c3 / b)

    def __rtruediv__(self, b):
        return self.reciprocal() * b

    def reciprocal(self) -> Jet3:
        if self.c0 == 0.0:
            raise DivisionByZero("jet division by a jet with zero value")
        x = self.c0
        return _compose(self, 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x), -6.0 / (x * x * x * x))

    def __pow__(self, b):
        return jet_pow(self, b)


def jet_variable(v0: float) -> Jet3:
    return Jet3(float(v0), 1.0, 0.0, 0.0)


def jet_constant(c: float) -> Jet3:
    return Jet3(float(c), 0.0, 0.0, 0.0)


def _compose(a: Jet3, g0: float, g1: float, g2: float, g3: float) -> Jet3:
    """Faa di Bruno through order 3: the jet of g(a) given g and its derivatives at a.c0."""
    a1, a2, a3 = a.c1, a.c2, a.c3
    return Jet3(
        g0,
        g1 * a1,
        g2 * a1 * a1 + g1 * a2,
        g3 * a1 * a1 * a1 + 3.0 * g2 * a1 * a2 + g1 * a3,
    )


def _sin(a: Jet3) -> Jet3:
    s, c = math.sin(a.c0), math.cos(a.c0)
    return _compose(a, s, c, -s, -c)


def _cos(a: Jet3) -> Jet3:
    s, c = math.sin(a.c0), math.cos(a.c0)
    return _compose(a, c, -s, -c, s)


def _sinh_cosh(x: float) -> tuple[float, float]:
    try:
        return math.sinh(x), math.cosh(x)
    except OverflowError:
        raise DomainError(f"sinh/cosh overflow at {x!r}") from None


def _sinh(a: Jet3) -> Jet3:
    s, c = _sinh_cosh(a.c0)
    return _compose(a, s, c, s, c)


def _cosh(a: Jet3) -> Jet3:
    s, c = _sinh_cosh(a.c0)
    return _compose(a, c, s, c, s)


def _tan(a: Jet3) -> Jet3:
    if abs(math.cos(a.c0)) < 1e-15:
        raise DomainError(f"tan undefined at {a.c0!r}")
    t = math.tan(a.c0)
    sec2 = 1.0 + t * t
    return _compose(a, t, sec2, 2.0 * t * sec2, 2.0 * sec2 * (1.0 + 3.0 * t * t))


def _tanh(a: Jet3) -> Jet3:
    t = math.tanh(a.c0)
    sech2 = 1.0 - t * t
    return _compose(a, t, sech2, -2.0 * t * sech2, sech2 * (6.0 * t * t - 2.0))


def _exp(a: Jet3) -> Jet3:
    try:
        e = math.exp(a.c0)
    except OverflowError:
        raise DomainError(f"exp overflows at {a.c0!r}") from None
    return _compose(a, e, e, e, e)


def _ln(a: Jet3) -> Jet3:
    x = a.c0
    if not x > 0.0:
        raise DomainError(f"ln requires a positive argument, got {x!r}")
    return _compose(a, math.log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x))


def _sqrt(a: Jet3) -> Jet3:
    x = a.c0
    if not x > 0.0:
        raise DomainError(f"sqrt requires a positive argument, got {x!r}")
    r = math.sqrt(x)
    return _compose(a, r, 0.5 / r, -0.25 / (r * x), 0.375 / (r * x * x))


ELEMENTARY: dict[str, Callable[[Jet3], Jet3]] = {
    "sin": _sin,
    "cos": _cos,
    "sinh": _sinh,
    "cosh": _cosh,
    "tan": _tan,
    "tanh": _tanh,
    "exp": _exp,
    "ln": _ln,
    "sqrt": _sqrt,
}


def jet_apply(fn: str, a: Jet3) -> Jet3:
    """Apply the elementary function named ``fn`` to ``a``."""
    try:
        impl = ELEMENTARY[fn]
    except KeyError:
        raise DomainError(f"unknown elementary function {fn!r}") from None
    return impl(a)


def jet_add(a: Jet3, b: Jet3) -> Jet3:
    return a + b


def jet_sub(a: Jet3, b: Jet3) -> Jet3:
    return a - b


def jet_mul(a: Jet3, b: Jet3) -> Jet3:
    return a * b


def jet_div(a: Jet3, b: Jet3) -> Jet3:
    return a / b


def jet_neg(a: Jet3) -> Jet3:
    return -a


def jet_pow(a: Jet3, b: Union[Jet3, Number]) -> Jet3:
    """``a ** b``.

    Integer exponents (a plain int, or a constant jet with an integral value)
    use repeated multiplication; anything else goes through exp(b ln a) and
    needs a positive base.
    """
    if isinstance(b, Jet3):
        if b.c1 == 0.0 and b.c2 == 0.0 and b.c3 == 0.0 and float(b.c0).is_integer():
            b = int(b.c0)
        else:
            return _exp(b * _ln(a))
    elif isinstance(b, float) and b.is_integer():
        b = int(b)
    if isinstance(b, int):
        if b < 0:
            return _int_power(a, -b).reciprocal()
        return _int_power(a, b)
    return _exp(_ln(a) * float(b))


def _int_power(a: Jet3, n: int) -> Jet3:
    result = Jet3(1.0)
    base = a
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result
