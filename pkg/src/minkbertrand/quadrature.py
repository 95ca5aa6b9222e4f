"""Adaptive Simpson quadrature for vector-valued integrands."""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .errors import QuadratureFailure

VecFn = Callable[[float], Sequence[float]]

MAX_INTERVALS = 2**20


def _simpson(h: float, fa, fm, fb) -> list[float]:
    return [h / 6.0 * (x + 4.0 * y + z) for x, y, z in zip(fa, fm, fb)]


def integrate_vector(
    fn: VecFn,
    a: float,
    b: float,
    tol: float = 1e-10,
    max_intervals: int = MAX_INTERVALS,
    min_depth: int = 2,
) -> tuple[float, ...]:
    """Integrate ``fn`` over [a, b] to absolute error ``tol`` per component.

    Classic adaptive Simpson with Richardson correction; the local tolerance
    halves with every bisection.  ``min_depth`` forced splits guard against
    accidental agreement of the coarse estimates on oscillatory integrands.
    Raises :class:`QuadratureFailure` once more than ``max_intervals``
    subintervals have been examined.
    """
    if a == b:
        return tuple(0.0 for _ in fn(a))
    if b < a:
        return tuple(-x for x in integrate_vector(fn, b, a, tol, max_intervals, min_depth))

    fa, fb = list(fn(a)), list(fn(b))
    m = 0.5 * (a + b)
    fm = list(fn(m))
    pieces: list[list[float]] = []
    stack = [(a, b, fa, fm, fb, _simpson(b - a, fa, fm, fb), tol, 0)]
    examined = 0
    while stack:
        lo, hi, flo, fmid, fhi, whole, eps, depth = stack.pop()
        examined += 1
        if examined > max_intervals:
            raise QuadratureFailure(
                f"adaptive Simpson exceeded {max_intervals} intervals on [{a!r}, {b!r}] at tol {tol!r}"
            )
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        if not (lo < lm < mid < rm < hi):
            # no room left to bisect; fine if the whole piece is below the local tolerance anyway
            bound = (hi - lo) * max(abs(x) for x in flo + fmid + fhi)
            if bound <= eps:
                pieces.append(whole)
                continue
            raise QuadratureFailure(f"interval collapsed near {mid!r} before reaching tol {tol!r}")
        flm = list(fn(lm))
        frm = list(fn(rm))
        left = _simpson(mid - lo, flo, flm, fmid)
        right = _simpson(hi - mid, fmid, frm, fhi)
        delta = [l + r - w for l, r, w in zip(left, right, whole)]
        if depth >= min_depth and max(abs(d) for d in delta) <= 15.0 * eps:
            pieces.append([l + r + d / 15.0 for l, r, d in zip(left, right, delta)])
        else:
            stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * eps, depth + 1))
            stack.append((lo, mid, flo, flm, fmid, left, 0.5 * eps, depth + 1))
    return tuple(math.fsum(col) for col in zip(*pieces))


def integrate(fn: Callable[[float], float], a: float, b: float, tol: float = 1e-10, **kw) -> float:
    """Scalar convenience wrapper around :func:`integrate_vector`."""
    return integrate_vector(lambda x: (fn(x),), a, b, tol, **kw)[0]
