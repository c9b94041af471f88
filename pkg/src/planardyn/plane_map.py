"""The induced plane homeomorphism and the tangent compactification.

The square homeomorphism keeps its interesting dynamics on the boundary of
the square; conjugating by the boundary collapse moves that onto the two
interior slits, and the componentwise tangent chart then carries the open
square onto the whole plane.  The result is a fixed-point-free,
orientation-reversing homeomorphism of the plane whose every orbit is
bounded: forward and backward limit sets are the two points (+-1, 0), the
chart images of the slit endpoints' approach directions.

``lifted_orbit`` is the default way to iterate: it pulls the seed back to
an exact rational point of the square once, iterates the exact square map,
and pushes each iterate forward, so long orbits accumulate no rounding.
Iterating ``plane_homeo`` directly (the naive composition) is kept for
cross-validation over short horizons.

``example_shift_reflection`` is the classical shift-composed-with-
reflection example of a fixed-point-free plane map with unbounded orbits,
included as a contrast case for the certificates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .collapse_map import collapse, collapse_inv
from .numerics import DomainError, bigfloat_to_rational, to_bigfloat
from .square_map import square_homeo

PIN_HALF = Fraction(1, 2)


def tangent_chart(p, ctx, inverse: bool = False):
    """Componentwise tangent map of the open square onto the plane.

    Forward: (r, s) -> (tan(pi r / 2), tan(pi s / 2)), domain the open
    square (coordinates strictly inside (-1, 1)).  Inverse: componentwise
    (2/pi) arctan, defined on the whole plane.
    """
    if inverse:
        x, y = to_bigfloat(p[0], ctx), to_bigfloat(p[1], ctx)
        two_over_pi = 2 / ctx.pi
        return (two_over_pi * ctx.atan(x), two_over_pi * ctx.atan(y))
    r, s = to_bigfloat(p[0], ctx), to_bigfloat(p[1], ctx)
    if abs(r) >= 1 or abs(s) >= 1:
        raise DomainError(f"point ({r}, {s}) outside the open square")
    half_pi = ctx.pi / 2
    return (ctx.tan(half_pi * r), ctx.tan(half_pi * s))


def _pinned(r, s) -> bool:
    """The set where the collapse is not invertible: square boundary, fiber
    excluded, plus the two closed slits."""
    return abs(r) == 1 or abs(s) == 1 or (s == 0 and 2 * abs(r) >= 1)


def _rationalize_square(w) -> Tuple[Fraction, Fraction]:
    """Exact rational value of a big-float square point, nudged back onto
    the square when rounding overshot the boundary by an ulp."""
    out = []
    for v in w:
        q = bigfloat_to_rational(v)
        if q > 1:
            if q - 1 > Fraction(1, 2**48):
                raise DomainError(f"coordinate {q} escaped the square")
            q = Fraction(1)
        elif q < -1:
            if -1 - q > Fraction(1, 2**48):
                raise DomainError(f"coordinate {q} escaped the square")
            q = Fraction(-1)
        out.append(q)
    return (out[0], out[1])


def quotient_square_map(x, ctx, inverse: bool = False):
    """The square homeomorphism pushed through the boundary collapse.

    On the pinned set (square boundary and both closed slits) the map is
    the reflection across the vertical axis, matching the interior limit;
    elsewhere it is collapse o square map o collapse-inverse, with the
    middle step running on exact rationals.
    """
    r, s = x
    if abs(r) > 1 or abs(s) > 1:
        raise DomainError(f"point ({r}, {s}) outside the square")
    if _pinned(r, s):
        return (-r, s)
    w = _rationalize_square(collapse_inv((r, s), ctx))
    image = square_homeo(w, inverse=inverse)
    return collapse(image, ctx)


def plane_homeo(x, ctx, inverse: bool = False):
    """The induced plane homeomorphism (tangent-chart conjugate).

    The two horizontal rays |x| >= 1, y = 0 (chart images of the slits)
    map by exact reflection, so ray points are period-two and stay exact;
    everything else goes through the charts.
    """
    x1, x2 = x
    if x2 == 0 and abs(x1) >= 1:
        return (-x1, x2)
    q = tangent_chart((x1, x2), ctx, inverse=True)
    gq = quotient_square_map(q, ctx, inverse=inverse)
    return tangent_chart(gq, ctx)


def lifted_core(
    x, n_range: Tuple[int, int], ctx
) -> List[Tuple[int, Optional[Tuple[Fraction, Fraction]], tuple]]:
    """Exact-core orbit data of the plane map.

    Returns a list of (n, square lift, plane point) for n in the inclusive
    range.  The seed is pulled back to an exact rational square point once;
    all iteration happens there.  Ray seeds have no square lift (entry
    None) and alternate exactly between their two positions.
    """
    n_lo, n_hi = n_range
    if n_lo > n_hi:
        raise DomainError(f"empty step range {n_range}")
    x1, x2 = x
    if x2 == 0 and abs(x1) >= 1:
        return [
            (n, None, (x1 if n % 2 == 0 else -x1, x2)) for n in range(n_lo, n_hi + 1)
        ]
    q = tangent_chart((x1, x2), ctx, inverse=True)
    w0 = _rationalize_square(collapse_inv(q, ctx))
    lifts = {0: w0}
    w = w0
    for n in range(1, n_hi + 1):
        w = square_homeo(w)
        lifts[n] = w
    w = w0
    for n in range(-1, n_lo - 1, -1):
        w = square_homeo(w, inverse=True)
        lifts[n] = w
    out = []
    for n in range(n_lo, n_hi + 1):
        wn = lifts[n]
        out.append((n, wn, tangent_chart(collapse(wn, ctx), ctx)))
    return out


def lifted_orbit(x, n_range: Tuple[int, int], ctx) -> List[Tuple[int, tuple]]:
    """Plane orbit via the exact lift: list of (n, plane point)."""
    return [(n, y) for n, _, y in lifted_core(x, n_range, ctx)]


def example_shift_reflection(p, inverse: bool = False):
    """Shift-composed-with-reflection plane map: fixed-point free, orbits
    unbounded.  (x, y) -> (-x, y - |x| + 1) for |x| < 1, plain reflection
    beyond; exact on rational input."""
    x, y = p
    ax = abs(x)
    if ax >= 1:
        return (-x, y)
    if inverse:
        return (-x, y + ax - 1)
    return (-x, y - ax + 1)
