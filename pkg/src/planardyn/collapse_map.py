"""Boundary collapse of the square onto itself, built from two polar charts.

The goal is a continuous surjection of the closed square that fixes the
vertical fiber through the origin pointwise, halves the horizontal axis,
sends each vertical edge to a single interior point on the axis, and folds
the top and bottom edges onto a path ending in a horizontal slit.  The
interior of the square maps homeomorphically onto the open square minus the
two closed slits; conjugating the square homeomorphism by this map later
turns boundary dynamics into interior dynamics with the slit endpoints as
the only limit points.

Construction on the right half (the left half is its mirror):

* ``chart_S`` writes a point as (angle, radius) around the midpoint of the
  right edge, the radius normalized so the half-square boundary is radius
  one; the chart rectangle is [0, pi] x [0, 1], angle 0 pointing straight
  down and pi straight up.
* ``chart_T`` does the same around the outer slit endpoint (1/2, 0), with
  the plain polar angle in [0, 2*pi]; the slit opens along the positive
  axis, its top side at angle 0 and bottom side at 2*pi.
* ``boundary_reparam`` carries the boundary circle of the first rectangle
  onto that of the second.  The central arc uses theta = pi - arctan(2 s)
  so the vertical fiber is fixed pointwise; two narrow arcs next to the
  straight-up and straight-down directions wrap onto the slit sides; the
  remaining radius-one arcs interpolate affinely, and the other three walls
  land on the radius-zero wall, which the target chart collapses to the
  slit endpoint.  The width of the narrow arcs, ``slit_arc_angle``, is a
  free parameter of the construction; it is pinned to pi / 2**15 here,
  narrow enough that orbits of the induced plane map climb past norm 10**3
  before settling (see the excursion certificate).
* ``cone_map`` extends the boundary correspondence radially from the
  centers of the two rectangles.

All functions take an explicit mpmath-style context; nothing reads or
writes global precision.  Points may be handed in as exact rationals,
floats, or context floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .numerics import DomainError, SlitError, angle_normalize, to_bigfloat

# Chart anchor points: midpoint of the right edge, outer right slit endpoint.
EDGE_MID = (Fraction(1), Fraction(0))
SLIT_OUTER = (Fraction(1, 2), Fraction(0))

# slit_arc_angle = pi / SLIT_ARC_DENOM
SLIT_ARC_DENOM = 32768


@lru_cache(maxsize=None)
def _consts(ctx):
    pi = +ctx.pi
    return {
        "pi": pi,
        "two_pi": 2 * pi,
        "half_pi": pi / 2,
        "quarter_pi": pi / 4,
        "corner": ctx.atan(2),  # slit-chart angle of the top-right corner
        "astar": pi / SLIT_ARC_DENOM,
        "one": to_bigfloat(1, ctx),
        "zero": to_bigfloat(0, ctx),
        "half": to_bigfloat(Fraction(1, 2), ctx),
        "snap": to_bigfloat(Fraction(1, 2 ** max(getattr(ctx, "prec", 53) - 8, 16)), ctx),
    }


def slit_arc_angle(ctx):
    """Angular width of the two slit arcs in the edge chart."""
    return _consts(ctx)["astar"]


def _pt(x, ctx):
    return (to_bigfloat(x[0], ctx), to_bigfloat(x[1], ctx))


def _hyp(ctx, a, b):
    # the machine-float context has no hypot; magnitudes here are <= 2
    return ctx.sqrt(a * a + b * b)


def _soft_clamp(v, lo, hi, ctx):
    """Clamp a value that may overshoot an interval by accumulated rounding."""
    snap = _consts(ctx)["snap"]
    if v < lo:
        if lo - v > snap * (1 + abs(lo)):
            raise DomainError(f"value {v} below {lo}")
        return lo
    if v > hi:
        if v - hi > snap * (1 + abs(hi)):
            raise DomainError(f"value {v} above {hi}")
        return hi
    return v


def exit_point(center, angle, ctx) -> Tuple:
    """Where the ray from a chart center at a chart angle leaves the half-square.

    The half-square is [0, 1] x [-1, 1].  From the right-edge midpoint the
    chart angle runs 0 (straight down) through pi/2 (toward the fiber) to
    pi (straight up); from the slit endpoint it is the polar angle in
    [0, 2*pi].
    """
    c = (Fraction(center[0]), Fraction(center[1]))
    k = _consts(ctx)
    a = to_bigfloat(angle, ctx)
    if c == EDGE_MID:
        if a < 0 or a > k["pi"]:
            raise DomainError(f"edge chart angle {a} outside [0, pi]")
        if a <= k["quarter_pi"]:
            return (1 - ctx.tan(a), -k["one"])
        if a < 3 * k["quarter_pi"]:
            return (k["zero"], -ctx.cos(a) / ctx.sin(a))
        return (1 - ctx.tan(k["pi"] - a), k["one"])
    if c == SLIT_OUTER:
        if a < 0 or a > k["two_pi"]:
            raise DomainError(f"slit chart angle {a} outside [0, 2*pi]")
        if a <= k["corner"] or a >= k["two_pi"] - k["corner"]:
            return (k["one"], ctx.tan(a) / 2)
        if a <= k["pi"] - k["corner"]:
            return (k["half"] + ctx.cos(a) / ctx.sin(a), k["one"])
        if a <= k["pi"] + k["corner"]:
            return (k["zero"], -ctx.tan(a) / 2)
        return (k["half"] - ctx.cos(a) / ctx.sin(a), -k["one"])
    raise DomainError(f"unknown chart center {center}")


def chart_S(x, ctx, inverse: bool = False):
    """Polar chart around the right-edge midpoint, rectangle [0, pi] x [0, 1].

    Forward input is a point of the right half-square other than the
    center itself; output is (angle, radius).  Inverse maps a rectangle
    point back into the half-square.
    """
    k = _consts(ctx)
    if inverse:
        alpha = _soft_clamp(to_bigfloat(x[0], ctx), k["zero"], k["pi"], ctx)
        rho = _soft_clamp(to_bigfloat(x[1], ctx), k["zero"], k["one"], ctx)
        e = exit_point(EDGE_MID, alpha, ctx)
        return (1 + rho * (e[0] - 1), rho * e[1])
    px, py = _pt(x, ctx)
    if px < 0 or px > 1 or py < -1 or py > 1:
        raise DomainError(f"point ({px}, {py}) outside the right half-square")
    dx, dy = px - 1, py
    if dx == 0 and dy == 0:
        raise DomainError("edge chart is degenerate at its center")
    phi = ctx.atan2(dy, dx)
    if phi < k["half_pi"]:
        phi = phi + k["two_pi"]
    alpha = _soft_clamp(3 * k["half_pi"] - phi, k["zero"], k["pi"], ctx)
    e = exit_point(EDGE_MID, alpha, ctx)
    rho = _hyp(ctx, dx, dy) / _hyp(ctx, e[0] - 1, e[1])
    return (alpha, _soft_clamp(rho, k["zero"], k["one"], ctx))


def chart_T(y, ctx, inverse: bool = False):
    """Polar chart around the outer slit endpoint, rectangle [0, 2*pi] x [0, 1].

    Forward input must stay off the closed slit ray (where the angle is
    ambiguous between the 0 and 2*pi sides); the center itself is
    degenerate.  Inverse maps (angle, radius) back to the half-square.
    """
    k = _consts(ctx)
    if inverse:
        theta = _soft_clamp(to_bigfloat(y[0], ctx), k["zero"], k["two_pi"], ctx)
        rho = _soft_clamp(to_bigfloat(y[1], ctx), k["zero"], k["one"], ctx)
        e = exit_point(SLIT_OUTER, theta, ctx)
        return (k["half"] + rho * (e[0] - k["half"]), rho * e[1])
    py0, py1 = _pt(y, ctx)
    if py1 == 0 and py0 >= k["half"]:
        raise SlitError(f"point ({py0}, {py1}) lies on the slit ray")
    theta = angle_normalize((py0, py1), (k["half"], k["zero"]), ctx)
    e = exit_point(SLIT_OUTER, theta, ctx)
    rho = _hyp(ctx, py0 - k["half"], py1) / _hyp(ctx, e[0] - k["half"], e[1])
    return (theta, _soft_clamp(rho, k["zero"], k["one"], ctx))


def boundary_reparam(b, ctx, inverse: bool = False):
    """Boundary correspondence between the two chart rectangles.

    Forward: a boundary point (angle, radius) of the edge-chart rectangle
    goes to a boundary point of the slit-chart rectangle.  The radius-one
    wall splits into five arcs: slit-bottom [0, astar] wrapping onto the
    slit's 2*pi side, an affine arc [astar, pi/4], the central arc
    [pi/4, 3*pi/4] carried by theta = pi - arctan(2*tan(angle - pi/2)),
    an affine arc [3*pi/4, pi - astar], and slit-top [pi - astar, pi]
    wrapping onto the slit's 0 side.  The other three walls land affinely
    on the radius-zero wall of the target.  Bijective on the boundary
    circles; conjugates the vertical flip (angle -> pi - angle) to the
    reflection theta -> 2*pi - theta.
    """
    k = _consts(ctx)
    pi, two_pi, astar = k["pi"], k["two_pi"], k["astar"]
    span = k["quarter_pi"] - astar  # angular width of each affine arc
    stretch = pi - k["corner"]  # image width of each affine arc
    third = two_pi / 3
    if inverse:
        theta, rho = to_bigfloat(b[0], ctx), to_bigfloat(b[1], ctx)
        if rho == 1:
            if theta < 0 or theta > two_pi:
                raise DomainError(f"slit chart angle {theta} outside [0, 2*pi]")
            if theta <= pi - k["corner"]:
                return ((pi - astar) - theta * span / stretch, k["one"])
            if theta <= pi + k["corner"]:
                return (k["half_pi"] + ctx.atan(ctx.tan(pi - theta) / 2), k["one"])
            return (astar + (two_pi - theta) * span / stretch, k["one"])
        if theta == 0:
            return (pi - astar * rho, k["one"])
        if theta == two_pi:
            return (astar * rho, k["one"])
        if rho == 0:
            if theta <= third:
                return (pi, 1 - theta / third)
            if theta <= 2 * third:
                return (two_pi - 3 * theta / 2, k["zero"])
            return (k["zero"], (theta - 2 * third) / third)
        raise DomainError(f"({theta}, {rho}) not on the slit-chart boundary")
    alpha, rho = to_bigfloat(b[0], ctx), to_bigfloat(b[1], ctx)
    if rho == 1:
        if alpha < 0 or alpha > pi:
            raise DomainError(f"edge chart angle {alpha} outside [0, pi]")
        if alpha <= astar:
            return (two_pi, alpha / astar)
        if alpha < k["quarter_pi"]:
            return (two_pi - (alpha - astar) * stretch / span, k["one"])
        if alpha <= 3 * k["quarter_pi"]:
            return (pi - ctx.atan(2 * ctx.tan(alpha - k["half_pi"])), k["one"])
        if alpha < pi - astar:
            return (((pi - astar) - alpha) * stretch / span, k["one"])
        return (k["zero"], (pi - alpha) / astar)
    if rho == 0:
        return (third * (2 - alpha / pi), k["zero"])
    if alpha == pi:
        return (third * (1 - rho), k["zero"])
    if alpha == 0:
        return (2 * third + rho * third, k["zero"])
    raise DomainError(f"({alpha}, {rho}) not on the edge-chart boundary")


def _rect(which, ctx):
    """(lo0, hi0, center) of a chart rectangle; radial bounds are [0, 1]."""
    k = _consts(ctx)
    if which == "U":
        return k["zero"], k["pi"], (k["half_pi"], k["half"])
    return k["zero"], k["two_pi"], (k["pi"], k["half"])


def _ray_exit(u, which, ctx):
    """Boundary hit of the ray from the rectangle center through u.

    Returns (boundary point, ray parameter); the boundary point is snapped
    exactly onto the achieving wall so the arc dispatch downstream sees
    exact wall coordinates.
    """
    k = _consts(ctx)
    lo0, hi0, c = _rect(which, ctx)
    u0 = _soft_clamp(to_bigfloat(u[0], ctx), lo0, hi0, ctx)
    u1 = _soft_clamp(to_bigfloat(u[1], ctx), k["zero"], k["one"], ctx)
    d0, d1 = u0 - c[0], u1 - c[1]
    if d0 == 0 and d1 == 0:
        raise DomainError("ray undefined at the rectangle center")
    best = None
    for d, lo, hi, ci, axis in ((d0, lo0, hi0, c[0], 0), (d1, k["zero"], k["one"], c[1], 1)):
        if d == 0:
            continue
        tau = (hi - ci) / d if d > 0 else (lo - ci) / d
        if best is None or tau < best[0]:
            wall = hi if d > 0 else lo
            best = (tau, axis, wall)
    tau, axis, wall = best
    b0 = c[0] + tau * d0
    b1 = c[1] + tau * d1
    if axis == 0:
        b0 = wall
        b1 = _soft_clamp(b1, k["zero"], k["one"], ctx)
    else:
        b1 = wall
        b0 = _soft_clamp(b0, lo0, hi0, ctx)
    return (b0, b1), tau


def cone_map(u, ctx, inverse: bool = False):
    """Radial extension of the boundary correspondence, center to center.

    Forward sends the edge-chart rectangle onto the slit-chart rectangle:
    the center (pi/2, 1/2) goes to (pi, 1/2), and the point at fraction t
    of the way from the center to a boundary point goes to the fraction-t
    point toward that boundary point's image.  Bijective; the inverse runs
    the same recipe through the inverse boundary correspondence.
    """
    src, dst = ("V", "U") if inverse else ("U", "V")
    _, _, c_src = _rect(src, ctx)
    _, _, c_dst = _rect(dst, ctx)
    u0, u1 = to_bigfloat(u[0], ctx), to_bigfloat(u[1], ctx)
    if u0 == c_src[0] and u1 == c_src[1]:
        return c_dst
    b, tau = _ray_exit((u0, u1), src, ctx)
    t = 1 / tau  # in (0, 1]; exactly 1 when u already sits on the boundary
    lb = boundary_reparam(b, ctx, inverse=inverse)
    return (c_dst[0] + t * (lb[0] - c_dst[0]), c_dst[1] + t * (lb[1] - c_dst[1]))


def _collapse_charts(x, ctx):
    """Chart composition of the collapse on the right half, no shortcut pins.

    Used by the verification suite to confirm that the pinned values
    (fiber, axis, edges) are what the charts themselves produce.
    """
    px, py = _pt(x, ctx)
    if px < 0:
        mirrored = _collapse_charts((-px, py), ctx)
        return (-mirrored[0], mirrored[1])
    a = chart_S((px, py), ctx)
    w = cone_map(a, ctx)
    return chart_T(w, ctx, inverse=True)


def collapse(x, ctx):
    """The boundary collapse.  Defined on the whole closed square.

    Pins: the central fiber is fixed pointwise, the horizontal axis is
    halved, each vertical edge goes to the slit endpoint on its side, and
    the map commutes with both reflections of the square.  Interior points
    off the axis and fiber go through the charts.
    """
    r, s = x
    if abs(r) > 1 or abs(s) > 1:
        raise DomainError(f"point ({r}, {s}) outside the square")
    zero = to_bigfloat(0, ctx)
    if r == 0:
        return (zero, to_bigfloat(s, ctx))
    if r < 0:
        y = collapse((-r, s), ctx)
        return (-y[0], y[1])
    if r == 1:
        return (to_bigfloat(Fraction(1, 2), ctx), zero)
    if s == 0:
        return (to_bigfloat(r, ctx) / 2, zero)
    return _collapse_charts((r, s), ctx)


def collapse_inv(y, ctx):
    """Inverse of the collapse on its interior image.

    Defined on the open square minus the two closed slits.  Points of the
    slits (endpoints included) have no single preimage and raise SlitError;
    points on or outside the square boundary raise DomainError.
    """
    y1, y2 = y
    if abs(y1) >= 1 or abs(y2) >= 1:
        raise DomainError(f"point ({y1}, {y2}) outside the open square")
    zero = to_bigfloat(0, ctx)
    if y1 == 0:
        return (zero, to_bigfloat(y2, ctx))
    if y2 == 0:
        if 2 * abs(y1) >= 1:
            raise SlitError(f"point ({y1}, 0) lies on a collapse slit")
        return (2 * to_bigfloat(y1, ctx), zero)
    if y1 < 0:
        xm = collapse_inv((-y1, y2), ctx)
        return (-xm[0], xm[1])
    w = chart_T((to_bigfloat(y1, ctx), to_bigfloat(y2, ctx)), ctx)
    a = cone_map(w, ctx, inverse=True)
    return chart_S(a, ctx, inverse=True)
