"""Exact rationals, big-float contexts, tolerances, piecewise-linear maps.

Everything on the square side of the construction is piecewise affine with
rational data, so those maps run on exact rationals and their claims are
checked with equality.  Floating point enters only through the charts and
the tangent compactification, which need arctangents; those run inside an
explicit mpmath context created by :func:`make_context` and passed around
as a value, never global state.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

import mpmath

Rational = Fraction

Numeric = Union[Fraction, int, float]

DEFAULT_PRECISION = 256


class DomainError(ValueError):
    """Input outside the declared domain of a map or chart."""


class SlitError(DomainError):
    """Point on a collapse slit, where the inverse is undefined."""


def make_context(prec: int = DEFAULT_PRECISION):
    """Return an independent mpmath context with the given binary precision.

    Contexts are cheap; make one per run / per precision and pass it
    explicitly.  ``mpmath.fp`` (hardware doubles, same method surface) is
    accepted anywhere a context is, for coarse fast scans.
    """
    if prec < 8:
        raise DomainError(f"precision too small: {prec}")
    ctx = mpmath.mp.clone()
    ctx.prec = prec
    return ctx


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q', integer, or finite decimal text into an exact Rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational literal: {text!r}") from exc


def to_bigfloat(value, ctx):
    """Convert Rational/int/float/str to the context's float type, correctly rounded."""
    if isinstance(value, Fraction):
        # mpmath contexts round p/q correctly via convert(); the double
        # context constructs through float division.
        try:
            return ctx.convert(value)
        except TypeError:
            return value.numerator / value.denominator
    return ctx.convert(value)


def bigfloat_to_rational(x) -> Fraction:
    """Exact Rational value of a finite big float (every mpf is dyadic)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, float)):
        return Fraction(x)
    p, q = mpmath.libmp.to_rational(x._mpf_)
    return Fraction(int(p), int(q))


def angle_normalize(y, center, ctx):
    """Polar angle of ``y`` around ``center`` normalized into [0, 2*pi).

    Raises DomainError when ``y == center`` (direction undefined).
    """
    dx = to_bigfloat(y[0], ctx) - to_bigfloat(center[0], ctx)
    dy = to_bigfloat(y[1], ctx) - to_bigfloat(center[1], ctx)
    if dx == 0 and dy == 0:
        raise DomainError("angle undefined at the center itself")
    theta = ctx.atan2(dy, dx)
    if theta < 0:
        theta = theta + 2 * ctx.pi
    # atan2(-0.0, positive) can leave an exact 2*pi after the wrap
    if theta >= 2 * ctx.pi:
        theta = ctx.zero if hasattr(ctx, "zero") else 0.0
    return theta


@dataclass(frozen=True)
class Tolerances:
    """Named tolerances used across charts and dynamics.

    chart_roundtrip : max |x - inv(fw(x))| for the collapse charts
    commutation     : max defect in exact-symmetry identities checked in floats
    limitset        : clustering radius / limit-set matching radius
    horizon         : default orbit length for limit estimates
    """

    chart_roundtrip: float = 1e-25
    commutation: float = 1e-30
    limitset: float = 1e-3
    horizon: int = 400

    def __post_init__(self):
        if not (self.chart_roundtrip > 0 and self.commutation > 0 and self.limitset > 0):
            raise DomainError("tolerances must be positive")
        if self.horizon < 1:
            raise DomainError("horizon must be at least 1")


DEFAULT_TOLERANCES = Tolerances()


class PLFunction:
    """Strictly increasing piecewise-linear bijection of [-1, 1].

    Breakpoints are exact rationals, strictly increasing in both
    coordinates, with endpoints (-1, -1) ... (1, 1) pinned.  Evaluation and
    inversion are exact on Rational inputs.
    """

    __slots__ = ("xs", "ys", "slopes")

    def __init__(self, points: Sequence[Tuple[Numeric, Numeric]]):
        cleaned = []
        for x, y in points:
            x, y = Fraction(x), Fraction(y)
            if cleaned and (x, y) == cleaned[-1]:
                continue  # collapsed breakpoint (shear profile at n = 1)
            cleaned.append((x, y))
        if len(cleaned) < 2:
            raise DomainError("need at least two distinct breakpoints")
        xs = tuple(p[0] for p in cleaned)
        ys = tuple(p[1] for p in cleaned)
        if xs[0] != -1 or xs[-1] != 1:
            raise DomainError("breakpoint abscissas must span [-1, 1]")
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise DomainError("breakpoint abscissas must be strictly increasing")
        if any(a >= b for a, b in zip(ys, ys[1:])):
            raise DomainError("breakpoint ordinates must be strictly increasing")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(
            self,
            "slopes",
            tuple(
                (ys[k + 1] - ys[k]) / (xs[k + 1] - xs[k]) for k in range(len(xs) - 1)
            ),
        )

    def __setattr__(self, name, value):
        raise AttributeError("PLFunction is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PLFunction)
            and self.xs == other.xs
            and self.ys == other.ys
        )

    def __hash__(self):
        return hash((self.xs, self.ys))

    def __repr__(self):
        pts = ", ".join(f"({x},{y})" for x, y in zip(self.xs, self.ys))
        return f"PLFunction[{pts}]"

    @property
    def breakpoints(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        return tuple(zip(self.xs, self.ys))

    def segment_index(self, x: Fraction) -> int:
        """Index of the affine piece containing ``x`` (last piece at x = 1)."""
        if x < -1 or x > 1:
            raise DomainError(f"PL argument {x} outside [-1, 1]")
        k = bisect.bisect_right(self.xs, x) - 1
        return min(max(k, 0), len(self.xs) - 2)

    def __call__(self, x: Numeric) -> Fraction:
        x = Fraction(x)
        k = self.segment_index(x)
        return self.ys[k] + self.slopes[k] * (x - self.xs[k])

    def inverse(self, y: Numeric) -> Fraction:
        y = Fraction(y)
        if y < self.ys[0] or y > self.ys[-1]:
            raise DomainError(f"PL value {y} outside [-1, 1]")
        k = bisect.bisect_right(self.ys, y) - 1
        k = min(max(k, 0), len(self.ys) - 2)
        return self.xs[k] + (y - self.ys[k]) / self.slopes[k]

    def inverse_fn(self) -> "PLFunction":
        """The inverse bijection as a PLFunction (ordinates become abscissas)."""
        return PLFunction(tuple(zip(self.ys, self.xs)))

    def blend(self, other: "PLFunction", t: Numeric) -> "PLFunction":
        """Pointwise convex combination (1-t)*self + t*other, exact.

        A convex combination of strictly increasing PL bijections fixing
        the endpoints is again one; its breakpoints are the merged
        abscissas of the two operands.
        """
        t = Fraction(t)
        if t < 0 or t > 1:
            raise DomainError(f"blend weight {t} outside [0, 1]")
        if t == 0:
            return self
        if t == 1:
            return other
        xs = sorted(set(self.xs) | set(other.xs))
        return PLFunction([(x, (1 - t) * self(x) + t * other(x)) for x in xs])

    def is_identity(self) -> bool:
        return self.xs == self.ys


IDENTITY_PL = PLFunction([(-1, -1), (1, 1)])


def pl_eval(fn: PLFunction, x: Numeric, inverse: bool = False) -> Fraction:
    """Evaluate a piecewise-linear bijection (or its inverse) exactly."""
    return fn.inverse(x) if inverse else fn(x)
