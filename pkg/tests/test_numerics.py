"""Exact piecewise-linear functions and the big-float working context."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planardyn.numerics import (
    DEFAULT_PRECISION,
    DEFAULT_TOLERANCES,
    IDENTITY_PL,
    DomainError,
    PLFunction,
    SlitError,
    Tolerances,
    angle_normalize,
    bigfloat_to_rational,
    make_context,
    parse_rational,
    pl_eval,
    to_bigfloat,
)

PROFILE = PLFunction([(-1, -1), (Fraction(-1, 2), 0), (0, Fraction(1, 2)), (1, 1)])

unit_fractions = st.fractions(
    min_value=Fraction(-1), max_value=Fraction(1), max_denominator=256
)


def test_context_precision():
    assert make_context().prec == DEFAULT_PRECISION
    assert make_context(64).prec == 64


def test_context_is_independent(ctx):
    import mpmath

    assert ctx.prec == DEFAULT_PRECISION
    assert mpmath.mp.prec != DEFAULT_PRECISION or mpmath.mp is not ctx


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-0.25") == Fraction(-1, 4)
    assert parse_rational("2") == 2


def test_to_bigfloat_exact_on_dyadics(ctx):
    x = to_bigfloat(Fraction(-13, 32), ctx)
    assert x == ctx.mpf(-13) / 32
    assert bigfloat_to_rational(x) == Fraction(-13, 32)


def test_bigfloat_roundtrip_error_is_tiny(ctx):
    x = to_bigfloat(Fraction(1, 3), ctx)
    assert abs(bigfloat_to_rational(x) - Fraction(1, 3)) < Fraction(1, 2**250)


def test_angle_normalize_range(ctx):
    # angle 0 along the positive horizontal from the center, pi/2 straight up
    assert angle_normalize((ctx.mpf(1), ctx.mpf(0)), (ctx.mpf(0.5), ctx.mpf(0)), ctx) == 0
    up = angle_normalize((ctx.mpf(0.5), ctx.mpf(1)), (ctx.mpf(0.5), ctx.mpf(0)), ctx)
    assert abs(up - ctx.pi / 2) < ctx.mpf(10) ** -70


def test_tolerances_defaults():
    t = DEFAULT_TOLERANCES
    assert t.chart_roundtrip == 1e-25
    assert t.commutation == 1e-30
    assert t.limitset == 1e-3
    assert t.horizon == 400


def test_tolerances_validate():
    with pytest.raises(DomainError):
        Tolerances(chart_roundtrip=-1.0)


def test_slit_error_is_domain_error():
    assert issubclass(SlitError, DomainError)


def test_profile_breakpoint_values():
    assert PROFILE(Fraction(-1)) == -1
    assert PROFILE(Fraction(-1, 2)) == 0
    assert PROFILE(Fraction(0)) == Fraction(1, 2)
    assert PROFILE(Fraction(1)) == 1
    assert PROFILE(Fraction(1, 4)) == Fraction(5, 8)
    assert PROFILE(Fraction(-3, 4)) == Fraction(-1, 2)


def test_profile_inverse_values():
    assert PROFILE.inverse(Fraction(1, 2)) == 0
    assert PROFILE.inverse(Fraction(3, 4)) == Fraction(1, 2)
    assert pl_eval(PROFILE, Fraction(3, 4), inverse=True) == Fraction(1, 2)


def test_outside_domain_raises():
    with pytest.raises(DomainError):
        PROFILE(Fraction(9, 8))
    with pytest.raises(DomainError):
        PROFILE.inverse(Fraction(-2))


def test_degenerate_breakpoints_rejected():
    with pytest.raises(DomainError):
        PLFunction([(0, 0), (0, 1)])  # abscissas span less than [-1, 1]
    with pytest.raises(DomainError):
        PLFunction([(-1, 1), (1, 0)])  # ordinates not increasing


def test_identity_pl():
    assert IDENTITY_PL.is_identity()
    assert not PROFILE.is_identity()
    assert IDENTITY_PL(Fraction(-3, 7)) == Fraction(-3, 7)


def test_inverse_fn_swaps_breakpoints():
    inv = PROFILE.inverse_fn()
    assert inv.breakpoints == tuple((y, x) for x, y in PROFILE.breakpoints)
    assert inv(Fraction(5, 8)) == Fraction(1, 4)


def test_equality_and_hash():
    again = PLFunction([(-1, -1), (Fraction(-1, 2), 0), (0, Fraction(1, 2)), (1, 1)])
    assert PROFILE == again
    assert hash(PROFILE) == hash(again)
    assert PROFILE != IDENTITY_PL


def test_blend_endpoints_are_the_operands():
    assert IDENTITY_PL.blend(PROFILE, Fraction(0)) == IDENTITY_PL
    assert IDENTITY_PL.blend(PROFILE, Fraction(1)) == PROFILE


@given(unit_fractions)
def test_profile_roundtrip_exact(x):
    assert PROFILE.inverse(PROFILE(x)) == x


@given(unit_fractions, unit_fractions)
def test_profile_strictly_increasing(x, y):
    if x < y:
        assert PROFILE(x) < PROFILE(y)


@given(
    unit_fractions,
    st.fractions(min_value=Fraction(0), max_value=Fraction(1), max_denominator=64),
)
@settings(deadline=None)
def test_blend_is_pointwise_convex_combination(x, t):
    blended = IDENTITY_PL.blend(PROFILE, t)
    assert blended(x) == (1 - t) * x + t * PROFILE(x)
