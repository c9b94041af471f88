"""Charts around the collapsed edges and the edge-collapse map itself.

Chart arithmetic is big-float; assertions compare against closed forms at
a few digits below the working precision (256 bits ~ 77 decimal digits).
"""

from fractions import Fraction

import pytest

from planardyn.collapse_map import (
    EDGE_MID,
    SLIT_ARC_DENOM,
    SLIT_OUTER,
    boundary_reparam,
    chart_S,
    chart_T,
    collapse,
    collapse_inv,
    cone_map,
    exit_point,
    slit_arc_angle,
)
from planardyn.numerics import DomainError, SlitError, to_bigfloat

TIGHT = 1e-70


def _num(v):
    # mpf refuses mixed comparisons with Fraction; expectations are dyadic
    return float(v) if isinstance(v, Fraction) else v


def _close(p, q, eps=TIGHT):
    return all(abs(_num(a) - _num(b)) <= eps for a, b in zip(p, q))


def test_slit_arc_angle(ctx):
    assert SLIT_ARC_DENOM == 2**15
    assert slit_arc_angle(ctx) == ctx.pi / SLIT_ARC_DENOM


def test_chart_centers():
    assert EDGE_MID == (Fraction(1), Fraction(0))
    assert SLIT_OUTER == (Fraction(1, 2), Fraction(0))


class TestExitPoint:
    def test_edge_chart_walls(self, ctx):
        pi = +ctx.pi
        assert _close(exit_point(EDGE_MID, ctx.mpf(0), ctx), (1, -1))
        assert _close(exit_point(EDGE_MID, pi / 4, ctx), (0, -1))
        assert _close(exit_point(EDGE_MID, pi / 2, ctx), (0, 0))
        assert _close(exit_point(EDGE_MID, pi, ctx), (1, 1))

    def test_slit_chart_walls(self, ctx):
        pi = +ctx.pi
        assert _close(exit_point(SLIT_OUTER, ctx.mpf(0), ctx), (1, 0))
        assert _close(exit_point(SLIT_OUTER, pi / 2, ctx), (Fraction(1, 2), 1))
        assert _close(exit_point(SLIT_OUTER, pi, ctx), (0, 0))
        assert _close(exit_point(SLIT_OUTER, 3 * pi / 2, ctx), (Fraction(1, 2), -1))

    def test_angle_ranges(self, ctx):
        with pytest.raises(DomainError):
            exit_point(EDGE_MID, 4 * ctx.pi, ctx)
        with pytest.raises(DomainError):
            exit_point(SLIT_OUTER, -ctx.mpf(1), ctx)


class TestCharts:
    def test_edge_chart_pins(self, ctx):
        pi = +ctx.pi
        assert _close(chart_S((ctx.mpf(0), ctx.mpf(0)), ctx), (pi / 2, 1))
        assert _close(chart_S((ctx.mpf(1), ctx.mpf(1)), ctx), (pi, 1))
        assert _close(chart_S((ctx.mpf(1), ctx.mpf(-1)), ctx), (ctx.mpf(0), 1))

    def test_slit_chart_pins(self, ctx):
        pi = +ctx.pi
        assert _close(chart_T((ctx.mpf("0.5"), ctx.mpf(1)), ctx), (pi / 2, 1))
        assert _close(chart_T((ctx.mpf(0), ctx.mpf(0)), ctx), (pi, 1))

    def test_degenerate_inputs(self, ctx):
        with pytest.raises(DomainError):
            chart_S((ctx.mpf(1), ctx.mpf(0)), ctx)
        with pytest.raises(SlitError):
            chart_T((ctx.mpf("0.8"), ctx.mpf(0)), ctx)

    def test_edge_chart_roundtrip(self, ctx):
        for x in ("0.125", "0.5", "0.9375"):
            for y in ("-0.75", "-0.0625", "0.25", "0.875"):
                p = (ctx.mpf(x), ctx.mpf(y))
                assert _close(chart_S(chart_S(p, ctx), ctx, inverse=True), p)

    def test_slit_chart_roundtrip(self, ctx):
        for x in ("0.0625", "0.375", "0.875"):
            for y in ("-0.5", "0.125", "0.75"):
                p = (ctx.mpf(x), ctx.mpf(y))
                assert _close(chart_T(chart_T(p, ctx), ctx, inverse=True), p)


class TestBoundaryReparam:
    def test_frozen_pins(self, ctx):
        pi = +ctx.pi
        lam = boundary_reparam
        assert _close(lam((pi, ctx.mpf(1)), ctx), (ctx.mpf(0), ctx.mpf(0)))
        assert _close(lam((pi / 2, ctx.mpf(1)), ctx), (pi, ctx.mpf(1)))
        assert _close(lam((pi / 4, ctx.mpf(1)), ctx), (pi + ctx.atan(2), ctx.mpf(1)))
        # the slit-bottom arc wraps onto the slit's far side
        astar = slit_arc_angle(ctx)
        assert _close(lam((astar, ctx.mpf(1)), ctx), (2 * pi, ctx.mpf(1)))

    def test_wall_pins(self, ctx):
        pi = +ctx.pi
        lam = boundary_reparam
        assert _close(lam((ctx.mpf(0), ctx.mpf("0.5")), ctx), (5 * pi / 3, ctx.mpf(0)))
        assert _close(lam((pi, ctx.mpf("0.25")), ctx), (pi / 2, ctx.mpf(0)))

    def test_roundtrip_on_both_circles(self, ctx):
        pi = +ctx.pi
        lam = boundary_reparam
        for k in range(1, 32):
            b = (k * pi / 32, ctx.mpf(1))
            assert _close(lam(lam(b, ctx), ctx, inverse=True), b)
        for k in range(1, 16):
            b = (ctx.mpf(0), ctx.mpf(k) / 16)
            assert _close(lam(lam(b, ctx), ctx, inverse=True), b)

    def test_conjugates_the_vertical_flip(self, ctx):
        pi, two_pi = +ctx.pi, 2 * ctx.pi
        lam = boundary_reparam
        for k in range(1, 16):
            a = k * pi / 16
            t1 = lam((pi - a, ctx.mpf(1)), ctx)[0]
            t2 = lam((a, ctx.mpf(1)), ctx)[0]
            flip = two_pi - t2 if t2 != 0 else ctx.mpf(0)
            assert abs(t1 - flip) <= TIGHT


class TestConeMap:
    def test_center_goes_to_center(self, ctx):
        out = cone_map((ctx.pi / 2, ctx.mpf("0.5")), ctx)
        assert _close(out, (+ctx.pi, ctx.mpf("0.5")))

    def test_roundtrip(self, ctx):
        for a in ("0.25", "1.125", "2.5"):
            for r in ("0.0625", "0.5", "0.9375"):
                u = (ctx.mpf(a), ctx.mpf(r))
                assert _close(cone_map(cone_map(u, ctx), ctx, inverse=True), u)


class TestCollapse:
    def test_vertical_edges_collapse_to_slit_tips(self, ctx):
        for s in (Fraction(1), Fraction(1, 2), Fraction(1, 7), Fraction(-2, 3)):
            assert _close(collapse((Fraction(1), s), ctx), (Fraction(1, 2), 0))
            assert _close(collapse((Fraction(-1), s), ctx), (Fraction(-1, 2), 0))

    def test_fixed_fiber_points(self, ctx):
        assert _close(collapse((Fraction(0), Fraction(1)), ctx), (0, 1))
        assert _close(collapse((Fraction(0), Fraction(-1)), ctx), (0, -1))
        assert _close(collapse((Fraction(0), Fraction(0)), ctx), (0, 0))

    def test_inner_axis_pins(self, ctx):
        assert _close(collapse((Fraction(1, 2), Fraction(0)), ctx), (Fraction(1, 4), 0))
        assert _close(collapse((Fraction(1), Fraction(0)), ctx), (Fraction(1, 2), 0))
        assert _close(collapse((Fraction(-1), Fraction(0)), ctx), (Fraction(-1, 2), 0))

    def test_interior_value(self, ctx):
        q = collapse((Fraction(1, 3), Fraction(1, 5)), ctx)
        assert abs(to_bigfloat(q[0], ctx) - ctx.mpf(1) / 6) <= 1e-60
        assert abs(to_bigfloat(q[1], ctx) - ctx.mpf("0.15932855645557955787")) < 1e-19

    def test_roundtrip_inside(self, ctx, tol):
        worst = 0
        for r in (Fraction(-7, 8), Fraction(-1, 3), Fraction(1, 5), Fraction(6, 7)):
            for s in (Fraction(-3, 4), Fraction(-1, 9), Fraction(2, 7), Fraction(7, 8)):
                p = (to_bigfloat(r, ctx), to_bigfloat(s, ctx))
                q = collapse((r, s), ctx)
                back = collapse_inv(q, ctx)
                back = tuple(to_bigfloat(c, ctx) for c in back)
                worst = max(worst, abs(back[0] - p[0]), abs(back[1] - p[1]))
        assert worst < tol.chart_roundtrip

    def test_image_avoids_open_slits(self, ctx):
        for r in (Fraction(-9, 10), Fraction(3, 5), Fraction(99, 100)):
            for s in (Fraction(-1, 2), Fraction(1, 1000), Fraction(4, 5)):
                x, y = collapse((r, s), ctx)
                assert not (y == 0 and abs(x) > Fraction(1, 2))
