"""The square self-map: exact values, seams, symmetry, and structure.

Everything here is exact rational arithmetic; equality assertions are
literal, not toleranced.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planardyn.numerics import IDENTITY_PL, DomainError, PLFunction, pl_eval
from planardyn.square_map import (
    NAMED_POINTS,
    RegionTag,
    as_square_point,
    descend_map,
    line_rule,
    reflect,
    region_of,
    rise_map,
    row_map,
    shear_profile,
    square_homeo,
    strip_shear,
    vertical_shift,
)
from planardyn.strips import SHIFT_PROFILE

coords = st.fractions(min_value=Fraction(-1), max_value=Fraction(1), max_denominator=128)
points = st.tuples(coords, coords)


class TestFrozenValues:
    def test_forward_examples(self):
        assert square_homeo((Fraction(0), Fraction(0))) == (Fraction(0), Fraction(1, 2))
        assert square_homeo((Fraction(0), Fraction(-3, 4))) == (
            Fraction(0),
            Fraction(-1, 2),
        )
        assert square_homeo((Fraction(3, 5), Fraction(1))) == (
            Fraction(-3, 5),
            Fraction(1),
        )
        assert square_homeo((Fraction(0), Fraction(1, 2))) == (
            Fraction(0),
            Fraction(3, 4),
        )

    def test_inverse_examples(self):
        assert square_homeo((Fraction(0), Fraction(1, 2)), inverse=True) == (
            Fraction(0),
            Fraction(0),
        )

    def test_rising_example(self):
        assert rise_map((Fraction(1, 4), Fraction(1, 4))) == (
            Fraction(-1, 4),
            Fraction(5, 8),
        )

    def test_descending_examples(self):
        assert descend_map((Fraction(0), Fraction(-1, 4))) == (
            Fraction(0),
            Fraction(-5, 8),
        )
        assert descend_map((Fraction(1), Fraction(-1))) == (Fraction(-1), Fraction(-1))

    def test_shear_examples(self):
        assert strip_shear((Fraction(0), Fraction(13, 16))) == (
            Fraction(2, 3),
            Fraction(13, 16),
        )
        # points on a blend-zone floor follow the previous level's rule
        assert strip_shear((Fraction(1, 4), Fraction(29, 32))) == (
            Fraction(1, 4),
            Fraction(29, 32),
        )


class TestRegions:
    def test_forward_tags(self):
        assert region_of(Fraction(0)) is RegionTag.R0
        assert region_of(Fraction(-1, 4)) is RegionTag.D_MINUS_1
        assert region_of(Fraction(-3, 4)) is RegionTag.R_MINUS_2

    def test_inverse_tags(self):
        assert region_of(Fraction(3, 4), inverse=True) is RegionTag.R1
        assert region_of(Fraction(1, 4), inverse=True) is RegionTag.D0
        assert region_of(Fraction(-1, 4), inverse=True) is RegionTag.R_MINUS_1


class TestNamedPoints:
    def test_corner_coordinates(self):
        assert NAMED_POINTS["v1"] == (Fraction(-1), Fraction(1))
        assert NAMED_POINTS["v4"] == (Fraction(1), Fraction(-1))
        assert NAMED_POINTS["v0"] == (Fraction(1, 2), Fraction(0))
        assert NAMED_POINTS["v9"] == (Fraction(-1, 2), Fraction(0))

    def test_edge_midpoints_alias(self):
        assert NAMED_POINTS["w1"] == NAMED_POINTS["v5"]
        assert NAMED_POINTS["w2"] == NAMED_POINTS["v6"]

    def test_all_named_points_are_in_the_square(self):
        for p in NAMED_POINTS.values():
            assert as_square_point(p) == p


class TestShearProfiles:
    def test_block_one_is_a_tent(self):
        assert shear_profile(1) == PLFunction(
            [(-1, -1), (Fraction(-1, 2), Fraction(1, 2)), (1, 1)]
        )
        assert shear_profile(1)(Fraction(0)) == Fraction(2, 3)
        assert shear_profile(1)(Fraction(-1, 2)) == Fraction(1, 2)

    def test_block_two_profile(self):
        assert shear_profile(2) == PLFunction(
            [(-1, -1), (Fraction(-3, 4), 0), (0, Fraction(3, 4)), (1, 1)]
        )

    def test_middle_segment_translates(self):
        # n passes of block n carry the left shear bound to the right one
        for n in (2, 3, 5):
            b = Fraction(2**n - 1, 2**n)
            x = -b
            for _ in range(n):
                x = shear_profile(n)(x)
            assert x == b

    def test_line_rule_parity(self):
        assert line_rule(1) == IDENTITY_PL
        assert line_rule(3) == IDENTITY_PL
        assert line_rule(2) == shear_profile(1)
        assert line_rule(4) == shear_profile(1)
        assert line_rule(6) == shear_profile(2)

    def test_row_map_identity_on_core(self):
        assert row_map(Fraction(5, 8)) == IDENTITY_PL
        assert row_map(Fraction(1)) == IDENTITY_PL


class TestBoundary:
    def test_top_edge_reflects(self):
        for k in range(-4, 5):
            r = Fraction(k, 4)
            assert square_homeo((r, Fraction(1))) == (-r, Fraction(1))

    def test_horizontal_edges_two_periodic(self):
        for s in (Fraction(1), Fraction(-1)):
            p = (Fraction(3, 5), s)
            assert square_homeo(square_homeo(p)) == p

    def test_boundary_rule_everywhere(self):
        for k in range(9):
            t = Fraction(k, 4) - 1
            for p in ((t, Fraction(1)), (t, Fraction(-1)), (Fraction(1), t), (Fraction(-1), t)):
                assert square_homeo(p) == reflect(vertical_shift(p), "level")


class TestDomains:
    def test_outside_square_rejected(self):
        with pytest.raises(DomainError):
            square_homeo((Fraction(2), Fraction(0)))

    def test_rising_needs_nonnegative_height(self):
        with pytest.raises(DomainError):
            rise_map((Fraction(0), Fraction(-1, 4)))

    def test_descending_needs_lower_quarter(self):
        with pytest.raises(DomainError):
            descend_map((Fraction(0), Fraction(-1, 4)), inverse=True)

    def test_unknown_reflection_axis(self):
        with pytest.raises(DomainError):
            reflect((Fraction(0), Fraction(0)), "diagonal")


@given(points)
def test_roundtrip_exact(p):
    assert square_homeo(square_homeo(p), inverse=True) == p
    assert square_homeo(square_homeo(p, inverse=True)) == p


@given(points)
def test_reversal_symmetry(p):
    lhs = square_homeo(p, inverse=True)
    rhs = reflect(square_homeo(reflect(p, "vertical")), "vertical")
    assert lhs == rhs


@given(points)
@settings(deadline=None)
def test_heights_follow_the_shift_profile(p):
    # holds on every branch: the profile equals its own vertical-flip inverse
    assert square_homeo(p)[1] == pl_eval(SHIFT_PROFILE, p[1])


def test_profile_flip_symmetry():
    # the identity behind the global height law and the time reversal
    for k in range(-8, 9):
        s = Fraction(k, 8)
        assert pl_eval(SHIFT_PROFILE, s) == -pl_eval(SHIFT_PROFILE, -s, inverse=True)


@given(coords)
def test_vertical_shift_fixes_r(r):
    assert vertical_shift((r, Fraction(0)))[0] == r


@given(st.fractions(min_value=Fraction(1, 2), max_value=Fraction(1), max_denominator=128), coords)
def test_strip_shear_fixes_heights(s, r):
    assert strip_shear((r, s))[1] == s
