"""Strip decomposition driving the per-line shears on the square.

The square homeomorphism pushes horizontal lines upward with a fixed
piecewise-linear profile.  Iterating the profile tiles the band [1/2, 1)
into levels, one per iterate; each level splits at an interior height into
a blend zone (bottom part, where consecutive shear rules interpolate) and a
shear zone (top part, where a single rule applies).  The shear index stays
constant on blocks of levels delimited by k(n) = n(n+1) and grows by one
across each block boundary, which is what makes every interior orbit drift
into the top corners while the shear gain per block stays summable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from .numerics import DomainError, PLFunction, Rational, pl_eval

# Vertical-shift profile: breakpoints (-1,-1), (-1/2, 0), (0, 1/2), (1, 1).
# Fixes the endpoints, pushes everything else strictly upward.
SHIFT_PROFILE = PLFunction(
    [(-1, -1), (Fraction(-1, 2), 0), (0, Fraction(1, 2)), (1, 1)]
)

# Height bands of the square acted on by the rising / descending halves.
LOWER_RISE_BAND = (Fraction(0), Fraction(1))  # forward domain of the rising map
UPPER_RISE_BAND = (Fraction(1, 2), Fraction(1))  # its image band


def split_height(n: int) -> Fraction:
    """Blend/shear split parameter of block n: 2^(-n-1), decreasing to 0."""
    if n < 1:
        raise DomainError(f"block index must be >= 1, got {n}")
    return Fraction(1, 2 ** (n + 1))


def shear_bound(n: int) -> Fraction:
    """Shear plateau bound of block n: 1 - 2^(-n), increasing to 1."""
    if n < 1:
        raise DomainError(f"block index must be >= 1, got {n}")
    return 1 - Fraction(1, 2**n)


def block_index(n: int) -> int:
    """First level of block n: k(n) = n(n+1).  Always even."""
    if n < 1:
        raise DomainError(f"block index must be >= 1, got {n}")
    return n * (n + 1)


def block_of(i: int) -> int:
    """Block containing level i >= 2: the largest n with k(n) <= i."""
    if i < 2:
        raise DomainError(f"level must be >= 2, got {i}")
    n = (math.isqrt(4 * i + 1) - 1) // 2
    # guard the isqrt boundary exactly
    while block_index(n + 1) <= i:
        n += 1
    while n > 1 and block_index(n) > i:
        n -= 1
    return n


def shift_profile_pow(s: Rational, i: int) -> Fraction:
    """i-th iterate of the shift profile at s (negative i = inverse iterates).

    For s in [0, 1] and i >= 0 the orbit stays in the top affine piece, so
    the closed form 1 - (1 - s) * 2^-i applies; otherwise iterate.
    """
    s = Fraction(s)
    if s < -1 or s > 1:
        raise DomainError(f"argument {s} outside [-1, 1]")
    if i >= 0 and 0 <= s:
        return 1 - (1 - s) / 2**i
    out = s
    for _ in range(abs(i)):
        out = pl_eval(SHIFT_PROFILE, out, inverse=(i < 0))
    return out


class Zone(str, Enum):
    D1_CORE = "D1_CORE"
    F_ZONE = "F_ZONE"
    B_ZONE = "B_ZONE"
    TOP_LINE = "TOP_LINE"


@dataclass(frozen=True)
class StripDescriptor:
    """Where a height s in [1/2, 1] sits in the strip tiling.

    level : iterate index of the strip (1 for the closed core band), None on s = 1
    zone  : one of the four zones
    n     : shear block of the level (None on core / top)
    lo, mid, hi : strip bounds; blend zone is [lo, mid), shear zone [mid, hi)
    """

    level: Optional[int]
    zone: Zone
    n: Optional[int]
    lo: Fraction
    mid: Optional[Fraction]
    hi: Fraction


def strip_bounds(i: int):
    """(lo, mid, hi) of level i >= 2; mid is the blended image of the split height."""
    if i < 2:
        raise DomainError(f"level must be >= 2, got {i}")
    n = block_of(i)
    lo = 1 - Fraction(1, 2**i)
    hi = 1 - Fraction(1, 2 ** (i + 1))
    mid = shift_profile_pow(split_height(n), i)
    return lo, mid, hi


def strip_locate(s: Rational) -> StripDescriptor:
    """Locate a height in the tiling of [1/2, 1].

    The core band [1/2, 3/4] is closed and checked first; the top line
    s = 1 is its own zone; each remaining height lands in exactly one
    half-open level [1 - 2^-i, 1 - 2^-i-1).
    """
    s = Fraction(s)
    if s < Fraction(1, 2) or s > 1:
        raise DomainError(f"height {s} outside [1/2, 1]")
    if s == 1:
        return StripDescriptor(None, Zone.TOP_LINE, None, Fraction(1), None, Fraction(1))
    if s <= Fraction(3, 4):
        return StripDescriptor(
            1, Zone.D1_CORE, None, Fraction(1, 2), None, Fraction(3, 4)
        )
    u = 1 - s  # in (0, 1/4): level i has 2^-i-1 < u <= 2^-i
    i = (u.denominator // u.numerator).bit_length() - 1
    lo, mid, hi = strip_bounds(i)
    zone = Zone.F_ZONE if s < mid else Zone.B_ZONE
    return StripDescriptor(i, zone, block_of(i), lo, mid, hi)


def strip_table(max_level: int) -> List[dict]:
    """Strip rows for the geometry dump: level, zone bounds, shear block."""
    if max_level < 2:
        raise DomainError(f"need max_level >= 2, got {max_level}")
    rows = [
        {
            "level": 1,
            "zone": Zone.D1_CORE.value,
            "n": None,
            "lo": "1/2",
            "mid": None,
            "hi": "3/4",
        }
    ]
    for i in range(2, max_level + 1):
        lo, mid, hi = strip_bounds(i)
        rows.append(
            {
                "level": i,
                "zone": f"{Zone.F_ZONE.value}|{Zone.B_ZONE.value}",
                "n": block_of(i),
                "lo": str(lo),
                "mid": str(mid),
                "hi": str(hi),
            }
        )
    return rows
