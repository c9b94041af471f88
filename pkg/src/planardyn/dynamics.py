"""Orbits, limit estimates, and verification certificates.

Everything the command-line ``verify`` command and the acceptance tests
check lives here, in plain functions returning :class:`Certificate`
values: exact claims (boundary identity, monotone shear ladder, positive
displacement, orientation signs) carry exact evidence, floating-point
claims carry the tolerances they were checked at.  The same certificate
producers back both entry points, so a green verify run and a green test
suite are the same statement.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import mpmath
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .collapse_map import (
    _collapse_charts,
    cone_map,
    collapse,
    collapse_inv,
    slit_arc_angle,
)
from .numerics import (
    DEFAULT_TOLERANCES,
    DomainError,
    Tolerances,
    make_context,
    pl_eval,
    to_bigfloat,
)
from .plane_map import (
    example_shift_reflection,
    lifted_core,
    lifted_orbit,
    plane_homeo,
    quotient_square_map,
    tangent_chart,
)
from .square_map import (
    _forward_piece_key,
    as_square_point,
    descend_map,
    reflect,
    rise_map,
    shear_profile,
    square_homeo,
    strip_shear,
    vertical_shift,
)
from .strips import (
    SHIFT_PROFILE,
    block_index,
    shear_bound,
    shift_profile_pow,
    split_height,
    strip_bounds,
)

DEFAULT_SAMPLER_SEED = 12021


@dataclass(frozen=True)
class MapSpec:
    """A named map with its iteration data: domain kind, arithmetic kind,
    forward/inverse callables, and an optional exact-lift orbit routine."""

    name: str
    domain: str  # "interval" | "square" | "band" | "plane"
    exact: bool
    forward: Callable
    inverse: Optional[Callable] = None
    lifted: Optional[Callable] = None
    piece_key: Optional[Callable] = None


@dataclass(frozen=True)
class OrbitRecord:
    map_id: str
    seed: tuple
    arithmetic: str  # "exact" | "bigfloat"
    entries: Tuple[tuple, ...]  # (n, point, abscissa), n contiguous


@dataclass(frozen=True)
class LimitEstimate:
    map_id: str
    side: str  # "omega" | "alpha"
    points: tuple  # candidate limit points, even-parity candidate first
    final_distances: tuple  # per candidate: max tail distance in its parity class
    horizon: int
    converged: bool
    parity: dict  # "even"/"odd" -> candidate point


@dataclass(frozen=True)
class Certificate:
    kind: str  # boundedness | fixedpointfree | orientation | conjugacy
    passed: bool
    evidence: dict


def map_registry(ctx, shear_index: int = 1) -> Dict[str, MapSpec]:
    """All maps addressable by id.  Exact maps take and return rationals;
    chart-based maps are bound to the given context."""
    return {
        "f01": MapSpec(
            "f01",
            "interval",
            True,
            lambda t: pl_eval(SHIFT_PROFILE, t),
            lambda t: pl_eval(SHIFT_PROFILE, t, inverse=True),
        ),
        "phi": MapSpec(
            "phi",
            "interval",
            True,
            lambda t: pl_eval(shear_profile(shear_index), t),
            lambda t: pl_eval(shear_profile(shear_index), t, inverse=True),
        ),
        "f02": MapSpec(
            "f02",
            "square",
            True,
            vertical_shift,
            lambda p: vertical_shift(p, inverse=True),
        ),
        "Phi": MapSpec(
            "Phi", "band", True, strip_shear, lambda p: strip_shear(p, inverse=True)
        ),
        "eta": MapSpec(
            "eta", "square", True, rise_map, lambda p: rise_map(p, inverse=True)
        ),
        "zeta": MapSpec(
            "zeta", "square", True, descend_map, lambda p: descend_map(p, inverse=True)
        ),
        "f": MapSpec(
            "f",
            "square",
            True,
            square_homeo,
            lambda p: square_homeo(p, inverse=True),
            piece_key=_forward_piece_key,
        ),
        "xi": MapSpec(
            "xi",
            "square",
            False,
            lambda p: collapse(p, ctx),
            lambda p: collapse_inv(p, ctx),
        ),
        "g": MapSpec(
            "g",
            "square",
            False,
            lambda p: quotient_square_map(p, ctx),
            lambda p: quotient_square_map(p, ctx, inverse=True),
        ),
        "h": MapSpec(
            "h",
            "plane",
            False,
            lambda p: plane_homeo(p, ctx),
            lambda p: plane_homeo(p, ctx, inverse=True),
            lifted=lambda seed, n_range: lifted_orbit(seed, n_range, ctx),
        ),
        "example12": MapSpec(
            "example12",
            "plane",
            True,
            example_shift_reflection,
            lambda p: example_shift_reflection(p, inverse=True),
        ),
    }


def _arith(spec: MapSpec) -> str:
    return "exact" if spec.exact else "bigfloat"


def _normalize_seed(spec: MapSpec, seed):
    if spec.domain == "interval":
        value = seed[0] if isinstance(seed, (tuple, list)) else seed
        return (Fraction(value),) if spec.exact else (value,)
    if spec.exact:
        return (Fraction(seed[0]), Fraction(seed[1]))
    return (seed[0], seed[1])


def orbit(spec: MapSpec, seed, n_range: Tuple[int, int]) -> OrbitRecord:
    """Iterate a map over an inclusive integer step range containing any sign.

    Steps below zero use the inverse; an orbit leaving the map's domain
    raises a DomainError naming the step.  Maps with an exact lift get
    their points from the lifted routine (no per-step rounding).
    """
    n_lo, n_hi = n_range
    if n_lo > n_hi:
        raise DomainError(f"empty step range {n_range}")
    seed = _normalize_seed(spec, seed)
    entries = []
    if spec.lifted is not None:
        for n, y in spec.lifted(seed, n_range):
            entries.append((n, tuple(y), y[0]))
        return OrbitRecord(spec.name, tuple(seed), _arith(spec), tuple(entries))
    scalar = spec.domain == "interval"

    def apply(fn, p, n):
        arg = p[0] if scalar else p
        try:
            out = fn(arg)
        except DomainError as exc:
            raise DomainError(
                f"orbit of {spec.name} left the domain at step {n}: {exc}"
            ) from exc
        return (out,) if scalar else tuple(out)

    points = {0: tuple(seed)}
    p = points[0]
    for n in range(1, n_hi + 1):
        p = apply(spec.forward, p, n)
        points[n] = p
    if n_lo < 0:
        if spec.inverse is None:
            raise DomainError(f"map {spec.name} has no inverse for backward steps")
        p = points[0]
        for n in range(-1, n_lo - 1, -1):
            p = apply(spec.inverse, p, n)
            points[n] = p
    for n in range(n_lo, n_hi + 1):
        entries.append((n, points[n], points[n][0]))
    return OrbitRecord(spec.name, tuple(seed), _arith(spec), tuple(entries))


def _as_floats(p) -> Tuple[float, ...]:
    return tuple(float(v) for v in p)


def _dist(p, q) -> float:
    return math.dist(_as_floats(p), _as_floats(q))


def limit_estimate(
    spec: MapSpec,
    seed,
    side: str = "omega",
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> LimitEstimate:
    """Cluster the far tail (last quarter) of an orbit into candidate limit
    points, split by step parity.

    Candidates are actual orbit points, the most-converged point of each
    parity class.  ``converged`` requires every even-step tail point to sit
    within the cluster radius of the even candidate and likewise for odd;
    a wandering tail reports ``converged=False`` rather than raising.
    """
    if side not in ("omega", "alpha"):
        raise DomainError(f"side must be omega or alpha, got {side}")
    horizon = tol.horizon
    n_range = (0, horizon) if side == "omega" else (-horizon, 0)
    record = orbit(spec, seed, n_range)
    start = horizon - horizon // 4
    window = [e for e in record.entries if abs(e[0]) >= start]
    window.sort(key=lambda e: abs(e[0]), reverse=True)  # most converged first
    parity: Dict[str, tuple] = {}
    final: Dict[str, float] = {}
    converged = True
    for label, wanted in (("even", 0), ("odd", 1)):
        pts = [p for n, p, _ in window if n % 2 == wanted]
        if not pts:
            continue
        rep = pts[0]
        spread = max(_dist(rep, p) for p in pts)
        parity[label] = rep
        final[label] = spread
        if spread > tol.limitset:
            converged = False
    points = tuple(parity[label] for label in ("even", "odd") if label in parity)
    dists = tuple(final[label] for label in ("even", "odd") if label in final)
    return LimitEstimate(spec.name, side, points, dists, horizon, converged, parity)


def ladder_witness(seed, m_max: int) -> Certificate:
    """Certificate of the monotone shear ladder for a seed in the rising band.

    Exact checks: (a) the even-step abscissas are nondecreasing from the
    first block boundary at which the seed's height clears the split
    height; (b) whenever a block is entered to the right of its plateau's
    left edge, that block's passes push the abscissa past the plateau's
    right edge; (c) the heights follow the shift profile exactly.
    """
    r0, s0 = as_square_point(seed)
    if not (-1 < r0 < 1) or not (0 < s0 <= Fraction(1, 2)):
        raise DomainError(
            f"ladder seeds need abscissa in (-1,1), height in (0, 1/2], got ({r0}, {s0})"
        )
    if m_max < 1:
        raise DomainError(f"m_max must be >= 1, got {m_max}")
    mu = 1
    while split_height(mu) > s0:
        mu += 1
    i_max = block_index(m_max) + 2 * m_max
    pts = [(r0, s0)]
    for _ in range(i_max):
        pts.append(rise_map(pts[-1]))
    rs = [p[0] for p in pts]
    start = block_index(mu)
    evens = list(range(start, i_max + 1, 2))
    check_a = all(rs[i] <= rs[j] for i, j in zip(evens, evens[1:]))
    block_rows = []
    check_b = True
    for m in range(mu + 1, m_max + 1):
        km = block_index(m)
        premise = rs[km] > -shear_bound(m)
        conclusion = rs[km + 2 * m] > shear_bound(m) if premise else None
        if premise and not conclusion:
            check_b = False
        block_rows.append(
            {
                "m": m,
                "k": km,
                "entry": str(rs[km]),
                "exit": str(rs[km + 2 * m]),
                "premise": premise,
                "conclusion": conclusion,
            }
        )
    check_c = all(p[1] == shift_profile_pow(s0, i) for i, p in enumerate(pts))
    evidence = {
        "seed": [str(r0), str(s0)],
        "mu": mu,
        "m_max": m_max,
        "ladder": [[i, str(rs[i])] for i in evens],
        "monotone_from_block_boundary": check_a,
        "block_crossings": block_rows,
        "heights_follow_profile": check_c,
    }
    return Certificate("boundedness", check_a and check_b and check_c, evidence)


def displacement_scan(
    spec: MapSpec,
    region: Tuple[Tuple, Tuple],
    grid: Tuple[int, int],
    ctx=None,
) -> Certificate:
    """Minimum displacement of a map over the cell centers of a grid.

    Exact maps run on exact rationals and the positivity verdict is an
    exact strict inequality; otherwise the scan runs in the given context.
    Cell centers never lie on the region boundary.
    """
    (x_lo, x_hi), (y_lo, y_hi) = region
    nx, ny = grid
    if nx < 1 or ny < 1:
        raise DomainError(f"grid must be positive, got {grid}")
    best = None
    argmin = None
    if spec.exact:
        x_lo, x_hi, y_lo, y_hi = map(Fraction, (x_lo, x_hi, y_lo, y_hi))
        dx, dy = (x_hi - x_lo) / nx, (y_hi - y_lo) / ny
        for i in range(nx):
            x = x_lo + dx * (2 * i + 1) / 2
            for j in range(ny):
                y = y_lo + dy * (2 * j + 1) / 2
                qx, qy = spec.forward((x, y))
                d2 = (qx - x) ** 2 + (qy - y) ** 2
                if best is None or d2 < best:
                    best, argmin = d2, (x, y)
        positive = best > 0
        min_disp = math.sqrt(float(best))
    else:
        fx_lo, fx_hi = float(x_lo), float(x_hi)
        fy_lo, fy_hi = float(y_lo), float(y_hi)
        dx, dy = (fx_hi - fx_lo) / nx, (fy_hi - fy_lo) / ny
        for i in range(nx):
            x = to_bigfloat(fx_lo + dx * (i + 0.5), ctx)
            for j in range(ny):
                y = to_bigfloat(fy_lo + dy * (j + 0.5), ctx)
                qx, qy = spec.forward((x, y))
                d2 = float((qx - x) ** 2 + (qy - y) ** 2)
                if best is None or d2 < best:
                    best, argmin = d2, (x, y)
        positive = best > 0
        min_disp = math.sqrt(best)
    evidence = {
        "map": spec.name,
        "region": [[str(x_lo), str(x_hi)], [str(y_lo), str(y_hi)]],
        "grid": list(grid),
        "arithmetic": _arith(spec),
        "min_displacement": min_disp,
        "argmin": [str(argmin[0]), str(argmin[1])],
    }
    return Certificate("fixedpointfree", positive, evidence)


def _rand_fraction(rng: random.Random, lo, hi, denom: int = 999983) -> Fraction:
    return Fraction(lo) + (Fraction(hi) - Fraction(lo)) * Fraction(
        rng.randint(1, denom - 1), denom
    )


def orientation_probe(
    spec: MapSpec,
    samples: int,
    rng_seed: int,
    leg=Fraction(1, 2**20),
    region=((-1, 1), (-1, 1)),
    ctx=None,
    max_redraw: int = 5,
) -> Certificate:
    """Signed areas of images of small right triangles at random samples.

    Passes iff every signed area is negative (orientation reversal).
    Samples whose triangle straddles a nonsmooth seam are re-drawn:
    detected exactly through the map's affine piece key when available,
    otherwise inferred from a non-negative area (seams have measure zero,
    so redraws stay rare); redraw counts are reported.
    """
    rng = random.Random(rng_seed)
    (x_lo, x_hi), (y_lo, y_hi) = region
    signs = {"negative": 0, "positive": 0, "zero": 0}
    redraws = 0
    min_abs_area = None
    exact = spec.exact

    def draw():
        if exact:
            margin = 4 * Fraction(leg)
            x = _rand_fraction(rng, Fraction(x_lo) + margin, Fraction(x_hi) - margin)
            y = _rand_fraction(rng, Fraction(y_lo) + margin, Fraction(y_hi) - margin)
            return (x, y)
        x = rng.uniform(float(x_lo) + 0.01, float(x_hi) - 0.01)
        y = rng.uniform(float(y_lo) + 0.01, float(y_hi) - 0.01)
        return (to_bigfloat(x, ctx), to_bigfloat(y, ctx))

    lg_exact = Fraction(leg)

    def signed_area2(p):
        lg = lg_exact if exact else to_bigfloat(float(lg_exact), ctx)
        a = spec.forward(p)
        b = spec.forward((p[0] + lg, p[1]))
        c = spec.forward((p[0], p[1] + lg))
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    for _ in range(samples):
        area2 = None
        for attempt in range(max_redraw + 1):
            p = draw()
            if exact and spec.piece_key is not None:
                keys = {
                    spec.piece_key(p),
                    spec.piece_key((p[0] + lg_exact, p[1])),
                    spec.piece_key((p[0], p[1] + lg_exact)),
                }
                if len(keys) > 1:
                    redraws += 1
                    continue
            area2 = signed_area2(p)
            if not exact and area2 >= 0 and attempt < max_redraw:
                redraws += 1
                area2 = None
                continue
            break
        if area2 is None or area2 == 0:
            signs["zero"] += 1
            continue
        if area2 < 0:
            signs["negative"] += 1
        else:
            signs["positive"] += 1
        mag = abs(float(area2))
        if min_abs_area is None or mag < min_abs_area:
            min_abs_area = mag
    evidence = {
        "map": spec.name,
        "samples": samples,
        "leg": str(lg_exact),
        "signs": signs,
        "redraws": redraws,
        "min_abs_signed_area": min_abs_area,
        "arithmetic": _arith(spec),
    }
    return Certificate("orientation", signs["negative"] == samples, evidence)


def boundedness_certificate(
    seed,
    window: Tuple[int, int],
    ctx,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Certificate:
    """Boundedness evidence for one plane orbit.

    Ray seeds are exactly period two and certify trivially.  Otherwise the
    seed lifts to an exact rational square point and the certificate
    records (i) the exact statement that every lifted iterate in the
    window stays strictly inside the open square, (ii) forward and
    backward limit estimates matching the two-point limit pair, (iii) the
    smallest distance of the collapsed iterates from the square boundary,
    and (iv) the sup norm of the plane orbit over the window.  It passes
    on (i) and (ii).
    """
    x1, x2 = seed
    if x2 == 0 and abs(x1) >= 1:
        return Certificate(
            "boundedness",
            True,
            {
                "seed": [str(x1), str(x2)],
                "trivial": True,
                "orbit": [[str(x1), str(x2)], [str(-x1), str(x2)]],
                "period": 2,
            },
        )
    core = lifted_core(seed, window, ctx)
    interior_ok = all(
        w is not None and abs(w[0]) < 1 and abs(w[1]) < 1 for _, w, _ in core
    )
    sup_norm = 0.0
    arg_sup = 0
    margin = None
    for n, w, y in core:
        norm = math.hypot(*_as_floats(y))
        if norm > sup_norm:
            sup_norm, arg_sup = norm, n
        cw = collapse(w, ctx)
        m = float(min(1 - abs(cw[0]), 1 - abs(cw[1])))
        margin = m if margin is None else min(margin, m)
    reg = map_registry(ctx)
    est_o = limit_estimate(reg["h"], seed, "omega", tol)
    est_a = limit_estimate(reg["h"], seed, "alpha", tol)
    targets = [(-1.0, 0.0), (1.0, 0.0)]
    omega_ok = _limit_matches(est_o, targets, tol)
    alpha_ok = _limit_matches(est_a, targets, tol)
    evidence = {
        "seed": [str(x1), str(x2)],
        "trivial": False,
        "window": list(window),
        "lift_interior_exact": interior_ok,
        "collapse_boundary_margin": margin,
        "sup_norm": sup_norm,
        "sup_norm_at": arg_sup,
        "omega_converged": est_o.converged,
        "alpha_converged": est_a.converged,
        "omega_matches_limit_pair": omega_ok,
        "alpha_matches_limit_pair": alpha_ok,
        "horizon": tol.horizon,
    }
    return Certificate("boundedness", interior_ok and omega_ok and alpha_ok, evidence)


def _limit_matches(est: LimitEstimate, targets, tol: Tolerances) -> bool:
    """Converged, every candidate near some target, every target realized."""
    if not est.converged or not est.points:
        return False
    used = set()
    for p in est.points:
        hits = [i for i, t in enumerate(targets) if _dist(p, t) <= tol.limitset]
        if not hits:
            return False
        used.update(hits)
    return len(used) == len(targets)


def semiconjugacy_probe(seeds: Sequence, tol: Tolerances, ctx) -> Certificate:
    """Pushforward check: collapse-then-tangent of the square map's limit
    candidates against the plane map's own limit candidates, both sides.

    Seeds are exact rational points of the open square.  Non-converged
    estimates mark a seed inconclusive instead of failing it.
    """
    reg = map_registry(ctx)
    f_spec, h_spec = reg["f"], reg["h"]
    rows = []
    all_ok = True
    inconclusive = 0
    for seed in seeds:
        w0 = as_square_point(seed)
        plane_seed = tangent_chart(collapse(w0, ctx), ctx)
        row = {"seed": [str(w0[0]), str(w0[1])]}
        for side in ("omega", "alpha"):
            est_f = limit_estimate(f_spec, w0, side, tol)
            est_h = limit_estimate(h_spec, plane_seed, side, tol)
            if not (est_f.converged and est_h.converged):
                row[side] = "inconclusive"
                inconclusive += 1
                continue
            pushed = [
                _as_floats(tangent_chart(collapse(p, ctx), ctx)) for p in est_f.points
            ]
            h_pts = [_as_floats(p) for p in est_h.points]
            ok = _sets_match(pushed, h_pts, tol.limitset)
            row[side] = {
                "pushed": [[round(v, 9) for v in p] for p in pushed],
                "plane": [[round(v, 9) for v in p] for p in h_pts],
                "match": ok,
            }
            if not ok:
                all_ok = False
        rows.append(row)
    evidence = {"seeds": rows, "inconclusive": inconclusive, "tolerance": tol.limitset}
    return Certificate("conjugacy", all_ok, evidence)


def _sets_match(a, b, tol: float) -> bool:
    return all(any(_dist(p, q) <= tol for q in b) for p in a) and all(
        any(_dist(p, q) <= tol for p in a) for q in b
    )


# --------------------------------------------------------------------------
# certificate battery backing the acceptance criteria and the CLI verify
# command; counts default to the acceptance values.
# --------------------------------------------------------------------------

CORNERS_TOP = [(-1.0, 1.0), (1.0, 1.0)]
CORNERS_BOTTOM = [(-1.0, -1.0), (1.0, -1.0)]
LIMIT_PAIR = [(-1.0, 0.0), (1.0, 0.0)]


def check_boundary_identity(samples_per_edge: int = 250) -> Certificate:
    """Exact boundary rule: on the square boundary the map is the vertical
    shift followed by the level reflection, and the horizontal edges are
    two-periodic."""
    pts = []
    for k in range(samples_per_edge + 1):
        t = Fraction(2 * k, samples_per_edge) - 1
        pts.extend([(t, Fraction(1)), (t, Fraction(-1)), (Fraction(1), t), (Fraction(-1), t)])
    rule_ok = all(
        square_homeo(p) == reflect(vertical_shift(p), "level") for p in pts
    )
    inv_rule_ok = all(
        square_homeo(p, inverse=True)
        == vertical_shift(reflect(p, "level"), inverse=True)
        for p in pts
    )
    period_ok = all(
        square_homeo(square_homeo((t, s))) == (t, s)
        for (t, s) in pts
        if abs(s) == 1
    )
    evidence = {
        "boundary_points": len(pts),
        "rule_matches_reflected_shift": rule_ok,
        "inverse_rule_matches": inv_rule_ok,
        "horizontal_edges_two_periodic": period_ok,
        "arithmetic": "exact",
    }
    return Certificate("boundedness", rule_ok and inv_rule_ok and period_ok, evidence)


def check_rising_bijectivity(
    samples: int = 10**4, rng_seed: int = DEFAULT_SAMPLER_SEED
) -> Certificate:
    """Exact roundtrip and line-to-line structure at random rational points."""
    rng = random.Random(rng_seed)
    rising_ok = True
    roundtrip_ok = True
    for _ in range(samples):
        p = (_rand_fraction(rng, -1, 1), _rand_fraction(rng, -1, 1))
        q = square_homeo(p)
        if q[1] != pl_eval(SHIFT_PROFILE, p[1]):
            rising_ok = False
            break
        if square_homeo(q, inverse=True) != p:
            roundtrip_ok = False
            break
        if square_homeo(square_homeo(p, inverse=True)) != p:
            roundtrip_ok = False
            break
    evidence = {
        "samples": samples,
        "sampler_seed": rng_seed,
        "lines_map_to_shifted_lines": rising_ok,
        "roundtrip_identity": roundtrip_ok,
        "arithmetic": "exact",
    }
    return Certificate("conjugacy", rising_ok and roundtrip_ok, evidence)


def check_seam_agreement(samples: int = 200) -> Certificate:
    """The piecewise definitions agree on their shared seams, exactly."""
    ok = True
    for k in range(samples + 1):
        r = Fraction(2 * k, samples) - 1
        # forward seam at height 0: rising map vs reflected shift
        if rise_map((r, Fraction(0))) != reflect(vertical_shift((r, Fraction(0))), "level"):
            ok = False
        # forward seam at height -1/2: reflected shift vs inverse descending
        if reflect(vertical_shift((r, Fraction(-1, 2))), "level") != descend_map(
            (r, Fraction(-1, 2)), inverse=True
        ):
            ok = False
        # inverse seam at height 1/2: rising inverse vs shifted reflection
        if rise_map((r, Fraction(1, 2)), inverse=True) != vertical_shift(
            reflect((r, Fraction(1, 2)), "level"), inverse=True
        ):
            ok = False
        # inverse seam at height 0: shifted reflection vs descending forward
        if vertical_shift(
            reflect((r, Fraction(0)), "level"), inverse=True
        ) != descend_map((r, Fraction(0))):
            ok = False
    return Certificate(
        "conjugacy",
        ok,
        {"samples_per_seam": samples + 1, "seams": [0, "-1/2", "1/2 (inverse)", "0 (inverse)"], "agree": ok},
    )


def check_reversal_symmetry(
    samples: int = 500, rng_seed: int = DEFAULT_SAMPLER_SEED + 1
) -> Certificate:
    """Exact time-reversal: the inverse equals the vertical-flip conjugate."""
    rng = random.Random(rng_seed)
    ok = True
    for _ in range(samples):
        p = (_rand_fraction(rng, -1, 1), _rand_fraction(rng, -1, 1))
        lhs = square_homeo(p, inverse=True)
        rhs = reflect(square_homeo(reflect(p, "vertical")), "vertical")
        if lhs != rhs:
            ok = False
            break
    return Certificate(
        "conjugacy", ok, {"samples": samples, "sampler_seed": rng_seed, "agree": ok}
    )


def check_ladder_canonical() -> Certificate:
    """The frozen ladder of the canonical band seed (0, 1/4): early values,
    global monotonicity of even steps, and per-block gap bounds."""
    seed = (Fraction(0), Fraction(1, 4))
    pts = [seed]
    for _ in range(200):
        pts.append(rise_map(pts[-1]))
    rs = [p[0] for p in pts]
    frozen_ok = (
        rs[2] == Fraction(2, 3)
        and rs[4] == Fraction(8, 9)
        and rs[6] == Fraction(35, 36)
    )
    evens = list(range(2, 201, 2))
    monotone_ok = all(rs[i] <= rs[j] for i, j in zip(evens, evens[1:]))
    gaps = {}
    gaps_ok = True
    for m in (2, 3, 4, 5):
        i = block_index(m) + 2 * m
        gap = 1 - rs[i]
        gaps[m] = str(gap)
        if gap >= Fraction(1, 2**m):
            gaps_ok = False
    witness = ladder_witness(seed, 5)
    evidence = {
        "seed": ["0", "1/4"],
        "early_values": [str(rs[2]), str(rs[4]), str(rs[6])],
        "frozen_values_match": frozen_ok,
        "even_steps_nondecreasing_to_200": monotone_ok,
        "block_exit_gaps": gaps,
        "gap_bounds_hold": gaps_ok,
        "witness_passed": witness.passed,
        "mu": witness.evidence["mu"],
    }
    return Certificate(
        "boundedness", frozen_ok and monotone_ok and gaps_ok and witness.passed, evidence
    )


def check_ladder_random(
    count: int = 25, rng_seed: int = DEFAULT_SAMPLER_SEED + 2
) -> Certificate:
    """Ladder witnesses for random seeds in the open band (0, 1/2]."""
    rng = random.Random(rng_seed)
    all_ok = True
    mus = []
    for _ in range(count):
        seed = (
            _rand_fraction(rng, Fraction(-9, 10), Fraction(9, 10)),
            _rand_fraction(rng, 0, Fraction(1, 2)),
        )
        cert = ladder_witness(seed, 5)
        mus.append(cert.evidence["mu"])
        if not cert.passed:
            all_ok = False
    return Certificate(
        "boundedness",
        all_ok,
        {"count": count, "sampler_seed": rng_seed, "mus": mus, "all_passed": all_ok},
    )


def check_interior_limits(
    count: int = 25,
    rng_seed: int = DEFAULT_SAMPLER_SEED + 3,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Certificate:
    """Random interior seeds drift to the top corners forward and the
    bottom corners backward, within the limit-set tolerance."""
    rng = random.Random(rng_seed)
    reg = map_registry(None)
    f_spec = reg["f"]
    all_ok = True
    worst = 0.0
    for _ in range(count):
        seed = (
            _rand_fraction(rng, Fraction(-9, 10), Fraction(9, 10)),
            _rand_fraction(rng, Fraction(-9, 10), Fraction(9, 10)),
        )
        est_o = limit_estimate(f_spec, seed, "omega", tol)
        est_a = limit_estimate(f_spec, seed, "alpha", tol)
        ok_o = _limit_matches_targets(est_o, CORNERS_TOP, tol)
        ok_a = _limit_matches_targets(est_a, CORNERS_BOTTOM, tol)
        worst = max(worst, *(est_o.final_distances + est_a.final_distances))
        if not (ok_o and ok_a):
            all_ok = False
    evidence = {
        "count": count,
        "sampler_seed": rng_seed,
        "window": [tol.horizon - tol.horizon // 4, tol.horizon],
        "tolerance": tol.limitset,
        "max_tail_spread": worst,
        "all_matched": all_ok,
    }
    return Certificate("boundedness", all_ok, evidence)


def _limit_matches_targets(est: LimitEstimate, targets, tol: Tolerances) -> bool:
    """Candidates near targets (targets need not all be realized: a seed on
    the fiber converges to a single corner pair member per parity)."""
    if not est.converged or not est.points:
        return False
    for p in est.points:
        if not any(_dist(p, t) <= tol.limitset for t in targets):
            return False
    return True


def _mirror_level(p):
    return (-p[0], p[1])


def _mirror_vertical(p):
    return (p[0], -p[1])


def check_collapse_conditions(
    ctx,
    tol: Tolerances = DEFAULT_TOLERANCES,
    rng_seed: int = DEFAULT_SAMPLER_SEED + 4,
    pin_samples: int = 2500,
    commutation_samples: int = 5000,
    roundtrip_samples: int = 10**4,
    edge_samples: int = 100,
    path_samples: int = 10**3,
) -> Certificate:
    """The collapse's defining conditions, checked through the charts.

    (1) fiber fixed pointwise and axis halved, evaluated via the chart
    composition itself (no pinned shortcuts) against the exact targets;
    (2) the right edge collapses to the outer slit endpoint, and the top
    right boundary path traverses [top edge -> right edge -> slit]
    monotonically; (3) the collapse commutes with both reflections;
    plus the interior roundtrip at the chart tolerance with a margin from
    the boundary and slits, and the image staying off the slits.
    """
    rng = random.Random(rng_seed)
    com_tol = tol.commutation
    worst = {"fiber": 0.0, "axis": 0.0, "edge": 0.0, "commutation": 0.0, "roundtrip": 0.0}

    def err(y, target) -> float:
        return float(max(abs(y[0] - to_bigfloat(target[0], ctx)), abs(y[1] - to_bigfloat(target[1], ctx))))

    fiber_ok = True
    for _ in range(pin_samples):
        s = _rand_fraction(rng, -1, 1)
        y = _collapse_charts((to_bigfloat(0, ctx), to_bigfloat(s, ctx)), ctx)
        e = err(y, (Fraction(0), s))
        worst["fiber"] = max(worst["fiber"], e)
        if e > com_tol:
            fiber_ok = False
    axis_ok = True
    for _ in range(pin_samples):
        r = _rand_fraction(rng, -1, 1)
        if r == 0:
            continue
        y = _collapse_charts((to_bigfloat(r, ctx), to_bigfloat(0, ctx)), ctx)
        e = err(y, (r / 2, Fraction(0)))
        worst["axis"] = max(worst["axis"], e)
        if e > com_tol:
            axis_ok = False
    edge_ok = True
    for k in range(edge_samples // 2):
        # nonzero heights only: (1, 0) is the edge chart's own center
        for s in (Fraction(2 * k + 1, edge_samples), -Fraction(2 * k + 1, edge_samples)):
            y = _collapse_charts((to_bigfloat(1, ctx), to_bigfloat(s, ctx)), ctx)
            e = err(y, (Fraction(1, 2), Fraction(0)))
            ym = _collapse_charts((to_bigfloat(-1, ctx), to_bigfloat(s, ctx)), ctx)
            em = err(ym, (Fraction(-1, 2), Fraction(0)))
            worst["edge"] = max(worst["edge"], e, em)
            if e > com_tol or em > com_tol:
                edge_ok = False
    # boundary path [top-mid -> top-right corner -> edge-mid -> slit end]:
    # collapse images of (r, 1) march monotonically along
    # top wall -> right wall -> slit as r runs from 0 to 1.
    def path_position(y) -> float:
        y0, y1 = float(y[0]), float(y[1])
        if abs(y1 - 1) <= 1e-12:
            return y0
        if abs(y0 - 1) <= 1e-12:
            return 1 + (1 - y1)
        return 2 + 2 * (1 - y0)

    path_ok = True
    prev = None
    for k in range(path_samples + 1):
        r = Fraction(k, path_samples)
        y = collapse((r, Fraction(1)), ctx)
        pos = path_position(y)
        if prev is not None and not pos > prev:
            path_ok = False
        prev = pos
    commutation_ok = True
    for _ in range(commutation_samples):
        x = (_rand_fraction(rng, -1, 1), _rand_fraction(rng, -1, 1))
        y = collapse(x, ctx)
        y_lvl = collapse(_mirror_level(x), ctx)
        y_vrt = collapse(_mirror_vertical(x), ctx)
        e = max(
            float(abs(y_lvl[0] + y[0])),
            float(abs(y_lvl[1] - y[1])),
            float(abs(y_vrt[0] - y[0])),
            float(abs(y_vrt[1] + y[1])),
        )
        worst["commutation"] = max(worst["commutation"], e)
        if e > com_tol:
            commutation_ok = False
    margin = Fraction(1, 1000)
    roundtrip_ok = True
    image_off_slits = True
    for _ in range(roundtrip_samples):
        x = (
            _rand_fraction(rng, -1 + margin, 1 - margin),
            _rand_fraction(rng, -1 + margin, 1 - margin),
        )
        if abs(x[1]) < margin and abs(x[0]) > Fraction(1, 3):
            # keep the stated margin from the slits' preimage (the
            # vertical-edge neighborhoods map near the slits)
            x = (x[0], x[1] + margin if x[1] >= 0 else x[1] - margin)
        y = collapse(x, ctx)
        if x[0] != 0 and x[1] != 0 and y[1] == 0:
            image_off_slits = False
        back = collapse_inv(y, ctx)
        e = float(max(abs(back[0] - to_bigfloat(x[0], ctx)), abs(back[1] - to_bigfloat(x[1], ctx))))
        worst["roundtrip"] = max(worst["roundtrip"], e)
        if e > tol.chart_roundtrip:
            roundtrip_ok = False
    passed = (
        fiber_ok
        and axis_ok
        and edge_ok
        and path_ok
        and commutation_ok
        and roundtrip_ok
        and image_off_slits
    )
    evidence = {
        "sampler_seed": rng_seed,
        "counts": {
            "fiber": pin_samples,
            "axis": pin_samples,
            "edge": 2 * edge_samples,
            "path": path_samples + 1,
            "commutation": commutation_samples,
            "roundtrip": roundtrip_samples,
        },
        "worst_errors": worst,
        "fiber_fixed": fiber_ok,
        "axis_halved": axis_ok,
        "edges_collapse": edge_ok,
        "boundary_path_monotone": path_ok,
        "reflections_commute": commutation_ok,
        "roundtrip_within_tolerance": roundtrip_ok,
        "image_avoids_slits": image_off_slits,
        "tolerances": {"pins": com_tol, "roundtrip": tol.chart_roundtrip},
    }
    return Certificate("conjugacy", passed, evidence)


def check_cone_bijectivity(
    ctx,
    tol: Tolerances = DEFAULT_TOLERANCES,
    rng_seed: int = DEFAULT_SAMPLER_SEED + 5,
    samples: int = 10**3,
) -> Certificate:
    """Roundtrip of the radial extension on random rectangle points."""
    rng = random.Random(rng_seed)
    pi = +ctx.pi
    ok = True
    worst = 0.0
    for _ in range(samples):
        alpha = pi * to_bigfloat(_rand_fraction(rng, 0, 1), ctx)
        rho = to_bigfloat(_rand_fraction(rng, 0, 1), ctx)
        w = cone_map((alpha, rho), ctx)
        back = cone_map(w, ctx, inverse=True)
        e = float(max(abs(back[0] - alpha), abs(back[1] - rho)))
        worst = max(worst, e)
        if e > tol.commutation:
            ok = False
    return Certificate(
        "conjugacy",
        ok,
        {
            "samples": samples,
            "sampler_seed": rng_seed,
            "worst_error": worst,
            "tolerance": tol.commutation,
        },
    )


def check_slit_continuity(ctx, terms: int = 18) -> Certificate:
    """Continuity of the quotient map at the slit point (3/4, 0): approach
    sequences from above and below give values converging to the pinned
    image (-3/4, 0), with a monotone tail ending below 1e-6.

    The sequences follow the pullback of the slit's two sides: square
    points at the corner offset tan(astar/2) whose relevant height lands
    mid-zone of an odd level, where the line rule is the identity.  The
    limit is the same along every approach, but the modulus of continuity
    near the collapsed edges is extremely slow: an even level's shear
    multiplies the corner offset by roughly 2^m/m, so a raw vertical
    segment above the slit point keeps getting thrown to the walls until
    the offset drops under the shear breakpoints (heights around
    2^-40000).  The adapted sequences instead converge at the geometric
    rate of their heights.
    """
    target = (Fraction(-3, 4), Fraction(0))
    a = ctx.tan(slit_arc_angle(ctx) / 2)
    rows = []
    ok_final = True
    ok_monotone = True
    for side in ("above", "below"):
        errs = []
        approach_dist = []
        for k in range(terms):
            level = 5 + 2 * k
            lo, mid, hi = strip_bounds(level)
            sigma = (mid + hi) / 2
            if side == "above":
                w = (1 - a, to_bigfloat(1 - 2 * (1 - sigma), ctx))
            else:
                w = (1 - a, -to_bigfloat(sigma, ctx))
            x = collapse(w, ctx)
            approach_dist.append(_dist(x, (Fraction(3, 4), Fraction(0))))
            y = quotient_square_map(x, ctx)
            errs.append(_dist(y, target))
        if errs[-1] >= 1e-6:
            ok_final = False
        last5 = errs[-5:]
        if any(b >= a_ for a_, b in zip(last5, last5[1:])):
            ok_monotone = False
        rows.append(
            {
                "side": side,
                "levels": f"odd 5..{5 + 2 * (terms - 1)}",
                "sequence_distance_to_slit_point": [approach_dist[0], approach_dist[-1]],
                "final_error": errs[-1],
                "last5": last5,
            }
        )
    return Certificate(
        "conjugacy",
        ok_final and ok_monotone,
        {
            "slit_point": ["3/4", "0"],
            "pinned_image": ["-3/4", "0"],
            "sides": rows,
            "final_below_1e-6": ok_final,
            "last_five_strictly_decreasing": ok_monotone,
        },
    )


def check_rays_exact(
    ctx, samples: int = 10**3, rng_seed: int = DEFAULT_SAMPLER_SEED + 6
) -> Certificate:
    """The two rays reflect exactly and are exactly two-periodic."""
    rng = random.Random(rng_seed)
    ok = True
    for _ in range(samples):
        sign = rng.choice((-1, 1))
        x = sign * (1 + _rand_fraction(rng, 0, 50))
        p = (x, Fraction(0))
        q = plane_homeo(p, ctx)
        if q != (-x, Fraction(0)) or plane_homeo(q, ctx) != p:
            ok = False
            break
        if plane_homeo(p, ctx, inverse=True) != (-x, Fraction(0)):
            ok = False
            break
    return Certificate(
        "conjugacy",
        ok,
        {"samples": samples, "sampler_seed": rng_seed, "exact": True, "period": 2},
    )


def _canonical_core(ctx, span: int = 400):
    return lifted_core((Fraction(0), Fraction(0)), (-span, span), ctx)


def check_plane_convergence(
    ctx, tol: Tolerances = DEFAULT_TOLERANCES, core=None, radius: float = 0.05, hold: int = 200
) -> Certificate:
    """Both tails of the canonical plane orbit land near the limit pair and
    stay there: reports the first window start on each side."""
    if core is None:
        core = _canonical_core(ctx)
    dist = {}
    for n, _, y in core:
        dist[n] = min(_dist(y, t) for t in LIMIT_PAIR)
    span = max(dist)
    found = {}
    for label, sgn in (("omega", 1), ("alpha", -1)):
        n_found = None
        for start in range(0, span - hold + 1):
            if all(dist[sgn * (start + k)] < radius for k in range(hold + 1)):
                n_found = start
                break
        found[label] = n_found
    passed = all(v is not None and v <= 5000 for v in found.values())
    tail_max = None
    if passed:
        settle = max(found.values())
        tail_max = max(dist[n] for n in dist if abs(n) >= settle)
    evidence = {
        "seed": ["0", "0"],
        "radius": radius,
        "hold_steps": hold,
        "first_settled_step": found,
        "computed_span": span,
        "max_tail_distance": tail_max,
    }
    return Certificate("boundedness", passed, evidence)


def check_excursion(ctx, core=None, span: int = 300, threshold: float = 1e3) -> Certificate:
    """The canonical plane orbit leaves any moderate disk before settling:
    its sup norm over |n| <= span exceeds the threshold."""
    if core is None:
        core = _canonical_core(ctx)
    sup, arg = 0.0, 0
    for n, _, y in core:
        if abs(n) > span:
            continue
        norm = math.hypot(*_as_floats(y))
        if norm > sup:
            sup, arg = norm, n
    evidence = {
        "seed": ["0", "0"],
        "span": span,
        "sup_norm": sup,
        "attained_at": arg,
        "threshold": threshold,
    }
    return Certificate("boundedness", sup > threshold, evidence)


def check_semiconjugacy(ctx, tol: Tolerances = DEFAULT_TOLERANCES) -> Certificate:
    """Five exact seeds, including one on the fixed fiber."""
    seeds = [
        (Fraction(0), Fraction(1, 4)),
        (Fraction(1, 3), Fraction(1, 5)),
        (Fraction(-2, 7), Fraction(3, 8)),
        (Fraction(1, 2), Fraction(-1, 3)),
        (Fraction(-3, 5), Fraction(-1, 2)),
    ]
    cert = semiconjugacy_probe(seeds, tol, ctx)
    if cert.evidence["inconclusive"]:
        return Certificate("conjugacy", False, cert.evidence)
    return cert


def check_displacement_battery(
    ctx, fast_ctx=None, rng_seed: int = DEFAULT_SAMPLER_SEED + 9
) -> List[Certificate]:
    """Positive displacement for the square map (exact), the plane map
    (machine-float grid plus random disk samples: density is what matters
    there, not digits), and the contrast example (exact)."""
    if fast_ctx is None:
        fast_ctx = mpmath.fp
    reg_exact = map_registry(None)
    reg_fast = map_registry(fast_ctx)
    h_grid = displacement_scan(reg_fast["h"], ((-3, 3), (-3, 3)), (300, 300), fast_ctx)
    rng = random.Random(rng_seed)
    h_spec = reg_fast["h"]
    rand_min, rand_argmin = None, None
    samples = 10**3
    for _ in range(samples):
        while True:
            x = rng.uniform(-100.0, 100.0)
            y = rng.uniform(-100.0, 100.0)
            if math.hypot(x, y) <= 100.0:
                break
        qx, qy = h_spec.forward((x, y))
        d = math.hypot(float(qx) - x, float(qy) - y)
        if rand_min is None or d < rand_min:
            rand_min, rand_argmin = d, (x, y)
    h_cert = Certificate(
        "fixedpointfree",
        h_grid.passed and rand_min > 0,
        {
            **h_grid.evidence,
            "random_disk": {
                "radius": 100.0,
                "samples": samples,
                "sampler_seed": rng_seed,
                "min_displacement": rand_min,
                "argmin": list(rand_argmin),
            },
        },
    )
    return [
        displacement_scan(reg_exact["f"], ((-1, 1), (-1, 1)), (200, 200)),
        h_cert,
        displacement_scan(reg_exact["example12"], ((-2, 2), (-2, 2)), (100, 100)),
    ]


def check_orientation_battery(
    ctx, rng_seed: int = DEFAULT_SAMPLER_SEED + 7, samples: int = 10**3
) -> List[Certificate]:
    """Orientation reversal for the square map (exact triangles) and the
    plane map (big-float triangles)."""
    reg = map_registry(ctx)
    return [
        orientation_probe(reg["f"], samples, rng_seed),
        orientation_probe(
            reg["h"], samples, rng_seed + 1, region=((-2, 2), (-2, 2)), ctx=ctx
        ),
    ]


def check_example_contrast(
    rng_seed: int = DEFAULT_SAMPLER_SEED + 8,
) -> Certificate:
    """The contrast example: fixed-point free on a grid, exactly an
    involution beyond the unit band, orbit heights grow linearly."""
    reg = map_registry(None)
    spec = reg["example12"]
    grid_cert = displacement_scan(spec, ((-2, 2), (-2, 2)), (100, 100))
    rng = random.Random(rng_seed)
    involution_ok = True
    for _ in range(10**3):
        sign = rng.choice((-1, 1))
        p = (sign * (1 + _rand_fraction(rng, 0, 20)), _rand_fraction(rng, -20, 20))
        if example_shift_reflection(example_shift_reflection(p)) != p:
            involution_ok = False
            break
    heights_ok = True
    p = (Fraction(0), Fraction(0))
    for n in range(1, 101):
        p = example_shift_reflection(p)
        if p != (Fraction(0), Fraction(n)):
            heights_ok = False
            break
    evidence = {
        "grid_min_displacement": grid_cert.evidence["min_displacement"],
        "grid_positive": grid_cert.passed,
        "involution_beyond_band_exact": involution_ok,
        "orbit_heights_linear": heights_ok,
        "sampler_seed": rng_seed,
    }
    return Certificate(
        "fixedpointfree", grid_cert.passed and involution_ok and heights_ok, evidence
    )


def run_suite(
    name: str,
    ctx=None,
    tol: Tolerances = DEFAULT_TOLERANCES,
    rng_seed: int = DEFAULT_SAMPLER_SEED,
    fast_ctx=None,
) -> dict:
    """Run a named certificate suite; returns a JSON-ready report."""
    if ctx is None:
        ctx = make_context()
    suites = {"core": _suite_core, "xi": _suite_xi, "plane": _suite_plane}
    if name == "all":
        parts = [suites[k](ctx, tol, rng_seed, fast_ctx) for k in ("core", "xi", "plane")]
        certs = [c for part in parts for c in part]
    elif name in suites:
        certs = suites[name](ctx, tol, rng_seed, fast_ctx)
    else:
        raise DomainError(f"unknown suite {name!r}")
    passed = all(c.passed for c in certs)
    return {
        "suite": name,
        "passed": passed,
        "certificates": [
            {"kind": c.kind, "passed": c.passed, "evidence": c.evidence} for c in certs
        ],
        "metadata": {
            "sampler_seed": rng_seed,
            "precision": getattr(ctx, "prec", 53),
            "tolerances": {
                "chart_roundtrip": tol.chart_roundtrip,
                "commutation": tol.commutation,
                "limitset": tol.limitset,
                "horizon": tol.horizon,
            },
        },
    }


def _tag(label: str, cert: Certificate) -> Certificate:
    cert.evidence.setdefault("check", label)
    return cert


def _suite_core(ctx, tol, rng_seed, fast_ctx) -> List[Certificate]:
    return [
        _tag("boundary_identity", check_boundary_identity()),
        _tag("rising_bijectivity", check_rising_bijectivity(rng_seed=rng_seed)),
        _tag("seam_agreement", check_seam_agreement()),
        _tag("reversal_symmetry", check_reversal_symmetry(rng_seed=rng_seed + 1)),
        _tag("ladder_canonical", check_ladder_canonical()),
        _tag("ladder_random", check_ladder_random(rng_seed=rng_seed + 2)),
        _tag("interior_limits", check_interior_limits(rng_seed=rng_seed + 3, tol=tol)),
    ]


def _suite_xi(ctx, tol, rng_seed, fast_ctx) -> List[Certificate]:
    return [
        _tag("collapse_conditions", check_collapse_conditions(ctx, tol, rng_seed + 4)),
        _tag("cone_bijectivity", check_cone_bijectivity(ctx, tol, rng_seed + 5)),
    ]


def _suite_plane(ctx, tol, rng_seed, fast_ctx) -> List[Certificate]:
    core = _canonical_core(ctx)
    certs = [
        _tag("slit_continuity", check_slit_continuity(ctx)),
        _tag("rays_exact", check_rays_exact(ctx, rng_seed=rng_seed + 6)),
        _tag("plane_convergence", check_plane_convergence(ctx, tol, core=core)),
        _tag("excursion", check_excursion(ctx, core=core)),
    ]
    certs.extend(
        _tag("displacement", c) for c in check_displacement_battery(ctx, fast_ctx)
    )
    certs.extend(
        _tag("orientation", c) for c in check_orientation_battery(ctx, rng_seed + 7)
    )
    certs.append(_tag("semiconjugacy", check_semiconjugacy(ctx, tol)))
    certs.append(_tag("example_contrast", check_example_contrast(rng_seed + 8)))
    certs.append(
        _tag(
            "orbit_bounded",
            boundedness_certificate((Fraction(0), Fraction(0)), (-300, 300), ctx, tol),
        )
    )
    certs.append(
        _tag(
            "ray_period_two",
            boundedness_certificate((Fraction(2), Fraction(0)), (-300, 300), ctx, tol),
        )
    )
    return certs
