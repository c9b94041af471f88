"""Orbit machinery, certificates, and the verification suites."""

from fractions import Fraction

import pytest

from planardyn.numerics import DomainError
from planardyn import dynamics as dyn


@pytest.fixture(scope="module")
def registry(ctx):
    return dyn.map_registry(ctx)


def test_registry_contents(registry):
    assert sorted(registry) == [
        "Phi",
        "eta",
        "example12",
        "f",
        "f01",
        "f02",
        "g",
        "h",
        "phi",
        "xi",
        "zeta",
    ]
    assert registry["f"].exact and registry["f"].piece_key is not None
    assert not registry["h"].exact and registry["h"].lifted is not None


def test_orbit_exact_entries(registry):
    rec = dyn.orbit(registry["f"], (Fraction(1, 3), Fraction(1, 5)), (-2, 2))
    assert rec.map_id == "f" and rec.arithmetic == "exact"
    entries = {n: p for n, p, _ in rec.entries}
    assert entries[0] == (Fraction(1, 3), Fraction(1, 5))
    assert entries[1] == (Fraction(-1, 3), Fraction(3, 5))
    assert entries[-1] == (Fraction(-1, 3), Fraction(-3, 10))
    assert entries[-2] == (Fraction(1, 3), Fraction(-13, 20))


def test_orbit_interval_map(registry):
    rec = dyn.orbit(registry["f01"], Fraction(1, 4), (0, 2))
    heights = [p[0] for _, p, _ in rec.entries]
    assert heights == [Fraction(1, 4), Fraction(5, 8), Fraction(13, 16)]


def test_orbit_lifted_map(registry, ctx):
    rec = dyn.orbit(registry["h"], (ctx.mpf(0), ctx.mpf(0)), (0, 2))
    assert rec.arithmetic == "bigfloat"
    entries = {n: p for n, p, _ in rec.entries}
    assert abs(entries[1][1] - 1) < 1e-70
    assert abs(entries[2][1] - ctx.tan(3 * ctx.pi / 8)) < 1e-70


def test_orbit_domain_error_names_the_step(registry):
    with pytest.raises(DomainError, match="step 1"):
        dyn.orbit(registry["eta"], (Fraction(0), Fraction(-1, 4)), (0, 1))
    with pytest.raises(DomainError, match="empty step range"):
        dyn.orbit(registry["f"], (Fraction(0), Fraction(0)), (2, 1))


def test_limit_estimate_converges_to_top_corners(registry, tol):
    est = dyn.limit_estimate(registry["f"], (Fraction(0), Fraction(1, 4)), "omega", tol)
    assert est.converged
    assert est.horizon == tol.horizon
    assert set(est.parity) == {"even", "odd"}
    corners = [(Fraction(1), Fraction(1)), (Fraction(-1), Fraction(1))]
    for p in est.points:
        assert min(abs(p[0] - c[0]) + abs(p[1] - c[1]) for c in corners) < Fraction(1, 100)


def test_limit_estimate_alpha_side(registry, tol):
    est = dyn.limit_estimate(registry["f"], (Fraction(0), Fraction(1, 4)), "alpha", tol)
    assert est.converged
    assert all(p[1] < 0 for p in est.points)


def test_ladder_witness_canonical():
    cert = dyn.ladder_witness((Fraction(0), Fraction(1, 4)), 5)
    assert cert.passed
    ladder = dict(tuple(row) for row in cert.evidence["ladder"])
    assert ladder[2] == "2/3"
    assert ladder[4] == "8/9"
    assert ladder[6] == "35/36"
    assert cert.evidence["heights_follow_profile"]
    assert all(row["conclusion"] for row in cert.evidence["block_crossings"])


def test_ladder_witness_rejects_bad_seed():
    with pytest.raises(DomainError):
        dyn.ladder_witness((Fraction(0), Fraction(3, 4)), 3)


def test_displacement_scan_exact(registry):
    cert = dyn.displacement_scan(registry["f"], ((-1, 1), (-1, 1)), (20, 20))
    assert cert.kind == "fixedpointfree"
    assert cert.passed
    assert cert.evidence["min_displacement"] > 0
    assert len(cert.evidence["argmin"]) == 2


def test_orientation_probe_square_map(registry):
    cert = dyn.orientation_probe(registry["f"], 60, rng_seed=7)
    assert cert.passed
    assert cert.evidence["signs"]["negative"] == 60


def test_orientation_probe_detects_preservation(registry):
    # the vertical shift alone preserves orientation, so the probe must fail
    cert = dyn.orientation_probe(registry["f02"], 40, rng_seed=7)
    assert not cert.passed
    assert cert.evidence["signs"]["negative"] == 0


def test_boundedness_certificate_ray(ctx, tol):
    cert = dyn.boundedness_certificate((Fraction(2), Fraction(0)), (-10, 10), ctx, tol)
    assert cert.passed
    assert cert.evidence["trivial"] and cert.evidence["period"] == 2


def test_boundedness_certificate_interior(ctx, tol):
    cert = dyn.boundedness_certificate((Fraction(0), Fraction(0)), (-60, 60), ctx, tol)
    assert cert.passed
    assert cert.evidence["lift_interior_exact"]
    assert cert.evidence["sup_norm"] > 0
    assert cert.evidence["collapse_boundary_margin"] > 0


def test_semiconjugacy_probe_single_seed(ctx, tol):
    cert = dyn.semiconjugacy_probe([(Fraction(1, 3), Fraction(1, 5))], tol, ctx)
    assert cert.passed
    assert cert.evidence["inconclusive"] == 0


def test_run_suite_core(ctx, tol):
    report = dyn.run_suite("core", ctx, tol)
    assert report["passed"]
    assert len(report["certificates"]) == 7
    checks = [c["evidence"]["check"] for c in report["certificates"]]
    assert checks == [
        "boundary_identity",
        "rising_bijectivity",
        "seam_agreement",
        "reversal_symmetry",
        "ladder_canonical",
        "ladder_random",
        "interior_limits",
    ]
    assert report["metadata"]["sampler_seed"] == dyn.DEFAULT_SAMPLER_SEED


def test_run_suite_unknown_name(ctx, tol):
    with pytest.raises(DomainError):
        dyn.run_suite("everything", ctx, tol)
