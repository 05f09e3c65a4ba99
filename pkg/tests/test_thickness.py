import math

import pytest

from twobridge.conway import ConwayNotation
from twobridge.errors import StepTooCoarseError
from twobridge.rope import CircularArc, LineSegment, PiecewiseCurve, fold_tower
from twobridge.thickness import (
    MIN_TUBE_SCALE,
    audit,
    clearance_radicand,
    compute_min_h,
    crossing_clearance,
    taylor_minorant,
    taylor_minorant_derivative,
    verify_taylor_minorant,
)


def test_critical_angle_against_bisection_oracle():
    # independent root-finder for f'(theta) = 0 on (0, pi)
    lo, hi = 1.0, 3.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if taylor_minorant_derivative(mid) > 0:
            hi = mid
        else:
            lo = mid
    analysis = compute_min_h()
    assert analysis.theta0 == pytest.approx(0.5 * (lo + hi), abs=1e-9)
    assert abs(taylor_minorant_derivative(analysis.theta0)) < 1e-9
    assert analysis.f_at_theta0 == pytest.approx(
        taylor_minorant(analysis.theta0), abs=1e-12)


def test_min_h_value():
    analysis = compute_min_h()
    assert analysis.h_min == pytest.approx(1.2045, abs=5e-4)
    assert analysis.h_min == pytest.approx(2 / math.sqrt(analysis.f_at_theta0))
    assert MIN_TUBE_SCALE == analysis.h_min
    assert analysis.dist(0.0, 1.3) == pytest.approx(2.6)


def test_crossing_clearance():
    assert crossing_clearance(1.205) >= 2.0
    assert crossing_clearance(1.0) < 2.0
    assert crossing_clearance(MIN_TUBE_SCALE) >= 2.0 - 1e-6
    # scaling law: the minimizer is h-independent
    values = [crossing_clearance(h) for h in (1.0, 1.2045, 1.205, 1.5, 2.0)]
    assert values == sorted(values)
    base = crossing_clearance(1.0)
    for h, v in zip((1.0, 1.2045, 1.205, 1.5, 2.0), values):
        assert v == pytest.approx(h * base, rel=1e-9)


def test_taylor_minorant():
    assert verify_taylor_minorant()
    assert clearance_radicand(0.0) == pytest.approx(4.0)
    assert taylor_minorant(0.0) == pytest.approx(4.0)
    assert clearance_radicand(math.pi) == pytest.approx(4.0)
    assert taylor_minorant(math.pi) < 4.0


def _rectangle(z, width=10.0, height=3.0):
    return (
        (LineSegment((0.0, 0.0, z), (width, 0.0, z)), False),
        (LineSegment((width, 0.0, z), (width, height, z)), False),
        (LineSegment((width, height, z), (0.0, height, z)), False),
        (LineSegment((0.0, height, z), (0.0, 0.0, z)), False),
    )


def test_audit_parallel_tubes_at_distance_two():
    curve = PiecewiseCurve((_rectangle(0.0), _rectangle(2.0)))
    report = audit(curve, sample_step=0.05, tolerance=0.0)
    assert report.min_nonneighbor_distance == pytest.approx(2.0, abs=1e-9)
    assert math.isinf(report.min_curvature_radius)
    assert report.passed


def test_audit_fails_on_tight_circle():
    loop = ((CircularArc((0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0),
                         0.9, 0.0, 2 * math.pi), False),)
    report = audit(PiecewiseCurve((loop,)), sample_step=0.05, tolerance=0.0)
    assert report.min_curvature_radius == pytest.approx(0.9)
    assert not report.passed


def test_audit_fold_tower():
    curve = fold_tower(ConwayNotation((2, 3, 2)), 1.205)
    report = audit(curve, 0.01, 0.05)
    assert report.passed
    assert report.min_nonneighbor_distance >= 1.95
    assert report.min_curvature_radius >= 1.0 - 1e-12


def test_audit_determinism_and_step_guard():
    curve = fold_tower(ConwayNotation((3,)), 1.205)
    a = audit(curve, 0.02, 0.05)
    b = audit(curve, 0.02, 0.05)
    assert a == b
    with pytest.raises(StepTooCoarseError):
        audit(curve, 0.2, 0.05)
    with pytest.raises(ValueError):
        audit(curve, -0.1, 0.05)
    with pytest.raises(ValueError):
        audit(curve, 0.05, -1.0)
