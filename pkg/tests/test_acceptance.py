"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the summary lines.
Two sub-criteria assert literature approximations that contradict the
closed forms they were derived from; they are implemented verbatim and
marked strict-xfail, with the discrepancy documented in the test body.
"""

import math
import time

import pytest

from twobridge.conway import (
    SQRT_PI2_PLUS_4,
    ConwayNotation,
    continued_fraction,
    crossing_number,
    reduced_ropelength_bound,
    ropelength_bound,
)
from twobridge.diagram import (
    direction_schedule,
    goeritz_determinant,
    kauffman_determinant,
    project,
    verify_knot_type,
)
from twobridge.errors import DegenerateDirectionError
from twobridge.lattice import build_unfolded, edge_count, fold, is_self_avoiding
from twobridge.rope import (
    build_reduced,
    build_tower,
    fold_tower,
    folded_closed_form,
    part_length,
    total_length,
    tower_closed_form,
)
from twobridge.thickness import (
    audit,
    compute_min_h,
    crossing_clearance,
    verify_taylor_minorant,
)


def _report(line):
    print(f"\n{line}")


def test_criterion_1_edge_counts(corpus_c12):
    t0 = time.time()
    for cn in corpus_c12:
        c = crossing_number(cn)
        unfolded = build_unfolded(cn)
        folded = fold(cn)
        assert edge_count(unfolded) == 10 * c, cn
        assert edge_count(folded) == 8 * c + 2, cn
        assert is_self_avoiding(unfolded), cn
        assert is_self_avoiding(folded), cn
    _report(f"ACCEPTANCE 1: PASS - 10c and 8c+2 edges, self-avoiding and "
            f"closed, for all {len(corpus_c12)} notations with c <= 12 "
            f"({time.time() - t0:.1f}s)")


def _first_generic(polygon):
    for direction in direction_schedule(polygon):
        try:
            return project(polygon, direction)
        except DegenerateDirectionError:
            continue
    raise AssertionError("no generic direction in the schedule")


def test_criterion_2_knot_type(corpus_c10):
    t0 = time.time()
    oracle_pairs = 0
    for cn in corpus_c10:
        expected = continued_fraction(cn).numerator
        for polygon in (build_unfolded(cn), fold(cn)):
            diagram = _first_generic(polygon)
            assert goeritz_determinant(diagram) == expected, cn
            if diagram.n_crossings <= 10:
                assert kauffman_determinant(diagram) == expected, cn
                oracle_pairs += 1
    _report(f"ACCEPTANCE 2: PASS - Goeritz determinant equals the "
            f"continued-fraction numerator for both constructions over "
            f"{len(corpus_c10)} notations with c <= 10; brute-force state "
            f"sum agrees on {oracle_pairs} diagrams with <= 10 crossings "
            f"({time.time() - t0:.1f}s)")


def test_criterion_3_rope_closed_forms(corpus_c12):
    t0 = time.time()
    for h in (1.205, 1.3, 2.0):
        for cn in corpus_c12:
            c = crossing_number(cn)
            lt = total_length(build_tower(cn, h))
            assert abs(lt - tower_closed_form(c, h)) <= 1e-9 * lt, (cn, h)
            lf = total_length(fold_tower(cn, h))
            assert abs(lf - folded_closed_form(c, h)) <= 1e-9 * lf, (cn, h)
            assert lf <= ropelength_bound(c, h) + 1e-9, (cn, h)
    _report(f"ACCEPTANCE 3: PASS - tower and folded lengths match their "
            f"closed forms to 1e-9 relative and respect the ropelength "
            f"bound for c <= 12 and h in (1.205, 1.3, 2.0) "
            f"({time.time() - t0:.1f}s)")


def test_criterion_4_constants():
    analysis = compute_min_h()
    assert analysis.h_min == pytest.approx(1.2045, abs=5e-4)
    assert part_length("same-side-bottom", 1.205) == pytest.approx(
        28.38, abs=0.01)
    assert part_length("even-top", 1.205) == pytest.approx(27.19, abs=0.03)
    assert part_length("odd-top", 1.205) == pytest.approx(29.52, abs=0.01)
    assert 2 * 1.205 * (SQRT_PI2_PLUS_4 + 1) <= 11.39
    assert 4 * math.pi + 14 * 1.205 <= 29.44
    # recomposition of the improved constant: worst bottom + worst top
    # minus the four-floor middle credit
    constant = (part_length("same-side-bottom", 1.205)
                + part_length("odd-top", 1.205)
                - 4 * 2 * 1.205 * (SQRT_PI2_PLUS_4 + 1))
    assert constant <= 12.37
    _report("ACCEPTANCE 4: PASS - h_min 1.2045 +- 5e-4, part lengths "
            "28.38/27.19/29.52 at their stated tolerances, coefficient "
            "and constant-term inequalities hold "
            f"(theta0={analysis.theta0:.6f}, h_min={analysis.h_min:.6f})")


@pytest.mark.xfail(
    strict=True,
    reason="stated approximation 2.3946 contradicts the defining closed "
           "form: theta0 = sqrt(10 - sqrt(100 - 120(1 - 4/pi^2))) = "
           "2.15613..., the unique stationary point of the minorant, and "
           "only that value reproduces h_min = 1.2045; 2.3946 instead "
           "solves the formula with 4/pi^2 misread as 1/pi")
def test_criterion_4_theta0_as_stated():
    analysis = compute_min_h()
    _report(f"ACCEPTANCE 4 (theta0 approx 2.3946 as stated): FAIL expected - "
            f"closed form gives {analysis.theta0:.6f}")
    assert analysis.theta0 == pytest.approx(2.3946, abs=5e-4)


@pytest.mark.xfail(
    strict=True,
    reason="the opposite-side bottom formula "
           "(sqrt((2h)^2+(2h+2)^2)-2+pi) + (sqrt((4h)^2+(2h+2)^2)-6+3pi) + "
           "(2(3pi/2-theta-phi)+sqrt((2h+2)^2-4)+sqrt((2h)^2-4)+2beta) "
           "evaluates to 27.6408 at h=1.205, not to the stated 27.19; the "
           "final 11.39c+12.37 bound is unaffected because it uses the "
           "larger same-side value 28.38")
def test_criterion_4_opposite_bottom_as_stated():
    value = part_length("opposite-side-bottom", 1.205)
    _report(f"ACCEPTANCE 4 (opposite-side bottom approx 27.19 as stated): "
            f"FAIL expected - formula gives {value:.4f}")
    assert value == pytest.approx(27.19, abs=0.03)


def test_criterion_5_reduced_bound(corpus_c12):
    t0 = time.time()
    eligible = [cn for cn in corpus_c12 if crossing_number(cn) >= 6]
    for cn in eligible:
        total = total_length(build_reduced(cn))
        assert total <= reduced_ropelength_bound(crossing_number(cn)) + 1e-9, cn
    _report(f"ACCEPTANCE 5: PASS - reduced embedding length <= 11.39c + "
            f"12.37 for all {len(eligible)} notations with 6 <= c <= 12 "
            f"({time.time() - t0:.1f}s)")


AUDIT_NOTATIONS = {
    6: [(6,), (2, 1, 3)],
    7: [(7,), (3, 1, 3)],
    8: [(8,), (3, 1, 4)],
    9: [(9,), (4, 1, 4)],
}


def test_criterion_6_thickness():
    t0 = time.time()
    audited = 0
    for c, notations in AUDIT_NOTATIONS.items():
        for twists in notations:
            cn = ConwayNotation(twists)
            assert crossing_number(cn) == c
            for curve in (fold_tower(cn, 1.205), build_reduced(cn, 1.205)):
                report = audit(curve, 0.01, 0.05)
                assert report.min_nonneighbor_distance >= 1.95, (twists, report)
                assert report.min_curvature_radius >= 1.0 - 1e-12, twists
                assert report.passed, (twists, report)
                audited += 1
    assert crossing_clearance(1.205) >= 2.0
    assert crossing_clearance(1.0) < 2.0
    assert verify_taylor_minorant()
    _report(f"ACCEPTANCE 6: PASS - {audited} folded/reduced curves pass the "
            f"unit-tube audit at step 0.01, tol 0.05 for c in 6..9; "
            f"clearance(1.205) >= 2 > clearance(1.0); Taylor minorant "
            f"verified ({time.time() - t0:.1f}s)")


def test_criterion_7_properties(corpus_c10):
    t0 = time.time()
    # (a) projection-direction independence of the determinant
    for twists in [(3,), (2, 3, 2), (1, 1, 4)]:
        polygon = fold(ConwayNotation(twists))
        determinants = []
        for direction in direction_schedule(polygon, 48):
            try:
                determinants.append(goeritz_determinant(project(polygon,
                                                                direction)))
            except DegenerateDirectionError:
                continue
            if len(determinants) == 5:
                break
        assert len(determinants) == 5 and len(set(determinants)) == 1, twists
    # (b) continued-fraction numerator reversal invariance, exhaustively
    for cn in corpus_c10:
        assert (continued_fraction(cn).numerator
                == continued_fraction(cn.reversed()).numerator)
    # (c) construction determinism: two runs byte-identical
    for twists in [(2, 3, 2), (1, 1, 4)]:
        cn = ConwayNotation(twists)
        assert repr(build_unfolded(cn)) == repr(build_unfolded(cn))
        assert repr(fold(cn)) == repr(fold(cn))
        first = [s.describe() for s in build_reduced(cn).segments()]
        second = [s.describe() for s in build_reduced(cn).segments()]
        assert first == second
    _report(f"ACCEPTANCE 7: PASS - direction independence (5 generic "
            f"directions each), reversal invariance over {len(corpus_c10)} "
            f"notations, and byte-identical reruns "
            f"({time.time() - t0:.1f}s)")
