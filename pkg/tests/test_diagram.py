from fractions import Fraction

import pytest

from twobridge.conway import ConwayNotation, continued_fraction
from twobridge.diagram import (
    direction_schedule,
    gauss_code,
    goeritz_determinant,
    kauffman_determinant,
    project,
    verify_knot_type,
)
from twobridge.errors import (
    DegenerateDirectionError,
    DisconnectedDiagramError,
    TooManyCrossingsError,
)
from twobridge.lattice import LatticePolygon, build_unfolded, fold

SQUARE = LatticePolygon((((0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)),))


def _generic_projection(polygon):
    for direction in direction_schedule(polygon):
        try:
            return project(polygon, direction)
        except DegenerateDirectionError:
            continue
    raise AssertionError("no generic direction found")


def test_planar_square_unknot():
    diag = _generic_projection(SQUARE)
    assert diag.n_crossings == 0
    assert goeritz_determinant(diag) == 1
    assert kauffman_determinant(diag) == 1
    assert gauss_code(diag) == "(free loop)"


def test_exact_vertical_direction_rejected():
    with pytest.raises(DegenerateDirectionError):
        project(build_unfolded(ConwayNotation((2,))), (0, 0, 1))


def test_unfolded_projection_has_exactly_c_crossings():
    for twists in [(2,), (3,), (2, 3, 2), (1, 1, 4)]:
        cn = ConwayNotation(twists)
        diag = _generic_projection(build_unfolded(cn))
        assert diag.n_crossings == sum(twists)


def test_determinants_match_fraction_numerator():
    for twists in [(2,), (3,), (1, 1, 1), (2, 3, 2), (1, 1, 4), (2, 2, 2)]:
        cn = ConwayNotation(twists)
        expected = continued_fraction(cn).numerator
        diag = _generic_projection(build_unfolded(cn))
        assert goeritz_determinant(diag) == expected
        assert kauffman_determinant(diag) == expected


def test_goeritz_choice_independence():
    diag = _generic_projection(build_unfolded(ConwayNotation((2, 3, 2))))
    values = {goeritz_determinant(diag, shaded_color=color, removed_index=k)
              for color in (0, 1) for k in (0, 1, 2)}
    assert values == {16}


def test_direction_independence():
    poly = fold(ConwayNotation((1, 1, 4)))
    found = []
    for direction in direction_schedule(poly, 32):
        try:
            found.append(goeritz_determinant(project(poly, direction)))
        except DegenerateDirectionError:
            continue
        if len(found) == 5:
            break
    assert len(found) == 5 and set(found) == {9}


def test_kauffman_cap():
    diag = _generic_projection(build_unfolded(ConwayNotation((4, 3, 7))))
    with pytest.raises(TooManyCrossingsError):
        kauffman_determinant(diag, cap=12)


def test_disconnected_diagram_rejected():
    far_squares = LatticePolygon((
        ((0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)),
        ((9, 9, 0), (10, 9, 0), (10, 10, 0), (9, 10, 0)),
    ))
    diag = _generic_projection(far_squares)
    assert not diag.is_connected()
    with pytest.raises(DisconnectedDiagramError):
        goeritz_determinant(diag)
    # the state sum sees a split diagram: its determinant vanishes
    assert kauffman_determinant(diag) == 0


def test_verify_knot_type_reports():
    report = verify_knot_type(fold(ConwayNotation((2, 3, 2))),
                              ConwayNotation((2, 3, 2)))
    assert report.passed and report.determinant == report.expected == 16
    report = verify_knot_type(fold(ConwayNotation((3,))), ConwayNotation((5,)))
    assert not report.passed
    assert (report.determinant, report.expected) == (3, 5)
    report = verify_knot_type(build_unfolded(ConwayNotation((2,))),
                              ConwayNotation((2,)))
    assert report.passed and report.determinant == 2
    assert "necessary" in report.note


def test_gauss_code_structure():
    cn = ConwayNotation((3,))
    diag = _generic_projection(build_unfolded(cn))
    code = gauss_code(diag)
    assert sum(part.startswith("O") for part in code.split()) == 3
    assert sum(part.startswith("U") for part in code.split()) == 3


def test_schedule_is_deterministic():
    poly = build_unfolded(ConwayNotation((3,)))
    assert direction_schedule(poly) == direction_schedule(poly)
    assert all(isinstance(d[0], Fraction) for d in direction_schedule(poly))
