from collections import Counter

import pytest

from twobridge.conway import ConwayNotation, continued_fraction, crossing_number
from twobridge.errors import TooFewCrossingsError
from twobridge.lattice import (
    LatticePolygon,
    build_unfolded,
    edge_count,
    fold,
    is_self_avoiding,
)

SAMPLES = [(2,), (3,), (1, 1, 1), (2, 3, 2), (1, 1, 4), (5, 1, 5),
           (1, 2, 1, 2, 1), (2, 2, 2, 2, 2), (14,), (4, 3, 7)]


@pytest.mark.parametrize("twists", SAMPLES)
def test_edge_counts_and_wellformedness(twists):
    cn = ConwayNotation(twists)
    c = crossing_number(cn)
    unfolded = build_unfolded(cn)
    folded = fold(cn)
    assert edge_count(unfolded) == 10 * c
    assert edge_count(folded) == 8 * c + 2
    assert is_self_avoiding(unfolded)
    assert is_self_avoiding(folded)
    assert unfolded.z_levels() <= {1, 2}
    assert folded.z_levels() <= {1, 2, 3, 4}


@pytest.mark.parametrize("twists", SAMPLES)
def test_component_count_matches_determinant_parity(twists):
    # 2-bridge links (even determinant) have two components, knots one
    cn = ConwayNotation(twists)
    expected = 2 if continued_fraction(cn).numerator % 2 == 0 else 1
    assert len(build_unfolded(cn).components) == expected
    assert len(fold(cn).components) == expected


def test_too_few_crossings():
    with pytest.raises(TooFewCrossingsError):
        build_unfolded(ConwayNotation((1,)))
    with pytest.raises(TooFewCrossingsError):
        fold(ConwayNotation((1,)))


def _axis(a, b):
    d = tuple(q - p for p, q in zip(a, b))
    return {(1, 0, 0): "x", (-1, 0, 0): "x", (0, 1, 0): "y",
            (0, -1, 0): "y", (0, 0, 1): "z", (0, 0, -1): "z"}[d]


def test_per_floor_edge_budget():
    # every crossing floor consumes 4 x-edges and 4 y-edges, with 2c
    # z-edges overall (z-edges sit on floor boundaries, so they are
    # counted globally); the level coordinate runs along x - y
    cn = ConwayNotation((2, 3, 2))
    c = crossing_number(cn)
    poly = build_unfolded(cn)
    per_floor = Counter()
    z_total = 0
    for comp in poly.components:
        n = len(comp)
        for i in range(n):
            a, b = comp[i], comp[(i + 1) % n]
            axis = _axis(a, b)
            if axis == "z":
                z_total += 1
                continue
            level = min(a[0] - a[1], b[0] - b[1])
            per_floor[(min(level // 2, c - 1), axis)] += 1
    assert z_total == 2 * c
    for floor in range(c):
        assert per_floor[(floor, "x")] == 4
        assert per_floor[(floor, "y")] == 4


def test_determinism():
    cn = ConwayNotation((3, 1, 2))
    assert build_unfolded(cn) == build_unfolded(cn)
    assert fold(cn) == fold(cn)


def test_is_self_avoiding_checker():
    square = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]
    assert is_self_avoiding(square)
    assert is_self_avoiding(LatticePolygon((tuple(square),)))
    repeated = [(0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 1, 0)]
    assert not is_self_avoiding(repeated)
    gap = [(0, 0, 0), (1, 0, 0), (1, 2, 0), (0, 1, 0)]
    assert not is_self_avoiding(gap)
    assert is_self_avoiding(fold(ConwayNotation((5, 1, 5))))
