"""Conway notation for 2-bridge knots and links, with the closed-form bounds.

A nontrivial 2-bridge knot or link is described by a tuple of positive
twist counts (a_1, ..., a_m) with m odd.  The crossing number of the
associated alternating diagram is the plain sum of the entries, and the
classifying fraction p/q is evaluated by the usual continued-fraction
recursion.  The three length bounds certified elsewhere in the package
are exposed here as closed-form functions of the crossing number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EmptyNotationError,
    EvenLengthError,
    MalformedNotationError,
    NonPositiveTwistError,
    TooFewCrossingsError,
    TubeTooThinError,
)
from .thickness import MIN_TUBE_SCALE

__all__ = [
    "ConwayNotation",
    "TwoBridgeFraction",
    "parse_conway",
    "crossing_number",
    "continued_fraction",
    "lattice_length_bound",
    "ropelength_bound",
    "reduced_ropelength_bound",
    "SQRT_PI2_PLUS_4",
]

#: sqrt(pi^2 + 4), the length of one half-turn helical arc at unit scale.
SQRT_PI2_PLUS_4 = math.sqrt(math.pi * math.pi + 4.0)


@dataclass(frozen=True)
class ConwayNotation:
    """Validated twist-count tuple (a_1, ..., a_m), every a_i >= 1, m odd."""

    twists: tuple[int, ...]

    def __post_init__(self):
        if not self.twists:
            raise EmptyNotationError("notation needs at least one twist count")
        if any(not isinstance(a, int) or isinstance(a, bool) for a in self.twists):
            raise MalformedNotationError(f"twist counts must be integers: {self.twists!r}")
        if any(a <= 0 for a in self.twists):
            raise NonPositiveTwistError(
                f"all twist counts must be positive: {self.twists!r}")
        if len(self.twists) % 2 == 0:
            raise EvenLengthError(
                f"normal form needs an odd number of entries, got {len(self.twists)}")

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.twists)

    def reversed(self) -> "ConwayNotation":
        return ConwayNotation(tuple(reversed(self.twists)))


@dataclass(frozen=True)
class TwoBridgeFraction:
    """Classifying fraction p/q of a 2-bridge knot or link, gcd(p, q) = 1."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if math.gcd(self.numerator, self.denominator) != 1:
            raise ValueError("fraction must be in lowest terms")


def parse_conway(text: str) -> ConwayNotation:
    """Parse a comma-separated twist list such as ``"2,3,2"``.

    Raises:
        EmptyNotationError: no entries at all.
        MalformedNotationError: an entry is not an integer literal.
        NonPositiveTwistError: an entry is <= 0.
        EvenLengthError: an even number of entries.
    """
    stripped = text.strip()
    if not stripped:
        raise EmptyNotationError("empty Conway notation")
    entries = [piece.strip() for piece in stripped.split(",")]
    if any(not piece for piece in entries):
        raise MalformedNotationError(f"blank entry in notation: {text!r}")
    twists = []
    for piece in entries:
        try:
            twists.append(int(piece, 10))
        except ValueError as exc:
            raise MalformedNotationError(f"not an integer: {piece!r}") from exc
    return ConwayNotation(tuple(twists))


def crossing_number(cn: ConwayNotation) -> int:
    """Crossing number of the standard alternating diagram: sum of the twists."""
    return sum(cn.twists)


def continued_fraction(cn: ConwayNotation) -> TwoBridgeFraction:
    """Evaluate the notation's continued fraction exactly.

    v <- a_1, then v <- a_i + 1/v for i = 2..m; the result p/q is returned
    in lowest terms.  The numerator p equals the determinant of the knot
    or link and is invariant under reversal of the twist list.
    """
    value = Fraction(cn.twists[0])
    for a in cn.twists[1:]:
        value = a + 1 / value
    return TwoBridgeFraction(value.numerator, value.denominator)


def lattice_length_bound(c: int) -> int:
    """Certified lattice edge count 8c + 2 for crossing number c >= 2."""
    if c < 2:
        raise TooFewCrossingsError(f"no nontrivial 2-bridge diagram with c={c}")
    return 8 * c + 2


def ropelength_bound(c: int, h: float) -> float:
    """Certified ropelength 2h(sqrt(pi^2+4)+1)c + 4pi + 14h.

    Requires c >= 2 and h at or above the clearance threshold
    :data:`twobridge.thickness.MIN_TUBE_SCALE` (~1.2045).
    """
    if c < 2:
        raise TooFewCrossingsError(f"no nontrivial 2-bridge diagram with c={c}")
    if h < MIN_TUBE_SCALE:
        raise TubeTooThinError(
            f"h={h} below clearance threshold {MIN_TUBE_SCALE:.6f}")
    return 2.0 * h * (SQRT_PI2_PLUS_4 + 1.0) * c + 4.0 * math.pi + 14.0 * h


def reduced_ropelength_bound(c: int) -> float:
    """Improved-constant ropelength bound 11.39c + 12.37, valid for c >= 6."""
    if c < 6:
        raise TooFewCrossingsError(
            f"reduced bound needs crossing number >= 6, got {c}")
    return 11.39 * c + 12.37
