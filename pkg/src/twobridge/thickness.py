"""Clearance analysis for the crossing cylinders and a sampled tube-thickness audit.

The closed-form part answers one question: how large must the cylinder
scale h be so that the two helical arcs sharing a crossing cylinder stay
at least distance 2 apart (unit tube radius)?  The distance from one
helix endpoint to the other helix is

    dist(theta) = h * sqrt(2 + 2*cos(theta) + 4*theta^2/pi^2),

and a degree-6 Taylor minorant of the radicand is minimized in closed
form to obtain the admissible threshold h_min = 2/sqrt(f(theta_0)).

The audit part is numerical: it samples a piecewise curve at uniform
arclength and checks the standard two-condition thickness criterion for
tube radius 1 (per-segment radius of curvature >= 1, non-neighbor
sampled distance >= 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .errors import StepTooCoarseError

__all__ = [
    "ClearanceAnalysis",
    "ThicknessReport",
    "MIN_TUBE_SCALE",
    "clearance_radicand",
    "taylor_minorant",
    "taylor_minorant_derivative",
    "compute_min_h",
    "crossing_clearance",
    "verify_taylor_minorant",
    "audit",
]

_PI2 = math.pi * math.pi


def clearance_radicand(theta: float) -> float:
    """Radicand of the endpoint-to-helix distance at unit scale h = 1."""
    return 2.0 + 2.0 * math.cos(theta) + 4.0 * theta * theta / _PI2


def taylor_minorant(theta: float) -> float:
    """Degree-6 lower bound for :func:`clearance_radicand` on [0, pi].

    f(theta) = 4 + (4/pi^2 - 1) theta^2 + theta^4/12 - theta^6/360,
    obtained by truncating the cosine series after its theta^6 term.
    """
    t2 = theta * theta
    return 4.0 + (4.0 / _PI2 - 1.0) * t2 + t2 * t2 / 12.0 - t2 * t2 * t2 / 360.0


def taylor_minorant_derivative(theta: float) -> float:
    """f'(theta) = -(2/5!) theta (theta^4 - 20 theta^2 + 120 (1 - 4/pi^2))."""
    t2 = theta * theta
    return -(2.0 / 120.0) * theta * (t2 * t2 - 20.0 * t2 + 120.0 * (1.0 - 4.0 / _PI2))


def _critical_angle() -> float:
    # Unique root of f'(theta) = 0 in (0, pi): the quartic in theta^2 has
    # roots 10 +- sqrt(100 - 120(1 - 4/pi^2)); only the minus sign lands
    # inside the interval.
    return math.sqrt(10.0 - math.sqrt(100.0 - 120.0 * (1.0 - 4.0 / _PI2)))


@dataclass(frozen=True)
class ClearanceAnalysis:
    """Closed-form minimum tube-scale data for a crossing cylinder."""

    theta0: float
    f_at_theta0: float
    h_min: float

    def dist(self, theta: float, h: float) -> float:
        """Distance from a helix endpoint to the opposite helix point at angle theta."""
        return h * math.sqrt(clearance_radicand(theta))


def compute_min_h() -> ClearanceAnalysis:
    """Evaluate theta_0, f(theta_0) and h_min = 2/sqrt(f(theta_0)).

    theta_0 = sqrt(10 - sqrt(100 - 120 (1 - 4/pi^2))) is the stationary
    point of the Taylor minorant on (0, pi); requiring
    h*sqrt(f(theta_0)) >= 2 keeps the two crossing arcs at distance >= 2.
    """
    theta0 = _critical_angle()
    f0 = taylor_minorant(theta0)
    return ClearanceAnalysis(theta0=theta0, f_at_theta0=f0, h_min=2.0 / math.sqrt(f0))


#: Minimum admissible cylinder scale for unit tube radius (~1.20449).
MIN_TUBE_SCALE = compute_min_h().h_min


def crossing_clearance(h: float, grid: int = 10_000) -> float:
    """Minimum of h*sqrt(2 + 2cos(theta) + 4 theta^2/pi^2) over [0, pi].

    Direct numerical minimization (dense grid plus golden-section
    refinement); independent of the Taylor minorant, so it serves as a
    cross-check on :func:`compute_min_h`.
    """
    if h <= 0.0:
        raise ValueError("tube scale h must be positive")
    thetas = np.linspace(0.0, math.pi, grid)
    values = 2.0 + 2.0 * np.cos(thetas) + 4.0 * thetas * thetas / _PI2
    k = int(np.argmin(values))
    lo = thetas[max(k - 1, 0)]
    hi = thetas[min(k + 1, grid - 1)]

    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = clearance_radicand(c), clearance_radicand(d)
    for _ in range(200):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = clearance_radicand(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = clearance_radicand(d)
        if b - a < 1e-14:
            break
    best = min(fc, fd, float(values[k]))
    return h * math.sqrt(best)


def verify_taylor_minorant(samples: int = 100_000) -> bool:
    """Check 2 + 2cos(theta) + 4 theta^2/pi^2 > f(theta) on (0, pi].

    Both sides equal 4 at theta = 0, so the strict inequality is sampled
    on the half-open interval only.  The difference shrinks like
    2 theta^8/8! near zero, far below double rounding noise of a direct
    subtraction, so for small theta it is evaluated through the cosine
    tail series (alternating with decreasing terms on this range, hence
    provably positive term by term).
    """
    thetas = np.linspace(0.0, math.pi, samples + 1)[1:]
    small = thetas < 0.9

    t = thetas[small]
    diff_small = np.zeros_like(t)
    t2 = t * t
    term = t2 ** 4 / math.factorial(8)
    sign = 1.0
    for k in range(4, 16):
        diff_small += sign * term
        term = term * t2 / ((2 * k + 1) * (2 * k + 2))
        sign = -sign
    ok_small = bool(np.all(diff_small > 0.0))

    t = thetas[~small]
    lhs = 2.0 + 2.0 * np.cos(t) + 4.0 * t * t / _PI2
    t2 = t * t
    rhs = 4.0 + (4.0 / _PI2 - 1.0) * t2 + t2 * t2 / 12.0 - t2 * t2 * t2 / 360.0
    return ok_small and bool(np.all(lhs > rhs))


@dataclass(frozen=True)
class ThicknessReport:
    """Outcome of a sampled tube-radius-1 audit."""

    min_nonneighbor_distance: float
    min_curvature_radius: float
    sample_step: float
    tolerance: float
    neighbor_cutoff: float
    passed: bool
    nearest_pair: tuple[tuple[float, float, float], tuple[float, float, float]] | None
    curvature_segment: str

    def as_dict(self) -> dict:
        dist = self.min_nonneighbor_distance
        curv = self.min_curvature_radius
        return {
            "schema": 1,
            "min_nonneighbor_distance": None if math.isinf(dist) else dist,
            "min_curvature_radius": None if math.isinf(curv) else curv,
            "sample_step": self.sample_step,
            "tolerance": self.tolerance,
            "neighbor_cutoff": self.neighbor_cutoff,
            "passed": self.passed,
            "nearest_pair": self.nearest_pair,
            "curvature_segment": self.curvature_segment,
        }


def audit(curve, sample_step: float = 0.01, tolerance: float = 0.05,
          neighbor_cutoff: float = math.pi) -> ThicknessReport:
    """Audit a piecewise curve against the unit-tube thickness criterion.

    The curve is sampled at arclength intervals <= ``sample_step``.  The
    global condition checks the minimum distance over sample pairs whose
    arclength separation (cyclic, within one loop) exceeds
    ``neighbor_cutoff``; pairs on different loops always qualify.  The
    local condition uses each segment's exact radius of curvature, no
    sampling.  Pass requires

        min_nonneighbor_distance >= 2 - tolerance   and
        min_curvature_radius    >= 1 - tolerance.

    ``curve`` must provide ``sample_points(step)`` returning
    ``(points, loop_ids, arclengths, loop_lengths)`` and
    ``min_curvature_radius()`` returning ``(value, label)``; the
    ``PiecewiseCurve`` type from :mod:`twobridge.rope` does.
    """
    if sample_step > 0.1:
        raise StepTooCoarseError(
            f"sample_step {sample_step} exceeds the 0.1 maximum")
    if sample_step <= 0.0:
        raise ValueError("sample_step must be positive")
    if tolerance < 0.0:
        raise ValueError("tolerance must be nonnegative")

    points, loop_ids, arclens, loop_lengths = curve.sample_points(sample_step)
    min_curv, curv_label = curve.min_curvature_radius()

    n = len(points)
    tree = cKDTree(points)
    radius = 2.0 + 10.0 * sample_step
    best = math.inf
    best_pair = None
    span = float(np.max(points) - np.min(points)) + 1.0
    while True:
        pairs = tree.query_pairs(r=radius, output_type="ndarray")
        if len(pairs):
            i, j = pairs[:, 0], pairs[:, 1]
            same = loop_ids[i] == loop_ids[j]
            sep = np.abs(arclens[i] - arclens[j])
            lengths = loop_lengths[loop_ids[i]]
            cyc = np.minimum(sep, lengths - sep)
            keep = (~same) | (cyc > neighbor_cutoff)
            if np.any(keep):
                i, j = i[keep], j[keep]
                d = np.linalg.norm(points[i] - points[j], axis=1)
                k = int(np.argmin(d))
                best = float(d[k])
                best_pair = (tuple(points[i[k]]), tuple(points[j[k]]))
                break
        if radius > 2.0 * span or n < 2:
            break
        radius *= 2.0

    passed = (best >= 2.0 - tolerance) and (min_curv >= 1.0 - tolerance)
    return ThicknessReport(
        min_nonneighbor_distance=best,
        min_curvature_radius=min_curv,
        sample_step=sample_step,
        tolerance=tolerance,
        neighbor_cutoff=neighbor_cutoff,
        passed=passed,
        nearest_pair=best_pair,
        curvature_segment=curv_label,
    )
