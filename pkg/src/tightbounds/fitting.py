"""Exact affine bound fitting over rational points.

Each fit solves a small linear program by candidate enumeration instead of a
numeric solver: the optimum of a bounded-slack objective is always attained
at a vertex of the feasible region, and every vertex is the line through two
input points with distinct x (or, in the two-invariant case, the plane
through three points with non-collinear projections).  Enumerating those
candidates, filtering for feasibility, and minimizing the total slack is
therefore exact -- every coefficient in every result is a Fraction.

Upper fits minimize the total slack sum(m*x_i + b - y_i) subject to
y_i <= m*x_i + b; lower fits mirror this (maximize, subject to >=).  Either
way the winner is the feasible candidate with the least total slack.

Tie-breaking among equal-objective candidates is pinned for determinism:
prefer the candidate tight on more input points, then smaller total |slope|,
then smaller |intercept|, then lexicographically smallest coefficients.  A
winner with any zero slope is reported as degenerate rather than ok: a flat
bound says nothing about the relationship being probed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Sequence

Point = tuple[Fraction, Fraction]
Point2 = tuple[Fraction, Fraction, Fraction]

UPPER = "upper"
LOWER = "lower"


class FitStatus(Enum):
    OK = "ok"
    INFEASIBLE = "infeasible"
    DEGENERATE_ZERO_SLOPE = "degenerate_zero_slope"
    TOO_FEW_ROWS = "too_few_rows"


@dataclass(frozen=True)
class FitResult:
    """Outcome of one optimization model.

    ``slopes`` has length 1 (single invariant) or 2; ``objective`` is the
    total slack of the winning bound.  Only status == OK results describe a
    usable bound.
    """

    slopes: tuple[Fraction, ...]
    intercept: Fraction
    direction: str
    objective: Fraction
    status: FitStatus

    @classmethod
    def failed(cls, direction: str, status: FitStatus, width: int = 1) -> "FitResult":
        zero = Fraction(0)
        return cls((zero,) * width, zero, direction, zero, status)


def _select_candidate(
    candidates: dict[tuple[Fraction, ...], tuple[Fraction, int]],
) -> tuple[tuple[Fraction, ...], Fraction] | None:
    """Pick the winner: least objective, then the pinned tie-break order."""
    best_key: tuple | None = None
    best_coeffs: tuple[Fraction, ...] | None = None
    best_objective: Fraction | None = None
    for coeffs, (objective, tight) in candidates.items():
        slopes, intercept = coeffs[:-1], coeffs[-1]
        key = (
            objective,
            -tight,
            sum(abs(m) for m in slopes),
            abs(intercept),
            coeffs,
        )
        if best_key is None or key < best_key:
            best_key = key
            best_coeffs = coeffs
            best_objective = objective
    if best_coeffs is None:
        return None
    assert best_objective is not None
    return best_coeffs, best_objective


def _evaluate(
    coeffs: tuple[Fraction, ...], points: Sequence[tuple[Fraction, ...]], direction: str
) -> tuple[Fraction, int] | None:
    """Feasibility check; returns (total slack, tight count) or None."""
    *slopes, intercept = coeffs
    objective = Fraction(0)
    tight = 0
    for p in points:
        y = p[-1]
        rhs = intercept + sum(m * x for m, x in zip(slopes, p))
        slack = rhs - y if direction == UPPER else y - rhs
        if slack < 0:
            return None
        if slack == 0:
            tight += 1
        objective += slack
    return objective, tight


def _fit_1d(points: Sequence[Point], direction: str) -> FitResult:
    if len(points) < 2:
        return FitResult.failed(direction, FitStatus.TOO_FEW_ROWS)
    if len({x for x, _ in points}) == 1:
        return FitResult.failed(direction, FitStatus.DEGENERATE_ZERO_SLOPE)

    candidates: dict[tuple[Fraction, ...], tuple[Fraction, int]] = {}
    for (x1, y1), (x2, y2) in combinations(points, 2):
        if x1 == x2:
            continue
        m = (y2 - y1) / (x2 - x1)
        b = y1 - m * x1
        coeffs = (m, b)
        if coeffs in candidates:
            continue
        verdict = _evaluate(coeffs, points, direction)
        if verdict is not None:
            candidates[coeffs] = verdict

    selected = _select_candidate(candidates)
    if selected is None:
        return FitResult.failed(direction, FitStatus.INFEASIBLE)
    (m, b), objective = selected
    if m == 0:
        return FitResult.failed(direction, FitStatus.DEGENERATE_ZERO_SLOPE)
    return FitResult((m,), b, direction, objective, FitStatus.OK)


def fit_upper(points: Sequence[Point]) -> FitResult:
    """Tightest affine upper bound y <= m*x + b over all points."""
    return _fit_1d(points, UPPER)


def fit_lower(points: Sequence[Point]) -> FitResult:
    """Tightest affine lower bound y >= m*x + b over all points."""
    return _fit_1d(points, LOWER)


def _plane_through(p: Point2, q: Point2, r: Point2) -> tuple[Fraction, ...] | None:
    """Solve for (m1, m2, b) with y = m1*x1 + m2*x2 + b at all three points.

    Returns None when the (x1, x2) projections are collinear (no unique
    plane).  Cramer's rule on the 3x3 system keeps everything rational.
    """
    det = (q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])
    if det == 0:
        return None
    dy_q = q[2] - p[2]
    dy_r = r[2] - p[2]
    m1 = (dy_q * (r[1] - p[1]) - dy_r * (q[1] - p[1])) / det
    m2 = ((q[0] - p[0]) * dy_r - (r[0] - p[0]) * dy_q) / det
    b = p[2] - m1 * p[0] - m2 * p[1]
    return (m1, m2, b)


def fit_upper_2d(points: Sequence[Point2]) -> FitResult:
    """Tightest planar upper bound y <= m1*x1 + m2*x2 + b over all points."""
    if len(points) < 3:
        return FitResult.failed(UPPER, FitStatus.TOO_FEW_ROWS, width=2)

    candidates: dict[tuple[Fraction, ...], tuple[Fraction, int]] = {}
    saw_plane = False
    for p, q, r in combinations(points, 3):
        coeffs = _plane_through(p, q, r)
        if coeffs is None:
            continue
        saw_plane = True
        if coeffs in candidates:
            continue
        verdict = _evaluate(coeffs, points, UPPER)
        if verdict is not None:
            candidates[coeffs] = verdict
    if not saw_plane:
        # Every projection triple collinear: no plane is determined.
        return FitResult.failed(UPPER, FitStatus.DEGENERATE_ZERO_SLOPE, width=2)

    selected = _select_candidate(candidates)
    if selected is None:
        return FitResult.failed(UPPER, FitStatus.INFEASIBLE, width=2)
    (m1, m2, b), objective = selected
    if m1 == 0 or m2 == 0:
        # Reduces to the single-invariant form; not a genuine 2d bound.
        return FitResult.failed(UPPER, FitStatus.DEGENERATE_ZERO_SLOPE, width=2)
    return FitResult((m1, m2), b, UPPER, objective, FitStatus.OK)
