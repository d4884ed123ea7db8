"""The published catalog of fifty number-theory conjectures, plus an evaluator.

Each entry is an affine inequality between integer invariants under a
conjunction of boolean properties, together with the minimum equality count
claimed for it.  The generating range behind the published list is unknown,
so nothing here asserts exact reproduction: ``evaluate_conjectures`` simply
reports, for a given dataset, each conjecture's support, its touch count,
and any violating integers.

One entry is normalized for evaluation: the palindrome bound relating the
squared value to the squared digit sum is stored in the equivalent linear
form (value <= 11/2 * digit sum), which has the same truth and equality sets
over positive integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fitting import LOWER, UPPER
from .integers import IntegerRecord
from .rationals import format_rational

F = Fraction


@dataclass(frozen=True)
class IntegerConjecturePattern:
    """hypothesis => target (<= or >=) sum(slope * invariant) + intercept."""

    hypothesis: tuple[str, ...]  # boolean property names, all required (may be empty)
    target: str
    direction: str
    terms: tuple[tuple[str, Fraction], ...]
    intercept: Fraction
    claimed_touch: int


def _p(
    hypothesis: tuple[str, ...],
    target: str,
    direction: str,
    slope: Fraction,
    invariant: str,
    intercept: Fraction,
    claimed: int,
) -> IntegerConjecturePattern:
    return IntegerConjecturePattern(
        hypothesis, target, direction, ((invariant, slope),), intercept, claimed
    )


APPENDIX_CONJECTURES: tuple[IntegerConjecturePattern, ...] = (
    _p(("prime",), "sod_over_divisors", UPPER, F(1, 2), "sod_squared", F(0), 25),
    _p((), "sum_of_digits", LOWER, F(1, 10), "sod_squared", F(9, 10), 13),
    _p((), "sum_of_digits", UPPER, F(1, 10), "n", F(81, 10), 10),
    _p(("even",), "sum_of_digits", UPPER, F(1, 10), "n", F(36, 5), 10),
    _p(("digit_power_sum",), "sum_of_digits", UPPER, F(1), "n", F(0), 9),
    _p(("palindrome",), "n", UPPER, F(11, 2), "sum_of_digits", F(0), 9),
    _p(
        ("goldbach", "sod_is_fibonacci"),
        "sod_over_divisors", UPPER, F(1, 4), "sod_squared", F(0), 7,
    ),
    _p(
        ("factorial_digit_sum_prime",),
        "sum_of_digits", UPPER, F(1, 5), "sod_squared", F(6, 5), 6,
    ),
    _p(
        ("sum_of_digits_prime", "harshad"),
        "sum_of_digits", UPPER, F(1, 8), "sod_squared", F(15, 8), 6,
    ),
    _p(("prime",), "sum_of_digits", UPPER, F(1, 9), "sod_over_divisors", F(40, 9), 6),
    _p(
        ("prime", "sum_of_digits_prime"),
        "sod_over_divisors", LOWER, F(9), "sum_of_digits", F(-77, 2), 6,
    ),
    _p(
        ("prime", "sod_is_fibonacci"),
        "sod_over_divisors", LOWER, F(13, 2), "sum_of_digits", F(-20), 6,
    ),
    _p(("all_prime_digits",), "sum_of_digits", UPPER, F(1, 10), "n", F(63, 10), 5),
    _p(("even", "all_prime_digits"), "sum_of_digits", UPPER, F(1, 10), "n", F(9, 5), 5),
    _p(("prime",), "sum_of_digits", LOWER, F(1, 10), "n", F(9, 10), 5),
    _p(
        ("sod_is_fibonacci", "harshad"),
        "sum_of_digits", LOWER, F(1, 9), "sod_squared", F(8, 9), 5,
    ),
    _p(
        ("sod_is_fibonacci", "factorial_digit_sum_prime"),
        "sum_of_digits", LOWER, F(1, 4), "sod_squared", F(3, 4), 5,
    ),
    _p(
        ("prime", "factorial_digit_sum_prime"),
        "sum_of_digits", UPPER, F(1, 6), "sod_squared", F(4, 3), 4,
    ),
    _p(
        ("prime", "factorial_digit_sum_prime"),
        "sum_of_digits", UPPER, F(1, 3), "sod_over_divisors", F(4, 3), 4,
    ),
    _p(("sum_of_digits_prime",), "sum_of_digits", LOWER, F(1, 10), "n", F(0), 4),
    _p(
        ("factorial_digit_sum_prime",),
        "sum_of_digits", LOWER, F(1, 5), "sod_squared", F(4, 5), 4,
    ),
    _p(
        ("sum_of_digits_prime", "all_prime_digits"),
        "sum_of_digits", LOWER, F(1, 9), "sod_squared", F(14, 9), 4,
    ),
    _p(
        ("sod_is_fibonacci", "circular_prime"),
        "sum_of_digits", LOWER, F(1, 10), "sod_squared", F(8, 5), 4,
    ),
    _p(
        ("sum_of_digits_prime", "all_prime_digits", "sod_is_fibonacci"),
        "sum_of_digits", LOWER, F(1, 7), "sod_squared", F(10, 7), 4,
    ),
    _p(
        ("circular_prime",),
        "sum_of_digits", LOWER, F(1, 9), "sod_over_divisors", F(16, 9), 4,
    ),
    _p(
        ("sod_is_fibonacci", "circular_prime"),
        "sum_of_digits", LOWER, F(1, 5), "sod_over_divisors", F(8, 5), 4,
    ),
    _p(
        ("prime", "sum_of_digits_prime", "sod_is_fibonacci"),
        "sod_over_divisors", LOWER, F(4), "sum_of_digits", F(-15, 2), 4,
    ),
    _p(("all_prime_digits",), "sum_of_digits", UPPER, F(2), "num_divisors", F(6), 3),
    _p(
        ("factorial_digit_sum_prime",),
        "sum_of_digits", UPPER, F(-1, 6), "num_divisors", F(13, 3), 3,
    ),
    _p(
        ("even", "sum_of_digits_prime"),
        "sum_of_digits", UPPER, F(2), "num_divisors", F(5), 3,
    ),
    _p(("harshad",), "sum_of_digits", UPPER, F(4, 7), "sod_over_divisors", F(36, 7), 3),
    _p(
        ("even", "harshad"),
        "sum_of_digits", UPPER, F(4, 5), "sod_over_divisors", F(18, 5), 3,
    ),
    _p(
        ("prime", "sum_of_digits_prime", "all_prime_digits"),
        "sum_of_digits", UPPER, F(1, 4), "sod_over_divisors", F(15, 8), 3,
    ),
    _p(("digit_power_sum",), "sum_of_digits", LOWER, F(2), "num_divisors", F(-2), 3),
    _p(("even", "palindrome"), "sum_of_digits", LOWER, F(2), "num_divisors", F(-4), 3),
    _p(
        ("palindrome", "sod_is_fibonacci"),
        "sum_of_digits", LOWER, F(3, 2), "num_divisors", F(-1), 3,
    ),
    _p(
        ("all_prime_digits",),
        "sum_of_digits", LOWER, F(1, 6), "sod_over_divisors", F(5, 3), 3,
    ),
    _p(
        ("prime", "palindrome"),
        "sum_of_digits", LOWER, F(2, 9), "sod_over_divisors", F(14, 9), 3,
    ),
    _p(
        ("sod_is_fibonacci", "factorial_digit_sum_prime"),
        "sum_of_digits", LOWER, F(4, 7), "sod_over_divisors", F(6, 7), 3,
    ),
    _p(
        ("prime", "palindrome", "sod_is_fibonacci"),
        "sum_of_digits", LOWER, F(2, 7), "sod_over_divisors", F(10, 7), 3,
    ),
    _p(("digit_power_sum",), "num_divisors", UPPER, F(1, 2), "n", F(1), 3),
    _p(("palindrome",), "num_divisors", UPPER, F(1, 2), "sum_of_digits", F(2), 3),
    _p(
        ("palindrome", "sod_is_fibonacci"),
        "num_divisors", UPPER, F(2, 3), "sum_of_digits", F(2, 3), 3,
    ),
    _p(
        ("sum_of_digits_prime", "factorial_digit_sum_prime"),
        "num_divisors", LOWER, F(2), "sum_of_digits", F(-2), 3,
    ),
    _p(
        ("sum_of_digits_prime", "factorial_digit_sum_prime"),
        "num_divisors", LOWER, F(2, 5), "sod_squared", F(2, 5), 3,
    ),
    _p(("prime",), "sod_over_divisors", UPPER, F(19, 2), "sum_of_digits", F(-17), 3),
    _p(
        ("all_prime_digits",),
        "sod_over_divisors", UPPER, F(6), "sum_of_digits", F(-10), 3,
    ),
    _p(
        ("prime", "palindrome"),
        "sod_over_divisors", UPPER, F(9, 2), "sum_of_digits", F(-7), 3,
    ),
    _p(
        ("prime", "sod_is_fibonacci"),
        "sod_over_divisors", UPPER, F(15, 2), "sum_of_digits", F(-13), 3,
    ),
    _p(
        ("even", "sod_is_fibonacci"),
        "sod_over_divisors", UPPER, F(7, 2), "sum_of_digits", F(-13, 4), 3,
    ),
)


@dataclass(frozen=True)
class PatternReport:
    """Evaluation of one catalog entry over a concrete dataset."""

    index: int
    pattern: IntegerConjecturePattern
    support: int
    touch: int
    violations: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return not self.violations

    @property
    def meets_claim(self) -> bool:
        return self.touch >= self.pattern.claimed_touch


def evaluate_pattern(
    pattern: IntegerConjecturePattern, records: list[IntegerRecord]
) -> tuple[int, int, tuple[int, ...]]:
    """(support, touch, violating values) of a pattern over the records."""
    support = 0
    touch = 0
    violations = []
    for record in records:
        if not all(record.flags[name] for name in pattern.hypothesis):
            continue
        support += 1
        lhs = record.values[pattern.target]
        rhs = pattern.intercept
        for name, slope in pattern.terms:
            rhs += slope * record.values[name]
        if lhs == rhs:
            touch += 1
        elif (lhs > rhs) if pattern.direction == UPPER else (lhs < rhs):
            violations.append(record.value)
    return support, touch, tuple(violations)


def evaluate_conjectures(
    records: list[IntegerRecord],
    patterns: tuple[IntegerConjecturePattern, ...] = APPENDIX_CONJECTURES,
) -> list[PatternReport]:
    return [
        PatternReport(index, pattern, *evaluate_pattern(pattern, records))
        for index, pattern in enumerate(patterns, start=1)
    ]


def render_report(reports: list[PatternReport]) -> str:
    """A one-line-per-conjecture summary of touches and violations."""
    lines = []
    for r in reports:
        hypothesis = " and ".join(r.pattern.hypothesis) or "any"
        terms = " + ".join(
            f"{format_rational(slope)} {name}" for name, slope in r.pattern.terms
        )
        symbol = "<=" if r.pattern.direction == UPPER else ">="
        status = "holds" if r.holds else f"VIOLATED by {list(r.violations[:5])}"
        lines.append(
            f"[{r.index:2d}] if {hypothesis}: {r.pattern.target} {symbol} {terms}"
            f" + {format_rational(r.pattern.intercept)} | support={r.support}"
            f" touch={r.touch} (claimed >= {r.pattern.claimed_touch}) | {status}"
        )
    return "\n".join(lines)
