"""Number-theoretic invariants and properties of positive integers.

These populate the integer knowledge table: five exact numeric columns and
twelve boolean properties (primality, digit sums, Harshad membership,
circular primes, and friends).  Definitions are evaluated literally; in
particular the Goldbach property carries no parity restriction, so odd values
such as 5 = 2 + 3 qualify.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

INTEGER_NUMERIC_COLUMNS = (
    "n",
    "sum_of_digits",
    "num_divisors",
    "sod_over_divisors",
    "sod_squared",
)
INTEGER_BOOLEAN_COLUMNS = (
    "prime",
    "even",
    "palindrome",
    "digit_power_sum",
    "goldbach",
    "fibonacci",
    "sod_is_fibonacci",
    "factorial_digit_sum_prime",
    "sum_of_digits_prime",
    "harshad",
    "circular_prime",
    "all_prime_digits",
)

DEFAULT_INTEGER_RANGE = (1, 1000)


class IntegerDomainError(ValueError):
    """Raised for inputs outside the positive integers."""


class _Sieve:
    """Lazily grown Eratosthenes sieve so dataset builds stay fast."""

    def __init__(self) -> None:
        self.limit = 1
        self.flags = bytearray(b"\x00\x00")  # is-prime flags, index = value
        self.primes: list[int] = []

    def ensure(self, limit: int) -> None:
        if limit <= self.limit:
            return
        limit = max(limit, 2 * self.limit, 1000)
        flags = bytearray(b"\x01") * (limit + 1)
        flags[0] = flags[1] = 0
        for p in range(2, isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        self.limit = limit
        self.flags = flags
        self.primes = [p for p in range(2, limit + 1) if flags[p]]

    def is_prime(self, v: int) -> bool:
        if v < 0:
            return False
        self.ensure(v)
        return bool(self.flags[v])

    def primes_upto(self, limit: int) -> list[int]:
        self.ensure(limit)
        return self.primes[: bisect_right(self.primes, limit)]


_sieve = _Sieve()


def is_prime(v: int) -> bool:
    """Primality (exactly two divisors; 1 is not prime)."""
    return _sieve.is_prime(v)


def sum_of_digits(v: int) -> int:
    return sum(int(c) for c in str(v))


def num_divisors(v: int) -> int:
    count = 0
    r = isqrt(v)
    for d in range(1, r + 1):
        if v % d == 0:
            count += 1 if d * d == v else 2
    return count


def is_fibonacci(v: int) -> bool:
    """Membership in the Fibonacci set {1, 2, 3, 5, 8, ...} (1 counted once)."""
    a, b = 1, 2
    while a < v:
        a, b = b, a + b
    return a == v


def is_goldbach(v: int) -> bool:
    """True when v = p + q with p, q prime (p = q allowed, no parity rule)."""
    if v < 4:
        return False
    return any(is_prime(v - p) for p in _sieve.primes_upto(v // 2))


def is_palindrome(v: int) -> bool:
    s = str(v)
    return s == s[::-1]


def is_digit_power_sum(v: int) -> bool:
    """Digit sum raised to the number-of-digits power equals the value."""
    s = str(v)
    return sum_of_digits(v) ** len(s) == v


def is_circular_prime(v: int) -> bool:
    """All decimal rotations are prime.

    Rotations are read back as numeric values, so leading zeros collapse
    (10 -> "01" -> 1, which is not prime).
    """
    s = str(v)
    return all(is_prime(int(s[k:] + s[:k])) for k in range(len(s)))


def has_all_prime_digits(v: int) -> bool:
    return all(c in "2357" for c in str(v))


def factorial_digit_sum(v: int) -> int:
    return sum(factorial(int(c)) for c in str(v))


@dataclass(frozen=True)
class IntegerRecord:
    """One integer's knowledge-table row; numeric cells are exact rationals."""

    value: int
    values: dict[str, Fraction]
    flags: dict[str, bool]


def compute_integer_record(v: int) -> IntegerRecord:
    """Every registered invariant/property of ``v``, per the definitions above."""
    if v < 1:
        raise IntegerDomainError("positive integers only")
    sod = sum_of_digits(v)
    divisors = num_divisors(v)
    values = {
        "n": Fraction(v),
        "sum_of_digits": Fraction(sod),
        "num_divisors": Fraction(divisors),
        "sod_over_divisors": Fraction(sod, divisors),
        "sod_squared": Fraction(sod * sod),
    }
    flags = {
        "prime": is_prime(v),
        "even": v % 2 == 0,
        "palindrome": is_palindrome(v),
        "digit_power_sum": is_digit_power_sum(v),
        "goldbach": is_goldbach(v),
        "fibonacci": is_fibonacci(v),
        "sod_is_fibonacci": is_fibonacci(sod),
        "factorial_digit_sum_prime": is_prime(factorial_digit_sum(v)),
        "sum_of_digits_prime": is_prime(sod),
        "harshad": v % sod == 0,
        "circular_prime": is_circular_prime(v),
        "all_prime_digits": has_all_prime_digits(v),
    }
    return IntegerRecord(value=v, values=values, flags=flags)


def build_integer_dataset(lo: int, hi: int) -> list[IntegerRecord]:
    """Records for every integer in [lo, hi], ascending."""
    if lo < 1:
        raise IntegerDomainError("positive integers only")
    if lo > hi:
        raise IntegerDomainError(f"empty range: {lo}..{hi}")
    _sieve.ensure(max(hi, factorial(9) * len(str(hi))))
    return [compute_integer_record(v) for v in range(lo, hi + 1)]
