"""Exact scalars and the combinatorial enumerators everything else consumes.

The universal scalar is :class:`fractions.Fraction`, which is already an
arbitrary-precision rational in canonical reduced form (positive denominator,
gcd(|p|, q) = 1, zero as 0/1).  It is re-exported here as ``Rational`` so the
rest of the package has a single name for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class InvalidParameter(ValueError):
    """A parameter is outside the range an operation is defined for."""


@lru_cache(maxsize=None)
def factorial(n: int) -> Fraction:
    """n! as an exact integer-valued Fraction."""
    if n < 0:
        raise InvalidParameter(f"factorial of negative {n}")
    if n == 0:
        return ONE
    return factorial(n - 1) * n


def binomial(n: int, k: int) -> Fraction:
    """C(n, k); zero when k is outside 0..n."""
    if n < 0:
        raise InvalidParameter(f"binomial with negative n={n}")
    if k < 0 or k > n:
        return ZERO
    return factorial(n) / (factorial(k) * factorial(n - k))


def multinomial(ts: Sequence[int]) -> Fraction:
    """(sum ts)! / prod(t!)."""
    total = sum(ts)
    out = factorial(total)
    for t in ts:
        out /= factorial(t)
    return out


def rising_factorial(x: Fraction, n: int) -> Fraction:
    """x(x+1)...(x+n-1), with the empty product equal to 1."""
    if n < 0:
        raise InvalidParameter(f"rising factorial with negative n={n}")
    out = ONE
    for i in range(n):
        out *= x + i
    return out


def compositions(total: int, min_part: int, length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of integers >= min_part summing to ``total``.

    With ``length`` given, yields tuples of exactly that length in
    lexicographic order.  With ``length`` omitted (min_part=1 only, else the
    set is infinite), yields all lengths 1..total, shortest first.
    """
    if min_part not in (0, 1):
        raise InvalidParameter(f"min_part must be 0 or 1, got {min_part}")
    if total < 0:
        return
    if length is None:
        if min_part == 0:
            raise InvalidParameter("length is required when min_part=0")
        for r in range(1, total + 1):
            yield from compositions(total, 1, r)
        return
    if length <= 0:
        raise InvalidParameter(f"length must be positive, got {length}")
    yield from _compositions_fixed(total, min_part, length)


def _compositions_fixed(total: int, min_part: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 1:
        if total >= min_part:
            yield (total,)
        return
    for first in range(min_part, total - min_part * (length - 1) + 1):
        for rest in _compositions_fixed(total - first, min_part, length - 1):
            yield (first,) + rest


def partition_multiplicities(m: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors (t_1..t_m) with t_1 + 2 t_2 + ... + m t_m = m.

    Yields exactly p(m) vectors, t_1 descending first.
    """
    if m < 1:
        raise InvalidParameter(f"m must be positive, got {m}")

    def rec(k: int, rem: int) -> Iterator[tuple[int, ...]]:
        if k == m + 1:
            if rem == 0:
                yield ()
            return
        for t in range(rem // k, -1, -1):
            for rest in rec(k + 1, rem - k * t):
                yield (t,) + rest

    yield from rec(1, m)


@dataclass(frozen=True)
class GaussianRational:
    """re + im*sqrt(-1) with exact rational components."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re: Fraction | int, im: Fraction | int = 0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by Gaussian zero")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def is_real(self) -> bool:
        return self.im == 0


GAUSSIAN_I = GaussianRational.of(0, 1)

# i^k for k mod 4; the double sums in the tangent-number identity only ever
# need these powers.
I_POWERS = (
    GaussianRational.of(1, 0),
    GaussianRational.of(0, 1),
    GaussianRational.of(-1, 0),
    GaussianRational.of(0, -1),
)
