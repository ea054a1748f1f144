"""Truncated formal power series over exact rationals.

A :class:`TruncatedSeries` knows its coefficients c_0..c_M exactly and nothing
beyond t^M.  Arithmetic truncates to the smallest order among the operands;
differentiation loses one order.  All values are immutable.

The module also provides constructors for every generating function the number
families and identity checkers need: the even-coefficient family with
factorial-ratio coefficients (and its starred/hatted/shifted variants),
cosh/sinh-type series, sin/cos, and the denominators of the hypergeometric
Bernoulli and Cauchy numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import InvalidParameter, ONE, ZERO, binomial, factorial


class ZeroConstantTerm(ValueError):
    """Reciprocal requested for a series with no constant term."""


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidParameter("a truncated series needs at least c_0")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def from_coeffs(coeffs: Iterable[Fraction | int], order: int | None = None) -> "TruncatedSeries":
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise InvalidParameter(f"order must be nonnegative, got {order}")
            cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        return TruncatedSeries(tuple(cs))

    @staticmethod
    def zero(order: int) -> "TruncatedSeries":
        return TruncatedSeries((ZERO,) * (order + 1))

    @staticmethod
    def one(order: int) -> "TruncatedSeries":
        return TruncatedSeries((ONE,) + (ZERO,) * order)

    @staticmethod
    def monomial(k: int, order: int, coeff: Fraction | int = 1) -> "TruncatedSeries":
        cs = [ZERO] * (order + 1)
        if k <= order:
            cs[k] = Fraction(coeff)
        return TruncatedSeries(tuple(cs))

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(m + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(m + 1)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def scale(self, r: Fraction | int) -> "TruncatedSeries":
        r = Fraction(r)
        return TruncatedSeries(tuple(r * c for c in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        out = []
        for n in range(m + 1):
            out.append(sum((self.coeffs[i] * other.coeffs[n - i] for i in range(n + 1)), ZERO))
        return TruncatedSeries(tuple(out))

    def pow(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise InvalidParameter(f"pow with negative exponent {k}")
        out = TruncatedSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def reciprocal(self) -> "TruncatedSeries":
        """Series r with self * r = 1 up to the truncation order.

        Forward recurrence r_0 = 1/c_0, r_n = -(1/c_0) sum_{k=1}^n c_k r_{n-k}.
        """
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroConstantTerm("series has zero constant term")
        inv0 = ONE / c0
        r = [inv0]
        for n in range(1, self.order + 1):
            acc = sum((self.coeffs[k] * r[n - k] for k in range(1, n + 1)), ZERO)
            r.append(-inv0 * acc)
        return TruncatedSeries(tuple(r))

    def derivative(self) -> "TruncatedSeries":
        """d/dt; order drops by one (a constant differentiates to the zero series)."""
        if self.order == 0:
            return TruncatedSeries.zero(0)
        return TruncatedSeries(tuple((k + 1) * self.coeffs[k + 1] for k in range(self.order)))

    def hasse_teichmuller(self, n: int) -> "TruncatedSeries":
        """Divided-power derivative: c_m t^m maps to c_m C(m,n) t^{m-n}."""
        if n < 0:
            raise InvalidParameter(f"derivative order must be nonnegative, got {n}")
        if n == 0:
            return self
        if n > self.order:
            return TruncatedSeries.zero(0)
        return TruncatedSeries(
            tuple(self.coeffs[m] * binomial(m, n) for m in range(n, self.order + 1))
        )

    def times_t(self) -> "TruncatedSeries":
        """Multiply by t, keeping the same truncation order."""
        return TruncatedSeries((ZERO,) + self.coeffs[:-1] if self.order > 0 else (ZERO,))

    def egf_values(self) -> tuple[Fraction, ...]:
        """The numbers n! * c_n: the sequence this series is an EGF of."""
        return tuple(factorial(n) * c for n, c in enumerate(self.coeffs))

    def agrees_with(self, other: "TruncatedSeries", upto: int | None = None) -> bool:
        m = min(self.order, other.order)
        if upto is not None:
            m = min(m, upto)
        return self.coeffs[: m + 1] == other.coeffs[: m + 1]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def _even_ratio_series(top: int, step_base: int, order: int) -> TruncatedSeries:
    # coefficients top! / (step_base + 2n)! at t^{2n}
    cs = [ZERO] * (order + 1)
    top_f = factorial(top)
    for n in range(order // 2 + 1):
        cs[2 * n] = top_f / factorial(step_base + 2 * n)
    return TruncatedSeries(tuple(cs))


def gen_f(N: int, order: int) -> TruncatedSeries:
    """Denominator of the hypergeometric Euler EGF: sum (2N)!/(2N+2n)! t^{2n}."""
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _even_ratio_series(2 * N, 2 * N, order)


def gen_fstar(N: int, order: int) -> TruncatedSeries:
    """Starred variant: sum (2N-1)!/(2N+2n-1)! t^{2n}; needs N >= 1."""
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")
    return _even_ratio_series(2 * N - 1, 2 * N - 1, order)


def gen_fhat(N: int, order: int) -> TruncatedSeries:
    """Denominator of the complementary EGF: sum (2N+1)!/(2N+2n+1)! t^{2n}."""
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _even_ratio_series(2 * N + 1, 2 * N + 1, order)


def gen_fk(k: int, order: int) -> TruncatedSeries:
    """The ladder family: sum k!/(k+2n)! t^{2n}.

    k = 0 gives cosh t; k = 2N recovers gen_f(N, .).
    """
    if k < 0:
        raise InvalidParameter(f"k must be nonnegative, got {k}")
    return _even_ratio_series(k, k, order)


def gen_cosh(order: int) -> TruncatedSeries:
    return gen_fk(0, order)


def gen_sinh_over_t(order: int) -> TruncatedSeries:
    return gen_fk(1, order)


def gen_sin(order: int) -> TruncatedSeries:
    cs = [ZERO] * (order + 1)
    for n in range((order + 1) // 2):
        k = 2 * n + 1
        if k <= order:
            cs[k] = Fraction((-1) ** n) / factorial(k)
    return TruncatedSeries(tuple(cs))


def gen_cos(order: int) -> TruncatedSeries:
    cs = [ZERO] * (order + 1)
    for n in range(order // 2 + 1):
        cs[2 * n] = Fraction((-1) ** n) / factorial(2 * n)
    return TruncatedSeries(tuple(cs))


def gen_hgbernoulli_denom(N: int, order: int) -> TruncatedSeries:
    """sum N!/(N+n)! t^n; the reciprocal's EGF gives hypergeometric Bernoulli numbers."""
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")
    n_f = factorial(N)
    return TruncatedSeries(tuple(n_f / factorial(N + n) for n in range(order + 1)))


def gen_hgcauchy_denom(N: int, order: int) -> TruncatedSeries:
    """sum (-1)^n N/(N+n) t^n; the reciprocal's EGF gives hypergeometric Cauchy numbers."""
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")
    return TruncatedSeries(
        tuple(Fraction((-1) ** n * N, N + n) for n in range(order + 1))
    )
