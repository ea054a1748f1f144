"""One checker per identity.  Each returns an :class:`IdentityReport` with the
range verified and, on failure, the first offending index together with both
exact sides.

Checkers recompute both sides from number tables or from the series engine,
never from each other's intermediates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact import (
    GaussianRational,
    I_POWERS,
    InvalidParameter,
    ONE,
    ZERO,
    binomial,
    factorial,
)
from .families import (
    FamilyId,
    FamilyKind,
    comp_hg_euler_recurrence,
    hg_bernoulli,
    hg_euler_recurrence,
)
from .series import (
    TruncatedSeries,
    gen_cos,
    gen_cosh,
    gen_f,
    gen_fk,
    gen_fstar,
    gen_sin,
)


@dataclass(frozen=True)
class FailureWitness:
    indices: tuple
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    range_checked: str
    passed: bool
    first_failure: FailureWitness | None = None

    def __post_init__(self) -> None:
        assert self.passed == (self.first_failure is None)


def _report(identity_id: str, range_checked: str, failure: FailureWitness | None) -> IdentityReport:
    return IdentityReport(identity_id, range_checked, failure is None, failure)


class NonzeroImaginaryPart(ArithmeticError):
    """The Gaussian-rational double sum produced a nonzero imaginary part."""


def check_euler_pair_sum(nmax: int = 20) -> IdentityReport:
    """sum_i C(2n, 2i) E_{2i} = 0 for 1 <= n <= nmax."""
    e = hg_euler_recurrence(0, 2 * nmax)
    for n in range(1, nmax + 1):
        lhs = sum((binomial(2 * n, 2 * i) * e[2 * i] for i in range(n + 1)), ZERO)
        if lhs != 0:
            return _report("euler-pair-sum", f"1 <= n <= {nmax}", FailureWitness((n,), lhs, ZERO))
    return _report("euler-pair-sum", f"1 <= n <= {nmax}", None)


def check_E1_bernoulli(nmax: int = 60) -> IdentityReport:
    """E_{1,n} = -(n-1) B_n for 1 <= n <= nmax."""
    e1 = hg_euler_recurrence(1, nmax)
    b = hg_bernoulli(1, nmax)
    for n in range(1, nmax + 1):
        lhs = e1[n]
        rhs = -(n - 1) * b[n]
        if lhs != rhs:
            return _report("e1-bernoulli", f"1 <= n <= {nmax}", FailureWitness((n,), lhs, rhs))
    return _report("e1-bernoulli", f"1 <= n <= {nmax}", None)


def check_bernoulli_lemma(nmax: int = 30) -> IdentityReport:
    """sum_i (i-1) B_i / ((n-i+2)! i!) is 0 for even n and -B_{n+1}/n! for odd n."""
    b = hg_bernoulli(1, nmax + 1)
    for n in range(1, nmax + 1):
        lhs = sum(
            ((i - 1) * b[i] / (factorial(n - i + 2) * factorial(i)) for i in range(n + 1)),
            ZERO,
        )
        rhs = ZERO if n % 2 == 0 else -b[n + 1] / factorial(n)
        if lhs != rhs:
            return _report("bernoulli-lemma", f"1 <= n <= {nmax}", FailureWitness((n,), lhs, rhs))
    return _report("bernoulli-lemma", f"1 <= n <= {nmax}", None)


def y2(N: int, n: int) -> Fraction:
    """Pair sum of products: sum_i C(2n, 2i) E_{N,2i} E_{N,2n-2i}."""
    e = hg_euler_recurrence(N, 2 * n)
    return sum(
        (binomial(2 * n, 2 * i) * e[2 * i] * e[2 * n - 2 * i] for i in range(n + 1)), ZERO
    )


def check_tangent_closed_form(nmax: int = 12) -> IdentityReport:
    """y2(0, n) = 2^{2n+2} (2^{2n+2} - 1) B_{2n+2} / (2n+2) for 0 <= n <= nmax."""
    b = hg_bernoulli(1, 2 * nmax + 2)
    for n in range(nmax + 1):
        lhs = y2(0, n)
        p = 2 ** (2 * n + 2)
        rhs = Fraction(p * (p - 1)) * b[2 * n + 2] / (2 * n + 2)
        if lhs != rhs:
            return _report("tangent", f"0 <= n <= {nmax}", FailureWitness((n,), lhs, rhs))
    return _report("tangent", f"0 <= n <= {nmax}", None)


def tangent_complex_sum(n: int) -> GaussianRational:
    """The Gaussian-rational double sum whose real part is y2(0, n)."""
    total = GaussianRational.of(0, 0)
    for k in range(1, 2 * n + 3):
        inner = ZERO
        for j in range(k + 1):
            inner += binomial(k, j) * Fraction((-1) ** (j + 1) * (k - 2 * j) ** (2 * n + 2))
        term = GaussianRational.of(inner / (Fraction(2) ** k * k), 0) / I_POWERS[k % 4]
        total = total + term
    return total


def check_tangent_complex_sum(nmax: int = 8) -> IdentityReport:
    for n in range(nmax + 1):
        val = tangent_complex_sum(n)
        if not val.is_real():
            raise NonzeroImaginaryPart(f"imaginary part {val.im} at n={n}")
        expected = y2(0, n)
        if val.re != expected:
            return _report(
                "tangent-complex", f"0 <= n <= {nmax}", FailureWitness((n,), val.re, expected)
            )
    return _report("tangent-complex", f"0 <= n <= {nmax}", None)


def check_tan_maclaurin(nmax: int = 12) -> IdentityReport:
    """Odd tan coefficients are (-1)^n y2(0, n) / (2n+1)!; even ones vanish."""
    order = 2 * nmax + 1
    tan = gen_sin(order) * gen_cos(order).reciprocal()
    for m in range(0, order + 1, 2):
        if tan[m] != 0:
            return _report(
                "tan-maclaurin", f"0 <= n <= {nmax}", FailureWitness((m,), tan[m], ZERO)
            )
    for n in range(nmax + 1):
        lhs = tan[2 * n + 1]
        rhs = Fraction((-1) ** n) * y2(0, n) / factorial(2 * n + 1)
        if lhs != rhs:
            return _report(
                "tan-maclaurin", f"0 <= n <= {nmax}", FailureWitness((n,), lhs, rhs)
            )
    return _report("tan-maclaurin", f"0 <= n <= {nmax}", None)


def check_sumprod_pair(N: int, nmax: int = 30) -> IdentityReport:
    """sum C(n,i) E_{N,i} E_{N,n-i} = sum C(n,k) (2N-k)/(2N) E_{N,k} Ehat_{N-1,n-k}."""
    if N < 1:
        raise InvalidParameter(f"pair sums-of-products need N >= 1, got {N}")
    e = hg_euler_recurrence(N, nmax)
    ehat = comp_hg_euler_recurrence(N - 1, nmax)
    ident = f"sumprod-pair(N={N})"
    for n in range(nmax + 1):
        lhs = sum((binomial(n, i) * e[i] * e[n - i] for i in range(n + 1)), ZERO)
        rhs = sum(
            (
                binomial(n, k) * Fraction(2 * N - k, 2 * N) * e[k] * ehat[n - k]
                for k in range(n + 1)
            ),
            ZERO,
        )
        if lhs != rhs:
            return _report(ident, f"0 <= n <= {nmax}", FailureWitness((n,), lhs, rhs))
    return _report(ident, f"0 <= n <= {nmax}", None)


def check_sumprod_pair_comp(N: int, nmax: int = 30) -> IdentityReport:
    """Complementary analogue of the pair identity."""
    if N < 1:
        raise InvalidParameter(f"pair sums-of-products need N >= 1, got {N}")
    e = hg_euler_recurrence(N, nmax)
    ehat = comp_hg_euler_recurrence(N, nmax)
    ident = f"sumprod-pair-comp(N={N})"
    for n in range(nmax + 1):
        lhs = sum((binomial(n, i) * ehat[i] * ehat[n - i] for i in range(n + 1)), ZERO)
        rhs = sum(
            (
                binomial(n, k) * Fraction(2 * N - k + 1, 2 * N + 1) * ehat[k] * e[n - k]
                for k in range(n + 1)
            ),
            ZERO,
        )
        if lhs != rhs:
            return _report(ident, f"0 <= n <= {nmax}", FailureWitness((n,), lhs, rhs))
    return _report(ident, f"0 <= n <= {nmax}", None)


def trinomial_convolution(values: Sequence[Fraction], n: int) -> Fraction:
    """sum over i1+i2+i3 = n of n!/(i1! i2! i3!) v_{i1} v_{i2} v_{i3}."""
    total = ZERO
    for i1 in range(n + 1):
        for i2 in range(n - i1 + 1):
            i3 = n - i1 - i2
            total += (
                factorial(n) / (factorial(i1) * factorial(i2) * factorial(i3))
                * values[i1] * values[i2] * values[i3]
            )
    return total


def check_sumprod_trinomial(N: int, nmax: int = 30) -> IdentityReport:
    """Trinomial sums of products for the main family."""
    if N < 1:
        raise InvalidParameter(f"trinomial sums-of-products need N >= 1, got {N}")
    e = hg_euler_recurrence(N, nmax)
    ehat = comp_hg_euler_recurrence(N - 1, nmax)
    ident = f"sumprod-trinomial(N={N})"
    for n in range(nmax + 1):
        lhs = trinomial_convolution(e.values, n)
        rhs = ZERO
        for m in range(n + 1):
            for k in range(m + 1):
                rhs += (
                    binomial(n, m) * binomial(m, k)
                    * Fraction((4 * N - m) * (2 * N - k), 8 * N * N)
                    * e[k] * ehat[n - m] * ehat[m - k]
                )
        if lhs != rhs:
            return _report(ident, f"0 <= n <= {nmax}", FailureWitness((n,), lhs, rhs))
    return _report(ident, f"0 <= n <= {nmax}", None)


def check_sumprod_trinomial_comp(N: int, nmax: int = 30) -> IdentityReport:
    """Trinomial sums of products for the complementary family."""
    if N < 1:
        raise InvalidParameter(f"trinomial sums-of-products need N >= 1, got {N}")
    e = hg_euler_recurrence(N, nmax)
    ehat = comp_hg_euler_recurrence(N, nmax)
    ident = f"sumprod-trinomial-comp(N={N})"
    for n in range(nmax + 1):
        lhs = trinomial_convolution(ehat.values, n)
        rhs = ZERO
        for m in range(n + 1):
            for k in range(m + 1):
                rhs += (
                    binomial(n, m) * binomial(m, k)
                    * Fraction((4 * N - m + 2) * (2 * N - k + 1), 2 * (2 * N + 1) ** 2)
                    * ehat[k] * e[n - m] * e[m - k]
                )
        if lhs != rhs:
            return _report(ident, f"0 <= n <= {nmax}", FailureWitness((n,), lhs, rhs))
    return _report(ident, f"0 <= n <= {nmax}", None)


def _first_diff(
    label: str, lhs: TruncatedSeries, rhs: TruncatedSeries, upto: int
) -> FailureWitness | None:
    m = min(lhs.order, rhs.order, upto)
    for k in range(m + 1):
        if lhs[k] != rhs[k]:
            return FailureWitness((label, k), lhs[k], rhs[k])
    return None


def check_series_identities(N: int, M: int = 24) -> IdentityReport:
    """The truncated-series identities tying F, its starred/ladder variants and
    the reciprocal powers together; needs N >= 1."""
    if N < 1:
        raise InvalidParameter(f"series identities need N >= 1, got {N}")
    ident = f"series-identities(N={N})"
    rng = f"order {M}"
    f = gen_f(N, M)
    fstar = gen_fstar(N, M)
    inv_f = f.reciprocal()
    inv_fstar = fstar.reciprocal()

    checks: list[tuple[str, TruncatedSeries, TruncatedSeries, int]] = []

    # 2N F + t F' = 2N F*
    checks.append(
        ("scaled-derivative", f.scale(2 * N) + f.derivative().times_t(), fstar.scale(2 * N), M - 1)
    )
    # ladder: k F_{(2N-k)} + t F_{(2N-k)}' = k F_{(2N-k+1)}
    for k in range(1, 2 * N + 1):
        fk = gen_fk(k, M)
        checks.append(
            (f"ladder(k={k})", fk.scale(k) + fk.derivative().times_t(), gen_fk(k - 1, M).scale(k), M - 1)
        )
    # cosh expansion in derivatives of the ladder series
    cosh = gen_cosh(M)
    for k in range(0, 2 * N + 1):
        fk = gen_fk(k, M)
        acc = TruncatedSeries.zero(M - k if M >= k else 0)
        for i in range(k + 1):
            d = fk
            for _ in range(i):
                d = d.derivative()
            term = d.scale(binomial(k, i) / factorial(i))
            for _ in range(i):
                term = term.times_t()
            acc = acc + term
        checks.append((f"cosh-expansion(k={k})", acc, cosh, M - k))
    # F' = -F^2 (1/F)'
    checks.append(("reciprocal-derivative", f.derivative(), -(f * f * inv_f.derivative()), M - 1))
    # 1/F^2 = (1/F*) (1/F - t/(2N) (1/F)')
    rhs = inv_fstar * (inv_f - inv_f.derivative().times_t().scale(Fraction(1, 2 * N)))
    checks.append(("inv-square", inv_f * inv_f, rhs, M - 1))
    # 1/F^3 = (1/F*) (1/F^2 - t/(4N) (1/F^2)')
    inv_f2 = inv_f * inv_f
    rhs3 = inv_fstar * (inv_f2 - inv_f2.derivative().times_t().scale(Fraction(1, 4 * N)))
    checks.append(("inv-cube", inv_f * inv_f2, rhs3, M - 1))

    for label, lhs, rhs_s, upto in checks:
        witness = _first_diff(label, lhs, rhs_s, upto)
        if witness is not None:
            return _report(ident, rng, witness)
    return _report(ident, rng, None)
