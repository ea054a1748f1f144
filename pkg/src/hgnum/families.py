"""Number tables for the four families, by recurrence and by series reciprocal.

Tables store the numbers themselves (with the n! factored in), not EGF
coefficients, and keep explicit zeros at odd indices for the two Euler-type
families so that binomial-convolution identities can index over every n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import InvalidParameter, ONE, ZERO, factorial
from .series import (
    TruncatedSeries,
    gen_f,
    gen_fhat,
    gen_hgbernoulli_denom,
    gen_hgcauchy_denom,
)


class FamilyKind(enum.Enum):
    HG_EULER = "hg-euler"
    COMP_HG_EULER = "comp-hg-euler"
    HG_BERNOULLI = "hg-bernoulli"
    HG_CAUCHY = "hg-cauchy"


@dataclass(frozen=True)
class FamilyId:
    kind: FamilyKind
    N: int

    def __post_init__(self) -> None:
        if self.kind in (FamilyKind.HG_EULER, FamilyKind.COMP_HG_EULER):
            if self.N < 0:
                raise InvalidParameter(f"{self.kind.value} needs N >= 0, got {self.N}")
        else:
            if self.N < 1:
                raise InvalidParameter(f"{self.kind.value} needs N >= 1, got {self.N}")


@dataclass(frozen=True)
class NumberTable:
    family: FamilyId
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    @property
    def nmax(self) -> int:
        return len(self.values) - 1


def hg_euler_recurrence(N: int, nmax: int) -> NumberTable:
    """Convolution recurrence for the main family; odd entries are zero."""
    fam = FamilyId(FamilyKind.HG_EULER, N)
    values = _even_convolution_recurrence(2 * N, nmax)
    return NumberTable(fam, values)


def comp_hg_euler_recurrence(N: int, nmax: int) -> NumberTable:
    """Convolution recurrence for the complementary family; odd entries are zero."""
    fam = FamilyId(FamilyKind.COMP_HG_EULER, N)
    values = _even_convolution_recurrence(2 * N + 1, nmax)
    return NumberTable(fam, values)


def _even_convolution_recurrence(w: int, nmax: int) -> tuple[Fraction, ...]:
    # v_0 = 1; v_n = -n! w! sum_{i<n/2} v_{2i} / ((w+n-2i)! (2i)!) for even n.
    w_f = factorial(w)
    values: list[Fraction] = [ONE]
    for n in range(1, nmax + 1):
        if n % 2 == 1:
            values.append(ZERO)
            continue
        acc = sum(
            (values[2 * i] / (factorial(w + n - 2 * i) * factorial(2 * i)) for i in range(n // 2)),
            ZERO,
        )
        values.append(-factorial(n) * w_f * acc)
    return tuple(values)


def hg_bernoulli(N: int, nmax: int) -> NumberTable:
    fam = FamilyId(FamilyKind.HG_BERNOULLI, N)
    return NumberTable(fam, gen_hgbernoulli_denom(N, nmax).reciprocal().egf_values())


def hg_cauchy(N: int, nmax: int) -> NumberTable:
    fam = FamilyId(FamilyKind.HG_CAUCHY, N)
    return NumberTable(fam, gen_hgcauchy_denom(N, nmax).reciprocal().egf_values())


def denominator_series(family: FamilyId, order: int) -> TruncatedSeries:
    """The series whose reciprocal's EGF defines the family."""
    if family.kind is FamilyKind.HG_EULER:
        return gen_f(family.N, order)
    if family.kind is FamilyKind.COMP_HG_EULER:
        return gen_fhat(family.N, order)
    if family.kind is FamilyKind.HG_BERNOULLI:
        return gen_hgbernoulli_denom(family.N, order)
    return gen_hgcauchy_denom(family.N, order)


def via_series(family: FamilyId, nmax: int) -> NumberTable:
    """Definition route: EGF extraction of the reciprocal denominator series."""
    return NumberTable(family, denominator_series(family, nmax).reciprocal().egf_values())


def table(family: FamilyId, nmax: int) -> NumberTable:
    """Recurrence route where one exists, series route otherwise."""
    if family.kind is FamilyKind.HG_EULER:
        return hg_euler_recurrence(family.N, nmax)
    if family.kind is FamilyKind.COMP_HG_EULER:
        return comp_hg_euler_recurrence(family.N, nmax)
    if family.kind is FamilyKind.HG_BERNOULLI:
        return hg_bernoulli(family.N, nmax)
    return hg_cauchy(family.N, nmax)


def closed_small(kind: FamilyKind, N: int, k: int) -> Fraction:
    """The printed closed-form polynomials in N for indices 2, 4, 6, 8."""
    if k not in (2, 4, 6, 8):
        raise InvalidParameter(f"closed forms exist only for k in 2,4,6,8, got {k}")
    n = Fraction(N)
    if kind is FamilyKind.HG_EULER:
        if N < 0:
            raise InvalidParameter(f"N must be nonnegative, got {N}")
        if k == 2:
            return -2 / ((2 * n + 1) * (2 * n + 2))
        if k == 4:
            return (
                2 * factorial(4) * (4 * n + 5)
                / ((2 * n + 1) ** 2 * (2 * n + 2) ** 2 * (2 * n + 3) * (2 * n + 4))
            )
        if k == 6:
            return (
                4 * factorial(6) * (8 * n**3 - 2 * n**2 - 65 * n - 61)
                / (
                    (2 * n + 1) ** 3 * (2 * n + 2) ** 3
                    * (2 * n + 3) * (2 * n + 4) * (2 * n + 5) * (2 * n + 6)
                )
            )
        return (
            16 * factorial(8)
            * (16 * n**6 - 44 * n**5 - 516 * n**4 - 667 * n**3 + 1283 * n**2 + 3126 * n + 1662)
            / (
                (2 * n + 1) ** 4 * (2 * n + 2) ** 4 * (2 * n + 3) ** 2 * (2 * n + 4) ** 2
                * (2 * n + 6) * (2 * n + 7) * (2 * n + 8)
            )
        )
    if kind is FamilyKind.COMP_HG_EULER:
        if N < 0:
            raise InvalidParameter(f"N must be nonnegative, got {N}")
        if k == 2:
            return -2 / ((2 * n + 2) * (2 * n + 3))
        if k == 4:
            return (
                2 * factorial(4) * (4 * n + 7)
                / ((2 * n + 2) ** 2 * (2 * n + 3) ** 2 * (2 * n + 4) * (2 * n + 5))
            )
        if k == 6:
            return (
                4 * factorial(6) * (8 * n**3 + 10 * n**2 - 61 * n - 93)
                / (
                    (2 * n + 2) ** 3 * (2 * n + 3) ** 3
                    * (2 * n + 4) * (2 * n + 5) * (2 * n + 6) * (2 * n + 7)
                )
            )
        return (
            8 * factorial(8)
            * (32 * n**6 + 8 * n**5 - 1132 * n**4 - 3538 * n**3 - 1063 * n**2 + 7280 * n + 6858)
            / (
                (2 * n + 2) ** 4 * (2 * n + 3) ** 4 * (2 * n + 4) ** 2 * (2 * n + 5) ** 2
                * (2 * n + 7) * (2 * n + 8) * (2 * n + 9)
            )
        )
    raise InvalidParameter(f"no small closed forms for {kind.value}")
