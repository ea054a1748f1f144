"""Non-recurrence routes to each number: composition sums, binomial-weighted
sums, Hessenberg determinants, and Trudi expansions.

Every route takes the number's actual (even) index n and halves internally.
The composition-sum routes enumerate 2^{n/2 - 1} tuples and are capped at
n <= 30 by default; pass a larger ``cap`` to go beyond.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact import InvalidParameter, ONE, ZERO, binomial, compositions, factorial
from .linalg import hessenberg_det, toeplitz_inverse, trudi_expand
from .families import FamilyId, FamilyKind, table

DEFAULT_COMPOSITION_CAP = 30


def _half_index(n: int, cap: int | None = None) -> int:
    if n < 2 or n % 2 != 0:
        raise InvalidParameter(f"index must be even and >= 2, got {n}")
    if cap is not None and n > cap:
        raise InvalidParameter(f"index {n} exceeds the composition-route cap {cap}")
    return n // 2


def _euler_weights(top: int, half: int) -> list[Fraction]:
    # weight j -> top!/(top+2j)! for j = 0..half
    top_f = factorial(top)
    return [top_f / factorial(top + 2 * j) for j in range(half + 1)]


def _explicit_sum(top: int, n: int, cap: int) -> Fraction:
    half = _half_index(n, cap)
    w = _euler_weights(top, half)
    total = ZERO
    for r in range(1, half + 1):
        sign = Fraction((-1) ** r)
        for parts in compositions(half, 1, r):
            term = ONE
            for p in parts:
                term *= w[p]
            total += sign * term
    return factorial(n) * total


def _weak_composition_sum(weights: Sequence[Fraction], half: int, k: int) -> Fraction:
    """sum over i_1..i_k >= 0 with i_1+...+i_k = half of prod weights[i_j].

    Computed as the coefficient of x^half in (sum_j weights[j] x^j)^k; the
    tuple-by-tuple enumeration gives the same value (unit-tested) but is
    infeasible for large k.
    """
    poly = list(weights[: half + 1])
    acc = [ONE] + [ZERO] * half
    for _ in range(k):
        acc = [
            sum((acc[i] * poly[m - i] for i in range(m + 1)), ZERO)
            for m in range(half + 1)
        ]
    return acc[half]


def _binomial_sum(top: int, n: int) -> Fraction:
    half = _half_index(n)
    w = _euler_weights(top, half)
    total = ZERO
    for k in range(1, n + 1):
        total += Fraction((-1) ** k) * binomial(n + 1, k + 1) * _weak_composition_sum(w, half, k)
    return factorial(n) * total


def _det_value(top: int, n: int) -> Fraction:
    m = _half_index(n)
    entries = _euler_weights(top, m)[1:]
    return Fraction((-1) ** m) * factorial(n) * hessenberg_det(entries)


def _trudi_value(top: int, n: int) -> Fraction:
    m = _half_index(n)
    entries = _euler_weights(top, m)[1:]
    # (-1)^m from the determinant prefactor folds into the Brioschi expansion
    # as the sign (-1)^{t_1+...+t_m}.
    return Fraction((-1) ** m) * factorial(n) * trudi_expand(entries, 1)


def hg_euler_explicit(N: int, n: int, cap: int = DEFAULT_COMPOSITION_CAP) -> Fraction:
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _explicit_sum(2 * N, n, cap)


def hg_euler_binomial(N: int, n: int) -> Fraction:
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _binomial_sum(2 * N, n)


def hg_euler_det(N: int, n: int) -> Fraction:
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _det_value(2 * N, n)


def hg_euler_trudi(N: int, n: int) -> Fraction:
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _trudi_value(2 * N, n)


def comp_hg_euler_explicit(N: int, n: int, cap: int = DEFAULT_COMPOSITION_CAP) -> Fraction:
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _explicit_sum(2 * N + 1, n, cap)


def comp_hg_euler_binomial(N: int, n: int) -> Fraction:
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _binomial_sum(2 * N + 1, n)


def comp_hg_euler_det(N: int, n: int) -> Fraction:
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _det_value(2 * N + 1, n)


def comp_hg_euler_trudi(N: int, n: int) -> Fraction:
    if N < 0:
        raise InvalidParameter(f"N must be nonnegative, got {N}")
    return _trudi_value(2 * N + 1, n)


def hg_bernoulli_det(N: int, n: int) -> Fraction:
    """(-1)^n n! times the determinant with entries N!/(N+k)!."""
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    n_f = factorial(N)
    entries = [n_f / factorial(N + k) for k in range(1, n + 1)]
    return Fraction((-1) ** n) * factorial(n) * hessenberg_det(entries)


def bernoulli_det(n: int) -> Fraction:
    return hg_bernoulli_det(1, n)


def hg_cauchy_det(N: int, n: int) -> Fraction:
    """n! times the determinant with entries N/(N+k)."""
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    entries = [Fraction(N, N + k) for k in range(1, n + 1)]
    return factorial(n) * hessenberg_det(entries)


def cauchy_det(n: int) -> Fraction:
    return hg_cauchy_det(1, n)


def inverse_pair_check(kind: FamilyKind, N: int, n: int) -> bool:
    """The matrix-inverse pairing: applying the inversion lemma to the column
    of signed numbers (-1)^k v_{2k}/(2k)! must reproduce the factorial-ratio
    column of the defining determinant, entrywise up to index n."""
    if kind not in (FamilyKind.HG_EULER, FamilyKind.COMP_HG_EULER):
        raise InvalidParameter(f"no inverse pairing for {kind.value}")
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    tab = table(FamilyId(kind, N), 2 * n)
    signed = [
        Fraction((-1) ** k) * tab[2 * k] / factorial(2 * k) for k in range(1, n + 1)
    ]
    top = 2 * N if kind is FamilyKind.HG_EULER else 2 * N + 1
    expected = _euler_weights(top, n)[1:]
    return list(toeplitz_inverse(signed)) == expected
