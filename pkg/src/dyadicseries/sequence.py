"""The double binomial-sum coefficients A(n) and their summand structure.

A(n) sums a_n(j,k) = C(n,j)^2 C(n,k)^2 C(n+j,n) C(n+k,n) C(j+k,n) over
0 <= j,k <= n.  Summands with j + k < n vanish because C(j+k,n) = 0.
All values are exact integers; 2-adic valuations of summands are obtained
from per-binomial Legendre sums, never by factoring the huge products.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

from .arith import Valuation, binom, vp_binom
from .series import IntSeries


class TermIndex(NamedTuple):
    """Address of one summand a_n(j,k)."""

    n: int
    j: int
    k: int


class Decomposition(NamedTuple):
    """A(n) split into the two corner summands and the rest.

    corner_left = a_n(0,n) and corner_right = a_n(n,0), both equal to
    C(2n,n); primed_sum collects every other summand.
    """

    corner_left: int
    corner_right: int
    primed_sum: int
    total: int


def _check_index(n: int, j: int, k: int) -> None:
    if n < 0 or j < 0 or k < 0:
        raise ValueError(f"index fields must be >= 0, got ({n}, {j}, {k})")


def term(idx: TermIndex | tuple[int, int, int]) -> int:
    """The exact summand C(n,j)^2 C(n,k)^2 C(n+j,n) C(n+k,n) C(j+k,n)."""
    n, j, k = idx
    _check_index(n, j, k)
    return (
        binom(n, j) ** 2
        * binom(n, k) ** 2
        * binom(n + j, n)
        * binom(n + k, n)
        * binom(j + k, n)
    )


@lru_cache(maxsize=None)
def coefficient_A(n: int) -> int:
    """A(n): the exact double sum of term((n, j, k)) over 0 <= j, k <= n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    # weight[j] = C(n,j)^2 * C(n+j,n); row[s] = C(s,n).  Inner k starts at
    # max(0, n - j): the skipped terms are exactly the j + k < n zeros.
    weight = [binom(n, j) ** 2 * binom(n + j, n) for j in range(n + 1)]
    row = [binom(s, n) for s in range(2 * n + 1)]
    total = 0
    for j in range(n + 1):
        wj = weight[j]
        for k in range(max(0, n - j), n + 1):
            total += wj * weight[k] * row[j + k]
    return total


def coefficient_stream(n_max: int) -> Iterator[int]:
    """Yield A(0), ..., A(n_max) in index order."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    for n in range(n_max + 1):
        yield coefficient_A(n)


def decompose_A(n: int) -> Decomposition:
    """Split A(n) into a_n(0,n), a_n(n,0) and the sum over all other (j,k).

    Defined for n >= 1.  The primed sum is accumulated directly (not derived
    from the total), so Decomposition.total == coefficient_A(n) is a real
    cross-check.
    """
    if n < 1:
        raise ValueError(f"decomposition is defined for n >= 1, got {n}")
    corner_left = term((n, 0, n))
    corner_right = term((n, n, 0))
    primed = 0
    for j in range(n + 1):
        for k in range(max(0, n - j), n + 1):
            if (j, k) != (0, n) and (j, k) != (n, 0):
                primed += term((n, j, k))
    return Decomposition(corner_left, corner_right, primed, corner_left + corner_right + primed)


def term_valuation(idx: TermIndex | tuple[int, int, int]) -> Valuation:
    """v_2 of term(idx), summed over per-binomial Legendre valuations.

    Returns Valuation.INFINITE when the summand is 0 (any vanishing binomial
    factor).  The products themselves grow past thousands of bits, so the
    valuation is never obtained by factoring them.
    """
    n, j, k = idx
    _check_index(n, j, k)
    if j > n or k > n or j + k < n:
        return Valuation.INFINITE
    vj = vp_binom(j, n - j, 2)
    vk = vp_binom(k, n - k, 2)
    return (
        vj
        + vj
        + vk
        + vk
        + vp_binom(n, j, 2)
        + vp_binom(n, k, 2)
        + vp_binom(n, j + k - n, 2)
    )


def generating_series(order: int) -> IntSeries:
    """The series sum of A(n) z^n truncated to the given order."""
    return IntSeries(list(coefficient_stream(order)))
