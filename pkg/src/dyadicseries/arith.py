"""Exact binomial coefficients and p-adic valuation primitives.

Everything here is plain arbitrary-precision integer arithmetic.  Valuations
of binomial coefficients are computed from Legendre sums and base-p carry
counts rather than by factoring the (potentially huge) binomial values.
"""

from __future__ import annotations

from functools import lru_cache, total_ordering
from math import isqrt


@total_ordering
class Valuation:
    """A p-adic valuation: a non-negative integer, or infinite for v_p(0).

    The infinite valuation compares strictly greater than every finite one.
    Comparison and addition also accept plain ints, so ``v >= 2`` and
    ``sum(vals)`` read naturally.
    """

    __slots__ = ("value",)

    INFINITE: "Valuation"

    def __init__(self, value: int | None):
        if value is not None:
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"valuation must be an int or None, got {value!r}")
            if value < 0:
                raise ValueError(f"finite valuation must be >= 0, got {value}")
        self.value = value

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if isinstance(other, Valuation):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Valuation):
            other = other.value
        elif not isinstance(other, int):
            return NotImplemented
        if self.value is None:
            return False
        return other is None or self.value < other

    def __hash__(self):
        return hash(self.value)

    def __add__(self, other):
        if isinstance(other, Valuation):
            other = other.value
        elif not isinstance(other, int):
            return NotImplemented
        if self.value is None or other is None:
            return Valuation.INFINITE
        return Valuation(self.value + other)

    __radd__ = __add__

    def __repr__(self):
        return "Valuation.INFINITE" if self.value is None else f"Valuation({self.value})"


Valuation.INFINITE = Valuation(None)

INFINITE = Valuation.INFINITE


def _require_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, isqrt(p) + 1)):
        raise ValueError(f"p must be prime, got {p}")


@lru_cache(maxsize=None)
def binom(m: int, k: int) -> int:
    """C(m, k) by the multiplicative formula; 0 outside 0 <= k <= m."""
    if k < 0 or m < 0 or k > m:
        return 0
    k = min(k, m - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (m - k + i) // i
    return result


def vp_factorial(m: int, p: int) -> Valuation:
    """v_p(m!) by Legendre's formula, the finite sum of floor(m / p^l)."""
    _require_prime(p)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    total = 0
    q = p
    while q <= m:
        total += m // q
        q *= p
    return Valuation(total)


def _carry_count(a: int, b: int, p: int) -> int:
    """Number of carries when adding a and b in base p (Kummer's count)."""
    carries = carry = 0
    while a or b or carry:
        carry = 1 if a % p + b % p + carry >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def vp_binom(a: int, b: int, p: int) -> Valuation:
    """v_p(C(a + b, a)), via Legendre sums cross-checked against base-p carries.

    The two routes must agree; a mismatch means a bug and raises AssertionError.
    """
    _require_prime(p)
    if a < 0 or b < 0:
        raise ValueError(f"a and b must be >= 0, got {a}, {b}")
    legendre = (
        vp_factorial(a + b, p).value - vp_factorial(a, p).value - vp_factorial(b, p).value
    )
    carries = _carry_count(a, b, p)
    if legendre != carries:
        raise AssertionError(
            f"Legendre/Kummer disagreement for C({a + b},{a}) at p={p}: "
            f"{legendre} vs {carries}"
        )
    return Valuation(legendre)


def v2_central_binom(n: int) -> Valuation:
    """v_2(C(2n, n)) = n - sum of floor(n / 2^l); equals the binary digit sum of n.

    The value is 1 exactly when n is a power of two.
    """
    if n <= 0:
        raise ValueError(f"n must be >= 1, got {n}")
    tail = 0
    q = 2
    while q <= n:
        tail += n // q
        q *= 2
    v = n - tail
    if v != n.bit_count() or vp_binom(n, n, 2) != v:
        raise AssertionError(f"central binomial valuation mismatch at n={n}")
    return Valuation(v)


def is_power_of_two(n: int) -> bool:
    """True iff n = 2^t for some t >= 0."""
    return n > 0 and n & (n - 1) == 0


def eq1_witness_L(p: int) -> int:
    """The unique L >= 1 with 2^(L-1) <= p < 2^L."""
    if p <= 0:
        raise ValueError(f"p must be >= 1, got {p}")
    return p.bit_length()


def eq1_single_term(m: int, p: int, ell: int) -> int:
    """floor((m+p)/2^l) - 2*floor(p/2^l) - floor((m-p)/2^l).

    One term of the dyadic valuation of C(m,p)*C(m+p,m) written as a Legendre
    sum; each term is >= 0, and at ell = eq1_witness_L(p) it is >= 1.
    """
    if not 1 <= p <= m:
        raise ValueError(f"need 1 <= p <= m, got p={p}, m={m}")
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    q = 1 << ell
    return (m + p) // q - 2 * (p // q) - (m - p) // q
