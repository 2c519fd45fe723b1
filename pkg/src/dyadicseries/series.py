"""Truncated formal power series over exact integers.

Provides ring operations at a fixed truncation order, integer n-th root
extraction with first-failure reporting, the modulus mu(n) = n * rad(n),
and a membership test deciding whether a residue series is an n-th power
of a residue series with constant term 1.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from enum import Enum
from math import gcd

from .arith import binom

DEFAULT_FRONTIER_CAP = 4096


class SearchCapExceeded(RuntimeError):
    """The modular membership search frontier outgrew its configured cap."""


class IntSeries:
    """A truncated integer power series: coefficients c[0..order] of z^0..z^order.

    Instances are immutable values.  Equality is coefficient-wise and only
    defined between series of the same truncation order; comparing different
    orders raises ValueError instead of silently truncating.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = tuple(operator.index(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("IntSeries is immutable")

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        """The constant series 1, truncated to the given order."""
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        return cls([1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(
                f"cannot compare series of different orders ({self.order} vs {other.order})"
            )
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __mul__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        return mul_truncated(self, other)

    def __pow__(self, e: int):
        return pow_truncated(self, e)

    def __repr__(self):
        return f"IntSeries({list(self.coefficients)!r})"


class ResidueSeries:
    """A truncated series with coefficients reduced into [0, modulus)."""

    __slots__ = ("residues", "modulus")

    def __init__(self, residues, modulus: int):
        modulus = operator.index(modulus)
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        res = tuple(operator.index(r) for r in residues)
        if not res:
            raise ValueError("a residue series needs at least the constant residue")
        bad = [r for r in res if not 0 <= r < modulus]
        if bad:
            raise ValueError(f"residues must lie in [0, {modulus}), got {bad[0]}")
        object.__setattr__(self, "residues", res)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("ResidueSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.residues) - 1

    def __eq__(self, other):
        if not isinstance(other, ResidueSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(
                f"cannot compare series of different orders ({self.order} vs {other.order})"
            )
        return self.modulus == other.modulus and self.residues == other.residues

    def __hash__(self):
        return hash((self.residues, self.modulus))

    def __repr__(self):
        return f"ResidueSeries({list(self.residues)!r}, modulus={self.modulus})"


class RootStatus(Enum):
    INTEGRAL = "INTEGRAL"
    FAILS = "FAILS"


@dataclass(frozen=True)
class RootOutcome:
    """Result of integer n-th root extraction.

    INTEGRAL carries the root; FAILS carries the first index whose coefficient
    recurrence is not exactly divisible, and the offending remainder mod n.
    """

    status: RootStatus
    root: IntSeries | None = None
    failure_index: int | None = None
    failure_remainder: int | None = None

    @property
    def is_integral(self) -> bool:
        return self.status is RootStatus.INTEGRAL


def mul_truncated(f: IntSeries, g: IntSeries) -> IntSeries:
    """Cauchy product truncated to the common order; orders must match."""
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} vs {g.order}")
    n = f.order
    fc, gc = f.coefficients, g.coefficients
    out = [0] * (n + 1)
    for i, a in enumerate(fc):
        if a:
            for j in range(n + 1 - i):
                b = gc[j]
                if b:
                    out[i + j] += a * b
    return IntSeries(out)


def pow_truncated(f: IntSeries, e: int) -> IntSeries:
    """f**e truncated to f's order; f**0 is the constant series 1."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    result = IntSeries.one(f.order)
    base = f
    while e:
        if e & 1:
            result = mul_truncated(result, base)
        e >>= 1
        if e:
            base = mul_truncated(base, base)
    return result


def _add_root_term(pows: list[list[int]], c: int, k: int, order: int) -> None:
    """Update the maintained truncated powers after the partial root gains c*z^k.

    (r + c z^k)^j = sum_i C(j,i) c^i z^(k*i) r^(j-i); walking j downwards keeps
    pows[j - i] at its old value while pows[j] is rewritten in place.
    """
    for j in range(len(pows) - 1, 0, -1):
        target = pows[j]
        for i in range(1, j + 1):
            shift = k * i
            if shift > order:
                break
            scale = binom(j, i) * c**i
            src = pows[j - i]
            for t in range(shift, order + 1):
                s = src[t - shift]
                if s:
                    target[t] += scale * s


def nth_root_integral(f: IntSeries, n: int) -> RootOutcome:
    """Integer n-th root of f, or the first index where integrality breaks.

    Builds candidate root coefficients by the recurrence c_0 = 1,
    c_k = (f_k - T_k) / n, where T_k is the z^k coefficient of the n-th power
    of the partial root c_0 + ... + c_{k-1} z^{k-1}.  The truncated powers of
    the partial root are maintained incrementally, so extraction costs
    O(order^2) big-integer multiplies for n = 2.  The first non-exact division
    is reported with its remainder mod n.
    """
    if n < 2:
        raise ValueError(f"root degree must be >= 2, got {n}")
    if f.coefficients[0] != 1:
        raise ValueError("series must have constant coefficient 1")
    order = f.order
    pows = [[0] * (order + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        pows[j][0] = 1
    root = [1]
    for k in range(1, order + 1):
        d = f.coefficients[k] - pows[n][k]
        if d % n:
            return RootOutcome(RootStatus.FAILS, failure_index=k, failure_remainder=d % n)
        c = d // n
        root.append(c)
        if c:
            _add_root_term(pows, c, k, order)
    return RootOutcome(RootStatus.INTEGRAL, root=IntSeries(root))


def mu(n: int) -> int:
    """n times the radical of n (the product of its distinct primes); mu(1) = 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    radical = 1
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            radical *= d
            while rest % d == 0:
                rest //= d
        d += 1 if d == 2 else 2
    if rest > 1:
        radical *= rest
    return n * radical


def reduce_mod(f: IntSeries, m: int) -> ResidueSeries:
    """Reduce every coefficient of f into [0, m)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return ResidueSeries([c % m for c in f.coefficients], m)


def is_one_mod(f: IntSeries, m: int) -> bool:
    """True iff f is the constant series 1 modulo m, coefficient-wise."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    cs = f.coefficients
    return cs[0] % m == 1 and all(c % m == 0 for c in cs[1:])


def _extend_pows(pows, c: int, k: int, m: int, order: int):
    """Truncated powers of (r + c z^k) mod m, from the powers of r."""
    new = [pows[0]]
    for j in range(1, len(pows)):
        row = list(pows[j])
        for i in range(1, j + 1):
            shift = k * i
            if shift > order:
                break
            scale = binom(j, i) * pow(c, i, m) % m
            if scale:
                src = pows[j - i]
                for t in range(shift, order + 1):
                    s = src[t - shift]
                    if s:
                        row[t] = (row[t] + scale * s) % m
        new.append(tuple(row))
    return tuple(new)


def _membership_search(target, m: int, n: int, cap: int) -> bool:
    """Breadth-first search for an n-th root of `target` modulo m.

    Frontier entries are root prefixes c_0 = 1, ..., c_{k-1} whose n-th power
    matches `target` up to z^{k-1}; each carries the truncated powers of its
    prefix mod m.  Step k solves n*c = target[k] - T_k (mod m), solvable iff
    g = gcd(n, m) divides the right side, and the g candidate residues of a
    solvable step agree modulo step = m // g.

    Whenever m divides C(n,i) * step^i for 1 <= i <= n (always the case for
    m = mu(n)), prefixes that agree coefficient-wise mod step have congruent
    n-th powers under every future extension, so such prefixes are one search
    state: the frontier is deduplicated on the step-reduced prefix and stays
    small.  For moduli where that divisibility fails, every candidate branch
    is kept and `cap` bounds the frontier; exceeding it raises
    SearchCapExceeded rather than returning a wrong answer.
    """
    if target[0] % m != 1 % m:
        return False
    order = len(target) - 1
    g = gcd(n, m)
    step = m // g
    merge = all(binom(n, i) * step**i % m == 0 for i in range(1, n + 1))
    base_pows = tuple(tuple([1] + [0] * order) for _ in range(n + 1))
    frontier = {(1,): base_pows}
    for k in range(1, order + 1):
        next_frontier = {}
        for prefix, pows in frontier.items():
            b = (target[k] - pows[n][k]) % m
            if b % g:
                continue
            base_c = (b // g) * pow(n // g, -1, step) % step if step > 1 else 0
            candidates = (base_c,) if merge else tuple(
                (base_c + t * step) % m for t in range(g)
            )
            for c in candidates:
                key = prefix + (c,)
                if key not in next_frontier:
                    if len(next_frontier) >= cap:
                        raise SearchCapExceeded(
                            f"membership frontier exceeded cap {cap} at index {k}"
                        )
                    next_frontier[key] = _extend_pows(pows, c, k, m, order)
        if not next_frontier:
            return False
        frontier = next_frontier
    return True


def pn_membership_mod(
    f: ResidueSeries, n: int, *, frontier_cap: int = DEFAULT_FRONTIER_CAP
) -> bool:
    """Is f the n-th power of some residue series with constant residue 1?

    f.modulus must equal mu(n).  Membership is decided to f's truncation
    order: true iff residues c_0 = 1, c_1, ..., c_order exist with
    (sum c_i z^i)^n congruent to f coefficient-wise mod the modulus.
    """
    if n < 2:
        raise ValueError(f"power degree must be >= 2, got {n}")
    expected = mu(n)
    if f.modulus != expected:
        raise ValueError(f"modulus {f.modulus} does not match mu({n}) = {expected}")
    if f.residues[0] != 1:
        raise ValueError("constant residue must be 1")
    return _membership_search(f.residues, f.modulus, n, frontier_cap)


def heninger_check(
    f: IntSeries, n: int, *, frontier_cap: int = DEFAULT_FRONTIER_CAP
) -> bool:
    """Reduce f modulo mu(n) and decide n-th power membership there.

    For full (untruncated) series this criterion is equivalent to f having an
    integer n-th root with constant term 1; the truncated test decides it only
    to f's stated order.
    """
    if n < 2:
        raise ValueError(f"power degree must be >= 2, got {n}")
    if f.coefficients[0] != 1:
        raise ValueError("series must have constant coefficient 1")
    return pn_membership_mod(reduce_mod(f, mu(n)), n, frontier_cap=frontier_cap)


def format_series(series, style: str = "lines") -> str:
    """Render coefficients as decimal text.

    "lines" puts one coefficient per line (index implicit); "bracket" gives
    the single-line form ``[c0, c1, ..., cN]``.
    """
    coeffs = series.coefficients if isinstance(series, IntSeries) else tuple(series)
    if style == "lines":
        return "\n".join(str(c) for c in coeffs)
    if style == "bracket":
        return "[" + ", ".join(str(c) for c in coeffs) + "]"
    raise ValueError(f"unknown style {style!r}")


def parse_series(text: str) -> list[int]:
    """Parse either serialized form (or a bare comma list) into coefficients."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    tokens = [t for t in re.split(r"[\s,]+", body) if t]
    if not tokens:
        raise ValueError("empty series text")
    return [int(t) for t in tokens]
