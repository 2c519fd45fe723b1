#!/usr/bin/env python3
"""A tour of the coefficient sequence A(n).

A(n) sums C(n,j)^2 C(n,k)^2 C(n+j,n) C(n+k,n) C(j+k,n) over 0 <= j,k <= n.
This script prints the first values, splits each one into its two corner
summands plus the rest, and shows the 2-adic structure that makes every
A(n) with n >= 1 divisible by 4.
"""

from dyadicseries import coefficient_stream, decompose_A, term, term_valuation


def v2(x):
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


print("First coefficients:")
for n, a in enumerate(coefficient_stream(10)):
    print(f"  A({n:2d}) = {a}")

print()
print("Decomposition A(n) = corner + corner + rest, with 2-adic valuations:")
print(f"  {'n':>3} {'corner':>14} {'rest':>20} {'v2(corner)':>10} {'v2(rest)':>8} {'v2(A)':>6}")
for n in range(1, 11):
    dec = decompose_A(n)
    print(
        f"  {n:>3} {dec.corner_left:>14} {dec.primed_sum:>20}"
        f" {v2(dec.corner_left):>10} {v2(dec.primed_sum):>8} {v2(dec.total):>6}"
    )

print()
print("The corners a_n(0,n) = a_n(n,0) = C(2n,n) are the only summands that")
print("can have valuation exactly 1, and only when n is a power of two:")
for n in (1, 2, 3, 4, 6, 8):
    v = term_valuation((n, 0, n))
    print(f"  n = {n}: a_n(0,n) = {term((n, 0, n))}, v2 = {v}")

print()
print("Every other nonzero summand has valuation >= 2; for example at n = 6:")
for j, k in ((1, 5), (3, 3), (6, 6)):
    print(f"  v2(a_6({j},{k})) = {term_valuation((6, j, k))}")
