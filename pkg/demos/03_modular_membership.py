#!/usr/bin/env python3
"""Deciding n-th power membership modulo mu(n) = n * rad(n).

Whether a series with constant term 1 is an n-th power of an integer series
can be decided from its coefficients modulo mu(n) alone.  This script shows
the modulus, the reduction, the search verdicts, and a brute-force
cross-check at desk scale.
"""

import itertools

from dyadicseries import (
    IntSeries,
    ResidueSeries,
    generating_series,
    heninger_check,
    mu,
    pn_membership_mod,
    reduce_mod,
)

print("The modulus mu(n) = n * (product of distinct primes of n):")
for n in (1, 2, 3, 4, 6, 12):
    print(f"  mu({n:2d}) = {mu(n)}")

print()
w = generating_series(30)
reduced = reduce_mod(w, mu(2))
print(f"Generating series mod mu(2) = 4, to order 30: {list(reduced.residues)}")
print("Every coefficient past the constant is divisible by 4, so the")
print("reduction is the constant series 1 -- trivially a square mod 4.")
print(f"  membership verdict: {pn_membership_mod(reduced, 2)}")
print(f"  same through heninger_check: {heninger_check(w, 2)}")

print()
print("A series congruent to 1 + z mod 4 is never a square mod 4:")
print(f"  [1, 1] member? {pn_membership_mod(ResidueSeries([1, 1], 4), 2)}")
print(f"  [1, 2] member? {pn_membership_mod(ResidueSeries([1, 2], 4), 2)}  (root 1 + z)")

print()
print("Cross-check against brute-force enumeration of all residue roots")
print("(order 3, modulus 4, every constant-1 target):")


def square_mod(coeffs, m):
    order = len(coeffs) - 1
    out = [0] * (order + 1)
    for i, a in enumerate(coeffs):
        for j in range(order + 1 - i):
            out[i + j] = (out[i + j] + a * coeffs[j]) % m
    return tuple(out)


agree = total = 0
for tail in itertools.product(range(4), repeat=3):
    target = (1,) + tail
    brute = any(
        square_mod((1,) + root_tail, 4) == target
        for root_tail in itertools.product(range(4), repeat=3)
    )
    verdict = pn_membership_mod(ResidueSeries(target, 4), 2)
    total += 1
    agree += verdict is brute
print(f"  {agree}/{total} targets agree")

print()
print("The higher-degree tests reject the generating series right away:")
for n in (3, 4):
    print(f"  degree {n} (mod mu({n}) = {mu(n)}): member? {heninger_check(w, n)}")
