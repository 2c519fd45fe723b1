#!/usr/bin/env python3
"""Running the exhaustive verification sweeps and reading their reports.

Each verifier checks one claim over a whole index range and returns a
machine-readable report: pass/fail, items checked, counterexamples (capped),
and elapsed time.  Reports are deterministic for a fixed range.
"""

from dyadicseries import (
    verify_corollary,
    verify_eq1,
    verify_observation2,
    verify_theorem1,
)

print("theorem1: v2 of each summand is 1 exactly at power-of-two corners, else >= 2")
print(verify_theorem1(32).to_json(indent=2))
print()

print("corollary: v2(A(n)) >= 2 for every n in range")
print(verify_corollary(60).to_json(indent=2))
print()

print("eq1: v2(C(m,p) * C(m+p,m)) >= 1, with the single-term witness at level L")
print(verify_eq1(120).to_json(indent=2))
print()

print("observation2: the generating series is an exact square to the order")
print(verify_observation2(40).to_json(indent=2))
print()

print("What a failing report looks like (deliberately broken predicate):")
broken = verify_eq1(4, _required_valuation=2)
print(broken.to_json(indent=2))
