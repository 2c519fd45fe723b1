#!/usr/bin/env python3
"""Integer square root extraction for truncated series.

The coefficient recurrence c_k = (f_k - T_k) / n either produces an exact
integer root to the truncation order or pinpoints the first index where
integrality breaks.  The generating series of A(n) has an exact integer
square root; its cube and fourth roots fail almost immediately.
"""

from dyadicseries import IntSeries, generating_series, nth_root_integral, pow_truncated

ORDER = 12

w = generating_series(ORDER)
print(f"Series to order {ORDER}:")
for n, c in enumerate(w):
    print(f"  z^{n:<2} {c}")

outcome = nth_root_integral(w, 2)
assert outcome.is_integral
print()
print("Integer square root:")
for n, c in enumerate(outcome.root):
    print(f"  z^{n:<2} {c}")

assert pow_truncated(outcome.root, 2) == w
print()
print("Squaring the root reproduces the series exactly (checked).")

print()
print("Roots that do not exist are reported with their first failure:")
for degree in (3, 4):
    bad = nth_root_integral(w, degree)
    print(
        f"  degree {degree}: fails at index {bad.failure_index}"
        f" with remainder {bad.failure_remainder} (mod {degree})"
    )

simple = nth_root_integral(IntSeries([1, 1, 0, 0]), 2)
print(
    f"  sqrt(1 + z): fails at index {simple.failure_index}"
    f" with remainder {simple.failure_remainder} (c_1 would be 1/2)"
)
