"""Exhaustive desk-scale verification sweeps with machine-readable reports.

Four checks are exposed, named after the claims they test:

* theorem1     -- per-summand valuation dichotomy: v_2(a_n(j,k)) = 1 exactly at
                  the corners {j,k} = {0,n} with n a power of two, >= 2 otherwise
                  (zero summands pass vacuously).
* corollary    -- v_2(A(n)) >= 2 for every n in range.
* eq1          -- v_2(C(m,p) * C(m+p,m)) >= 1 for 1 <= p <= m, together with the
                  single-term witness at level L = eq1_witness_L(p).
* observation2 -- the generating series has an exact integer square root to the
                  truncation order, and passes the mod-mu(2) membership test.

Sweeps may fan out across worker processes over the outer index; per-index
results are merged in index order, so reports are deterministic.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .arith import eq1_single_term, eq1_witness_L, is_power_of_two, vp_binom
from .sequence import coefficient_A, generating_series, term_valuation
from .series import heninger_check, nth_root_integral, pow_truncated

COUNTEREXAMPLE_CAP = 100


@dataclass
class VerificationReport:
    """Outcome of one exhaustive range check.

    counterexamples holds up to COUNTEREXAMPLE_CAP entries of
    (index tuple, expected description, actual value); failures_total counts
    all failures including any beyond the cap.
    """

    check_name: str
    range_description: str
    passed: bool
    counterexamples: list
    items_checked: int
    elapsed_ms: float
    failures_total: int

    def to_json_dict(self, include_timing: bool = True) -> dict:
        return {
            "check": self.check_name,
            "range": self.range_description,
            "passed": self.passed,
            "items_checked": self.items_checked,
            "elapsed_ms": round(self.elapsed_ms, 3) if include_timing else 0,
            "failures_total": self.failures_total,
            "counterexamples": [
                {"index": list(index), "expected": expected, "actual": str(actual)}
                for index, expected, actual in self.counterexamples
            ],
        }

    def to_json(self, include_timing: bool = True, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(include_timing), indent=indent)


def _make_report(name, range_desc, failures, items, started) -> VerificationReport:
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return VerificationReport(
        check_name=name,
        range_description=range_desc,
        passed=not failures,
        counterexamples=failures[:COUNTEREXAMPLE_CAP],
        items_checked=items,
        elapsed_ms=elapsed_ms,
        failures_total=len(failures),
    )


def _sweep(row_fn, indices, workers):
    """Apply row_fn to each index, optionally across processes, keeping order."""
    indices = list(indices)
    if workers is not None and workers > 1 and len(indices) > 1:
        chunk = max(1, len(indices) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(row_fn, indices, chunksize=chunk))
    return [row_fn(i) for i in indices]


def _theorem1_row(n: int):
    failures = []
    items = 0
    for j in range(n + 1):
        for k in range(n + 1):
            items += 1
            v = term_valuation((n, j, k))
            if {j, k} == {0, n} and is_power_of_two(n):
                if v != 1:
                    failures.append(((n, j, k), "v2 == 1 at a power-of-two corner", v))
            elif not v >= 2:
                failures.append(((n, j, k), "v2 >= 2", v))
    return items, failures


def verify_theorem1(n_max: int, workers: int | None = None) -> VerificationReport:
    """Check the summand valuation dichotomy for every 1 <= n <= n_max, 0 <= j,k <= n."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    started = time.perf_counter()
    rows = _sweep(_theorem1_row, range(1, n_max + 1), workers)
    items = sum(r[0] for r in rows)
    failures = [f for r in rows for f in r[1]]
    return _make_report(
        "theorem1", f"1 <= n <= {n_max}, 0 <= j,k <= n", failures, items, started
    )


def _corollary_row(n: int):
    a = coefficient_A(n)
    v = (a & -a).bit_length() - 1  # exact v_2 of the full integer
    if v < 2:
        return 1, [((n,), "v2(A(n)) >= 2", v)]
    return 1, []


def verify_corollary(n_max: int, workers: int | None = None) -> VerificationReport:
    """Check v_2(A(n)) >= 2 for every 1 <= n <= n_max, from the full integers."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    started = time.perf_counter()
    rows = _sweep(_corollary_row, range(1, n_max + 1), workers)
    items = sum(r[0] for r in rows)
    failures = [f for r in rows for f in r[1]]
    return _make_report("corollary", f"1 <= n <= {n_max}", failures, items, started)


def _eq1_row(m: int, required: int = 1):
    failures = []
    for p in range(1, m + 1):
        v = vp_binom(p, m - p, 2) + vp_binom(m, p, 2)
        if not v >= required:
            failures.append(((m, p), f"v2(C(m,p)*C(m+p,m)) >= {required}", v))
        witness = eq1_single_term(m, p, eq1_witness_L(p))
        if witness < 1:
            failures.append(((m, p), "witness term >= 1 at level L", witness))
    return m, failures


def verify_eq1(
    m_max: int, workers: int | None = None, _required_valuation: int = 1
) -> VerificationReport:
    """Check v_2(C(m,p) * C(m+p,m)) >= 1 and its witness term for 1 <= p <= m <= m_max.

    _required_valuation exists for harness self-tests: raising it to 2 makes
    (m, p) = (1, 1) a deliberate counterexample exercising the report path.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    started = time.perf_counter()
    rows = _sweep(partial(_eq1_row, required=_required_valuation), range(1, m_max + 1), workers)
    items = sum(r[0] for r in rows)
    failures = [f for r in rows for f in r[1]]
    return _make_report(
        "eq1", f"1 <= p <= m <= {m_max}", failures, items, started
    )


def verify_observation2(order: int) -> VerificationReport:
    """Extract the square root of the coefficient series and cross-check it.

    Asserts that the root is integral to the truncation order, that squaring
    it reproduces the series exactly, and that the mod-mu(2) membership test
    agrees.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    started = time.perf_counter()
    w = generating_series(order)
    failures = []
    outcome = nth_root_integral(w, 2)
    if not outcome.is_integral:
        failures.append(
            (
                ("root",),
                "integral square root to the truncation order",
                f"fails at index {outcome.failure_index}, remainder {outcome.failure_remainder}",
            )
        )
    elif pow_truncated(outcome.root, 2) != w:
        failures.append((("roundtrip",), "squared root reproduces the series", "mismatch"))
    if not heninger_check(w, 2):
        failures.append((("membership",), "membership mod mu(2) = 4", False))
    return _make_report("observation2", f"series to order {order}", failures, 3, started)
