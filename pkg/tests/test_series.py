"""Truncated series ring, root extraction, and modular membership tests.

Membership results are checked against brute-force enumeration of candidate
residue roots; root extraction is checked by squaring/cubing back.  The
randomized checks use a fixed seed so the suite is deterministic.
"""

import itertools
import random

import pytest

from dyadicseries.sequence import generating_series
from dyadicseries.series import (
    IntSeries,
    ResidueSeries,
    RootStatus,
    SearchCapExceeded,
    _membership_search,
    format_series,
    heninger_check,
    is_one_mod,
    mu,
    mul_truncated,
    nth_root_integral,
    parse_series,
    pn_membership_mod,
    pow_truncated,
    reduce_mod,
)

RNG_SEED = 20260810


def power_mod_series(coeffs, n, m):
    """Oracle: n-th power of a residue coefficient list, truncated, mod m."""
    order = len(coeffs) - 1
    cur = [1] + [0] * order
    for _ in range(n):
        nxt = [0] * (order + 1)
        for i, a in enumerate(cur):
            if a:
                for j in range(order + 1 - i):
                    if coeffs[j]:
                        nxt[i + j] = (nxt[i + j] + a * coeffs[j]) % m
        cur = nxt
    return tuple(cur)


def brute_force_member(residues, n, m):
    """Oracle: enumerate every candidate residue root with constant term 1."""
    order = len(residues) - 1
    return any(
        power_mod_series((1,) + tail, n, m) == tuple(residues)
        for tail in itertools.product(range(m), repeat=order)
    )


class TestIntSeries:
    def test_construction(self):
        s = IntSeries([1, 2, 3])
        assert s.order == 2
        assert s.coefficients == (1, 2, 3)
        assert s[1] == 2
        assert list(s) == [1, 2, 3]

    def test_rejects_empty_and_non_integers(self):
        with pytest.raises(ValueError):
            IntSeries([])
        with pytest.raises(TypeError):
            IntSeries([1, 2.5])

    def test_immutable(self):
        s = IntSeries([1, 2])
        with pytest.raises(AttributeError):
            s.coefficients = (3,)

    def test_equality_requires_matching_order(self):
        assert IntSeries([1, 2]) == IntSeries([1, 2])
        assert IntSeries([1, 2]) != IntSeries([1, 3])
        with pytest.raises(ValueError):
            IntSeries([1, 2]) == IntSeries([1, 2, 0])

    def test_one(self):
        assert IntSeries.one(3).coefficients == (1, 0, 0, 0)


class TestMul:
    def test_binomial_square(self):
        f = IntSeries([1, 1, 0])
        assert mul_truncated(f, f) == IntSeries([1, 2, 1])

    def test_identity(self):
        f = IntSeries([3, -7, 11, 5])
        assert mul_truncated(f, IntSeries.one(3)) == f

    def test_squaring_recovers_known_coefficients(self):
        root = IntSeries([1, 6, 384])
        assert mul_truncated(root, root) == IntSeries([1, 12, 804])

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            mul_truncated(IntSeries([1, 2]), IntSeries([1, 2, 3]))

    def test_operator_form(self):
        f = IntSeries([1, 1])
        assert f * f == IntSeries([1, 2])

    def test_commutative_and_associative_randomized(self):
        rng = random.Random(RNG_SEED)
        for _ in range(200):
            order = rng.randint(0, 8)
            f, g, h = (
                IntSeries([rng.randint(-9, 9) for _ in range(order + 1)])
                for _ in range(3)
            )
            assert mul_truncated(f, g) == mul_truncated(g, f)
            assert mul_truncated(mul_truncated(f, g), h) == mul_truncated(
                f, mul_truncated(g, h)
            )


class TestPow:
    def test_trivial_exponents(self):
        f = IntSeries([1, 4, -2])
        assert pow_truncated(f, 0) == IntSeries.one(2)
        assert pow_truncated(f, 1) == f

    def test_binomial_expansion(self):
        f = IntSeries([1, 1, 0, 0])
        assert pow_truncated(f, 2) == IntSeries([1, 2, 1, 0])

    def test_matches_repeated_multiplication(self):
        rng = random.Random(RNG_SEED + 1)
        for _ in range(100):
            order = rng.randint(0, 6)
            f = IntSeries([rng.randint(-9, 9) for _ in range(order + 1)])
            e = rng.randint(0, 5)
            expected = IntSeries.one(order)
            for _ in range(e):
                expected = mul_truncated(expected, f)
            assert pow_truncated(f, e) == expected

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            pow_truncated(IntSeries([1]), -1)

    def test_operator_form(self):
        assert IntSeries([1, 1]) ** 2 == IntSeries([1, 2])


class TestNthRoot:
    def test_square_root_of_coefficient_series(self):
        w = generating_series(3)
        out = nth_root_integral(w, 2)
        assert out.status is RootStatus.INTEGRAL
        # frozen root; squaring it reproduces 1, 12, 804, 88680
        assert out.root.coefficients == (1, 6, 384, 42036)
        assert pow_truncated(out.root, 2) == w

    def test_constant_one(self):
        out = nth_root_integral(IntSeries.one(5), 2)
        assert out.is_integral
        assert out.root == IntSeries.one(5)

    def test_order_one_root(self):
        out = nth_root_integral(generating_series(1), 2)
        assert out.is_integral
        assert out.root.coefficients == (1, 6)  # 2 * 6 = 12

    def test_one_plus_z_fails_immediately(self):
        out = nth_root_integral(IntSeries([1, 1]), 2)
        assert out.status is RootStatus.FAILS
        assert out.failure_index == 1
        assert out.failure_remainder == 1

    def test_cube_root_of_coefficient_series_fails_at_three(self):
        out = nth_root_integral(generating_series(6), 3)
        assert not out.is_integral
        assert (out.failure_index, out.failure_remainder) == (3, 2)

    def test_fourth_root_of_coefficient_series_fails_at_two(self):
        out = nth_root_integral(generating_series(6), 4)
        assert (out.failure_index, out.failure_remainder) == (2, 2)

    def test_exact_polynomial_power(self):
        f = pow_truncated(IntSeries([1, 1, 0, 0, 0, 0, 0]), 4)
        out = nth_root_integral(f, 4)
        assert out.is_integral
        assert out.root == IntSeries([1, 1, 0, 0, 0, 0, 0])

    def test_round_trip_on_random_powers(self):
        rng = random.Random(RNG_SEED + 2)
        for _ in range(150):
            n = rng.choice((2, 3, 4))
            order = rng.randint(1, 10)
            g = IntSeries([1] + [rng.randint(-50, 50) for _ in range(order)])
            f = pow_truncated(g, n)
            out = nth_root_integral(f, n)
            assert out.is_integral
            assert out.root == g  # the root with constant term 1 is unique
            assert pow_truncated(out.root, n) == f

    def test_first_failure_index_is_exact(self):
        # bump one coefficient of a perfect square by 1: the recurrence must
        # fail exactly there with remainder 1
        rng = random.Random(RNG_SEED + 3)
        for _ in range(100):
            order = rng.randint(1, 8)
            g = IntSeries([1] + [rng.randint(-9, 9) for _ in range(order)])
            f = list(pow_truncated(g, 2).coefficients)
            bump = rng.randint(1, order)
            f[bump] += 1
            out = nth_root_integral(IntSeries(f), 2)
            assert out.status is RootStatus.FAILS
            assert (out.failure_index, out.failure_remainder) == (bump, 1)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            nth_root_integral(IntSeries([2, 1]), 2)
        with pytest.raises(ValueError):
            nth_root_integral(IntSeries([1, 1]), 1)


class TestMu:
    def test_examples(self):
        assert mu(2) == 4
        assert mu(1) == 1
        assert mu(12) == 72  # 12 * 2 * 3

    def test_structure_up_to_1000(self):
        def prime_set(x):
            primes, d = set(), 2
            while d * d <= x:
                if x % d == 0:
                    primes.add(d)
                    while x % d == 0:
                        x //= d
                d += 1
            if x > 1:
                primes.add(x)
            return primes

        for n in range(1, 1001):
            radical = mu(n) // n
            assert mu(n) == n * radical
            assert prime_set(radical) == prime_set(n)
            # squarefree: no prime square divides the radical
            assert all(radical % (p * p) for p in prime_set(radical))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            mu(0)


class TestResidues:
    def test_reduce_coefficient_series(self):
        assert reduce_mod(generating_series(3), 4).residues == (1, 0, 0, 0)

    def test_reduce_examples(self):
        assert reduce_mod(IntSeries.one(4), 7).residues == (1, 0, 0, 0, 0)
        assert reduce_mod(IntSeries([1, 7]), 4).residues == (1, 3)
        assert reduce_mod(IntSeries([-1, -5]), 4).residues == (3, 3)

    def test_residue_series_validation(self):
        with pytest.raises(ValueError):
            ResidueSeries([1, 4], 4)
        with pytest.raises(ValueError):
            ResidueSeries([1], 1)

    def test_is_one_mod(self):
        assert is_one_mod(generating_series(50), 4)
        assert not is_one_mod(IntSeries([1, 1]), 4)
        assert is_one_mod(IntSeries.one(9), 4)
        assert is_one_mod(IntSeries([5, 8]), 4)

    def test_reduce_rejects_small_modulus(self):
        with pytest.raises(ValueError):
            reduce_mod(IntSeries([1]), 1)


class TestMembership:
    def test_hand_cases(self):
        assert pn_membership_mod(ResidueSeries([1, 0, 0, 0], 4), 2) is True
        assert pn_membership_mod(ResidueSeries([1, 1], 4), 2) is False
        assert pn_membership_mod(ResidueSeries([1, 2], 4), 2) is True

    def test_order_zero_is_member(self):
        assert pn_membership_mod(ResidueSeries([1], 4), 2) is True

    def test_agrees_with_brute_force_small(self):
        for order in range(4):
            for tail in itertools.product(range(4), repeat=order):
                residues = (1,) + tail
                expected = brute_force_member(residues, 2, 4)
                assert pn_membership_mod(ResidueSeries(residues, 4), 2) is expected

    def test_agrees_with_brute_force_cube(self):
        # n = 3, mu = 9: branching factor 3, still exhaustible at tiny orders
        for order in range(3):
            for tail in itertools.product(range(9), repeat=order):
                residues = (1,) + tail
                expected = brute_force_member(residues, 3, 9)
                assert pn_membership_mod(ResidueSeries(residues, 9), 3) is expected

    def test_rejects_wrong_modulus(self):
        with pytest.raises(ValueError):
            pn_membership_mod(ResidueSeries([1, 0], 8), 2)

    def test_rejects_constant_not_one(self):
        with pytest.raises(ValueError):
            pn_membership_mod(ResidueSeries([0, 1], 4), 2)

    def test_rejects_small_degree(self):
        with pytest.raises(ValueError):
            pn_membership_mod(ResidueSeries([1, 0], 4), 1)

    def test_cap_raises_on_branching_modulus(self):
        # modulus 6 with n = 2 does not satisfy the merge divisibility, so the
        # all-zero target branches at every index and must hit a tiny cap
        with pytest.raises(SearchCapExceeded):
            _membership_search((1, 0, 0, 0, 0, 0, 0), 6, 2, 4)

    def test_branching_search_still_correct_under_generous_cap(self):
        for order in range(4):
            for tail in itertools.product(range(6), repeat=order):
                residues = (1,) + tail
                expected = brute_force_member(residues, 2, 6)
                assert _membership_search(residues, 6, 2, 10**6) is expected


class TestHeningerCheck:
    def test_coefficient_series_is_square_member(self):
        assert heninger_check(generating_series(30), 2) is True

    def test_one_plus_z_is_not(self):
        assert heninger_check(IntSeries([1, 1, 0, 0, 0, 0]), 2) is False

    def test_constant_one_any_degree(self):
        assert heninger_check(IntSeries.one(0), 3) is True

    def test_coefficient_series_is_not_higher_power(self):
        w = generating_series(12)
        assert heninger_check(w, 3) is False
        assert heninger_check(w, 4) is False

    def test_forward_direction_on_random_powers(self):
        # integral n-th root to the order implies membership mod mu(n)
        rng = random.Random(RNG_SEED + 4)
        hits = 0
        for _ in range(200):
            n = rng.choice((2, 3, 4))
            order = rng.randint(1, 12)
            g = IntSeries([1] + [rng.randint(-50, 50) for _ in range(order)])
            f = pow_truncated(g, n)
            assert nth_root_integral(f, n).is_integral
            assert heninger_check(f, n) is True
            hits += 1
        assert hits == 200

    def test_rejects_constant_not_one(self):
        with pytest.raises(ValueError):
            heninger_check(IntSeries([2, 1]), 2)


class TestSerialization:
    def test_lines_form(self):
        assert format_series(IntSeries([1, 12, 804])) == "1\n12\n804"

    def test_bracket_form(self):
        assert format_series(IntSeries([1, -2, 3]), style="bracket") == "[1, -2, 3]"

    def test_round_trip(self):
        coeffs = [1, -7, 0, 42036]
        for style in ("lines", "bracket"):
            text = format_series(IntSeries(coeffs), style=style)
            assert parse_series(text) == coeffs

    def test_parse_comma_list(self):
        assert parse_series("1,2,3") == [1, 2, 3]
        assert parse_series("[1, 2, 3]") == [1, 2, 3]
        assert parse_series("1\n2\n3\n") == [1, 2, 3]

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_series("")
        with pytest.raises(ValueError):
            parse_series("1,x,3")
        with pytest.raises(ValueError):
            format_series(IntSeries([1]), style="csv")
