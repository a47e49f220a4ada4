from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from virmod import weights
from virmod.weights import (
    IntervalSet,
    MinimalLabel,
    b_set_bruteforce,
    b_set_intervals,
    bad_primes,
    canonical_labels,
    canonicalize,
    central_charge,
    classify_prime,
    d_matrix,
    d_matrix_full,
    d_minus,
    d_plus,
    g_blocks,
    g_set,
    highest_weight,
    primes_upto,
    verify_prop_h,
    verify_prop_x,
    weight_numerator,
)


def b_set_tuple_oracle(ell):
    """Quadruple-loop enumeration over (m, n, m', n'); independent of the
    sum-based enumeration used by b_set_bruteforce."""
    vals = set()
    for m in range(1, ell + 1):
        for mp in range(1, ell + 1):
            for n in range(1, ell + 2):
                for np_ in range(1, ell + 2):
                    v = abs(d_plus(ell, m, n, mp, np_))
                    if v:
                        vals.add(v)
    return sorted(vals)


class TestScalars:
    def test_central_charges(self):
        assert central_charge(2) == F(1, 2)
        assert central_charge(3) == F(7, 10)
        assert central_charge(4) == F(4, 5)

    def test_central_charge_range(self):
        with pytest.raises(ValueError):
            central_charge(1)

    def test_weights(self):
        assert highest_weight(2, 2, 1) == F(1, 2)
        assert highest_weight(2, 2, 2) == F(1, 16)
        assert highest_weight(3, 2, 2) == F(3, 80)

    @pytest.mark.parametrize("ell", range(2, 12))
    def test_vacuum_weight_is_zero(self, ell):
        assert highest_weight(ell, 1, 1) == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            highest_weight(2, 3, 1)


class TestCanonicalize:
    def test_examples(self):
        assert canonicalize(2, 1, 2) == MinimalLabel(2, 2, 2)
        assert canonicalize(5, 3, 2) == MinimalLabel(5, 3, 2)
        assert canonicalize(3, 1, 3) == MinimalLabel(3, 3, 2)

    @pytest.mark.parametrize("ell", range(2, 31))
    def test_weight_invariant(self, ell):
        for m in range(1, ell + 1):
            for n in range(1, ell + 2):
                lab = canonicalize(ell, m, n)
                assert lab.is_canonical
                assert highest_weight(ell, m, n) == highest_weight(ell, lab.m, lab.n)

    @pytest.mark.parametrize("ell", range(2, 20))
    def test_canonical_count(self, ell):
        assert len(canonical_labels(ell)) == ell * (ell + 1) // 2


class TestDFactors:
    def test_diagonal_is_zero(self):
        assert d_minus(4, 3, 2, 3, 2) == 0

    def test_second_max_witness(self):
        assert d_plus(5, 5, 1, 5, 2) == 52 == 2 * 25 + 5 - 3

    @given(
        ell=st.integers(2, 20),
        m=st.integers(1, 20),
        n=st.integers(1, 21),
        mp=st.integers(1, 20),
        np_=st.integers(1, 21),
    )
    @settings(max_examples=200)
    def test_numerator_difference_factors(self, ell, m, n, mp, np_):
        m, mp = min(m, ell), min(mp, ell)
        n, np_ = min(n, ell + 1), min(np_, ell + 1)
        diff = weight_numerator(ell, m, n) - weight_numerator(ell, mp, np_)
        assert diff == d_plus(ell, m, n, mp, np_) * d_minus(ell, m, n, mp, np_)


class TestBSet:
    def test_ell2(self):
        assert b_set_bruteforce(2) == [1, 2, 3, 4, 6, 7, 10]

    @pytest.mark.parametrize("ell", range(2, 13))
    def test_matches_tuple_oracle(self, ell):
        assert b_set_bruteforce(ell) == b_set_tuple_oracle(ell)

    @pytest.mark.parametrize("ell", range(2, 51))
    def test_extremes(self, ell):
        b = b_set_bruteforce(ell)
        assert b[-1] == 2 * (ell * ell + ell - 1)
        assert b[-2] == 2 * ell * ell + ell - 3

    def test_interval_examples(self):
        assert b_set_intervals(2).intervals == ((1, 4), (6, 7), (10, 10))
        assert b_set_intervals(3).intervals == ((1, 10), (12, 14), (17, 18), (22, 22))

    @pytest.mark.parametrize("ell", range(2, 101))
    def test_intervals_equal_bruteforce(self, ell):
        assert verify_prop_x(ell).passed

    @pytest.mark.parametrize("ell", range(2, 51))
    def test_top_block_is_singleton_max(self, ell):
        top = b_set_intervals(ell).intervals[-1]
        assert top == (2 * (ell * ell + ell - 1),) * 2


class TestDMatrix:
    def test_ell5_printed_matrix(self):
        expected = [
            [2, 4, 10, 16, 22, 28],
            [9, 3, 3, 9, 15, 21],
            [16, 10, 4, 2, 8, 14],
            [23, 17, 11, 5, 1, 7],
            [30, 24, 18, 12, 6, 0],
            [37, 31, 25, 19, 13, 7],
            [44, 38, 32, 26, 20, 14],
            [51, 45, 39, 33, 27, 21],
            [58, 52, 46, 40, 34, 28],
        ]
        assert d_matrix(5) == expected

    def test_ell2(self):
        # row labels 8, 12, 16 against column labels 6, 9, 12
        assert d_matrix(2) == [[2, 1, 4], [6, 3, 0], [10, 7, 4]]

    @pytest.mark.parametrize("ell", range(2, 21))
    def test_shape(self, ell):
        m = d_matrix(ell)
        assert len(m) == 2 * ell - 1
        assert all(len(row) == ell + 1 for row in m)

    @pytest.mark.parametrize("ell", range(2, 21))
    def test_full_matrix_entries_give_b_set(self, ell):
        entries = {v for row in d_matrix_full(ell) for v in row if v}
        assert sorted(entries) == b_set_bruteforce(ell)

    @pytest.mark.parametrize("ell", range(2, 21))
    def test_full_matrix_rotation_symmetry(self, ell):
        a = d_matrix_full(ell)
        assert a == [row[::-1] for row in a[::-1]]


class TestGSet:
    def test_ell2(self):
        assert g_set(2, corrected=False).values() == [5]
        assert g_set(2, corrected=True).values() == [5, 8, 9]

    @pytest.mark.parametrize("ell", range(2, 101))
    def test_corrected_matches_block_union(self, ell):
        assert g_set(ell, corrected=True) == g_blocks(ell)

    def test_published_range_fails_at_ell2(self):
        assert g_set(2, corrected=False) != g_blocks(2)


class TestClassifier:
    def test_ell2_p7_collision(self):
        cls = classify_prime(2, 7)
        assert cls.is_bad
        assert cls.collisions == ((MinimalLabel(2, 2, 1), MinimalLabel(2, 2, 2)),)

    def test_ell2_p3_good(self):
        assert classify_prime(2, 3).status == "good"

    def test_ell3_p5_good_with_degenerates(self):
        cls = classify_prime(3, 5)
        assert cls.status == "good"
        assert set(cls.degenerate) == {
            MinimalLabel(3, 2, 2),
            MinimalLabel(3, 3, 2),
            MinimalLabel(3, 3, 3),
        }
        assert not cls.central_charge_defined

    def test_ell3_p13_bad(self):
        assert classify_prime(3, 13).is_bad

    def test_p2_bad_by_convention(self):
        assert classify_prime(4, 2).is_bad

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            classify_prime(3, 9)


class TestBadPrimes:
    def test_examples(self):
        assert bad_primes(2) == [2, 7]
        assert bad_primes(3) == [2, 3, 7, 13, 17]
        assert bad_primes(4) == [p for p in primes_upto(33) if p not in (5, 19, 29, 31)]
        assert bad_primes(5) == [p for p in primes_upto(52) if p not in (7, 29, 41, 43, 47)]
        assert bad_primes(6) == [p for p in primes_upto(75) if p not in (7, 41, 71, 73)]

    @pytest.mark.parametrize("ell", range(2, 13))
    def test_bad_primes_live_in_b_set(self, ell):
        b = b_set_intervals(ell)
        bound = 2 * ell * ell + ell - 3
        for p in bad_primes(ell):
            assert p in b and p <= bound


class TestRemarks:
    @pytest.mark.parametrize("ell", range(2, 101))
    def test_neighbour_primes_are_good(self, ell):
        for q in (ell + 1, ell + 2):
            if weights._is_prime(q):
                assert classify_prime(ell, q).status == "good"

    @pytest.mark.parametrize("ell", range(2, 101))
    def test_squares_not_in_b_set(self, ell):
        b = b_set_intervals(ell)
        assert (ell + 1) ** 2 not in b
        assert (ell + 2) ** 2 not in b


class TestPropH:
    @pytest.mark.parametrize("ell", [2, 3, 4, 5])
    def test_window_above_bound_is_good(self, ell):
        assert verify_prop_h(ell).passed

    def test_specific_primes(self):
        assert classify_prime(2, 11).status == "good"
        assert classify_prime(2, 13).status == "good"
        assert classify_prime(3, 19).status == "good"


class TestIntervalSet:
    def test_normalization_merges_adjacent(self):
        s = IntervalSet.from_intervals([(5, 7), (1, 2), (3, 4), (10, 10)])
        assert s.intervals == ((1, 7), (10, 10))

    def test_from_values(self):
        assert IntervalSet.from_values([3, 1, 2, 7]).intervals == ((1, 3), (7, 7))

    @given(st.sets(st.integers(0, 60)))
    def test_values_round_trip(self, vals):
        assert IntervalSet.from_values(vals).values() == sorted(vals)
