import json

import pytest

from papkit.errors import BoundExceeded, IndexOutOfRange
from papkit.sequences import (
    Family,
    derangement_count,
    derangement_parity_counts,
    enumerate_family,
    excedance_triangle,
    family_count_by_enumeration,
    filter_family_words,
    iter_family_words,
    pad_count,
    pad_count_by_split_recurrence,
    pad_count_by_step_recurrence,
    pad_count_by_sum,
    pad_excedance_by_convolution,
    pad_excedance_parity_by_convolution,
    pad_parity_counts,
    pad_parity_difference,
    pap_count,
    pap_parity_counts,
    sequence_bfile_lines,
    sequence_json,
    signed_diff_triangle,
    signed_pad_excedance_diff,
    signed_pad_excedance_diff_max_variant,
)


class TestCounts:
    def test_pap_table(self):
        assert [pap_count(n) for n in range(11)] == [
            1, 1, 1, 2, 4, 12, 36, 144, 576, 2880, 14400,
        ]

    def test_pap_parity_table(self):
        evens = [pap_parity_counts(n)[0] for n in range(11)]
        odds = [pap_parity_counts(n)[1] for n in range(11)]
        assert evens == [1, 1, 1, 1, 2, 6, 18, 72, 288, 1440, 7200]
        assert odds == [0, 0, 0, 1, 2, 6, 18, 72, 288, 1440, 7200]

    def test_derangement_table(self):
        assert [derangement_count(n) for n in range(10)] == [
            1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496,
        ]
        assert derangement_parity_counts(5) == (24, 20)

    def test_pad_table(self):
        assert [pad_count(n) for n in range(10)] == [1, 0, 0, 0, 1, 2, 4, 18, 81, 396]
        assert pad_count(14) == 1854 * 1854

    def test_pad_routes_agree(self):
        for n in range(30):
            assert pad_count_by_sum(n) == pad_count(n)
            assert pad_count_by_split_recurrence(n) == pad_count(n)
            assert pad_count_by_step_recurrence(n) == pad_count(n)

    def test_pad_parity_table(self):
        assert pad_parity_counts(9) == (192, 204)
        assert pad_parity_counts(5) == (0, 2)
        assert pad_parity_counts(10) == (976, 960)

    def test_signed_census(self):
        assert [pad_parity_difference(n) for n in range(13)] == [
            1, 0, 0, 0, 1, -2, 4, -6, 9, -12, 16, -20, 25,
        ]


class TestEnumeration:
    def test_single_pad(self):
        assert [p.word for p in enumerate_family(Family.PAD, 4)] == [(3, 4, 1, 2)]

    def test_counts(self):
        assert family_count_by_enumeration(Family.PAP, 5) == 12
        assert family_count_by_enumeration(Family.PAD_ODD, 5) == 2
        assert family_count_by_enumeration(Family.EXCEPTIONAL_PAD, 8) == 9

    def test_lexicographic_order(self):
        words = list(iter_family_words(Family.PAP, 6))
        assert words == sorted(words)

    def test_threads_do_not_change_order(self):
        base = list(iter_family_words(Family.PAD, 8))
        for threads in (2, 4):
            assert list(iter_family_words(Family.PAD, 8, threads=threads)) == base

    def test_matches_filtering(self):
        for n in range(7):
            assert tuple(iter_family_words(Family.PAD, n)) == filter_family_words(
                Family.PAD, n
            )

    def test_bound_enforced(self):
        with pytest.raises(BoundExceeded):
            list(iter_family_words(Family.PAD, 13))
        with pytest.raises(BoundExceeded):
            list(iter_family_words(Family.DERANGEMENT, 10))

    def test_explicit_bound_overrides(self):
        assert family_count_by_enumeration(Family.DERANGEMENT, 10, bound=10) == 1334961

    def test_env_var_overrides(self, monkeypatch):
        monkeypatch.setenv("PAPKIT_MAX_BRUTE", "3")
        with pytest.raises(BoundExceeded):
            list(iter_family_words(Family.PAP, 4))
        assert family_count_by_enumeration(Family.PAP, 3) == 2

    def test_family_parse(self):
        assert Family.parse("pad_even") is Family.PAD_EVEN
        assert Family.parse("PAD-ODD") is Family.PAD_ODD
        with pytest.raises(IndexOutOfRange):
            Family.parse("nope")


class TestTriangles:
    def test_pad_values(self):
        t = excedance_triangle(Family.PAD, 10)
        assert t.value(8, 4) == 51
        assert t.value(10, 5) == 884
        assert t.value(4, 2) == 1
        assert t.value(4, 3) == 0

    def test_parity_values(self):
        even = excedance_triangle(Family.PAD_EVEN, 10)
        odd = excedance_triangle(Family.PAD_ODD, 10)
        assert even.value(10, 4) == 243
        assert odd.value(10, 2) == 0
        assert odd.value(9, 2) == 1

    def test_symmetry(self):
        t = excedance_triangle(Family.PAD, 10)
        for n in range(4, 11):
            for k in range(2, n - 1):
                assert t.value(n, k) == t.value(n, n - k)

    def test_csv(self):
        t = excedance_triangle(Family.PAD, 5)
        assert t.csv_lines() == ["n,k,value", "4,2,1", "5,2,1", "5,3,1"]


class TestConvolution:
    def test_values(self):
        assert pad_excedance_by_convolution(9, 4) == 169
        assert pad_excedance_by_convolution(4, 2) == 1
        assert pad_excedance_by_convolution(10, 5) == 884
        assert pad_excedance_parity_by_convolution(8, 3) == (8, 6)

    def test_reflected_branch(self):
        assert pad_excedance_by_convolution(9, 5) == pad_excedance_by_convolution(9, 4)
        assert pad_excedance_by_convolution(10, 7) == pad_excedance_by_convolution(10, 3)

    def test_range_validation(self):
        with pytest.raises(IndexOutOfRange):
            pad_excedance_by_convolution(4, 1)
        with pytest.raises(IndexOutOfRange):
            pad_excedance_by_convolution(3, 2)

    def test_against_triangle(self):
        t = excedance_triangle(Family.PAD, 9)
        for n in range(4, 10):
            for k in range(2, n - 1):
                assert pad_excedance_by_convolution(n, k) == t.value(n, k)


class TestSignedDiff:
    def test_values(self):
        assert signed_pad_excedance_diff(9, 4) == -3
        assert signed_pad_excedance_diff(10, 5) == 4
        assert signed_pad_excedance_diff(5, 2) == -1

    def test_max_variant_differs(self):
        assert signed_pad_excedance_diff_max_variant(5, 2) == -2

    def test_against_brute_force(self):
        even = excedance_triangle(Family.PAD_EVEN, 10)
        odd = excedance_triangle(Family.PAD_ODD, 10)
        for n in range(4, 11):
            for k in range(2, n - 1):
                assert even.value(n, k) - odd.value(n, k) == signed_pad_excedance_diff(n, k)

    def test_row_sums(self):
        for n in range(4, 13):
            total = sum(signed_pad_excedance_diff(n, k) for k in range(2, n - 1))
            assert total == pad_parity_difference(n)

    def test_triangle(self):
        t = signed_diff_triangle(6)
        assert t.value(5, 2) == -1 and t.value(6, 3) == 2


class TestExports:
    def test_bfile(self):
        assert sequence_bfile_lines([1, 0, 1], offset=0) == ["0 1", "1 0", "2 1"]

    def test_json(self):
        assert json.loads(sequence_json([1, 2, 3])) == [1, 2, 3]


def test_derangement_parity_excedance_identity():
    """Odd-minus-even derangement excedance rows are constant (-1)^n, n <= 9."""
    from papkit.sequences import derangement_excedance_parity_rows

    for n in range(2, 10):
        even, odd = derangement_excedance_parity_rows(n)
        expected = -1 if n % 2 else 1
        for k in range(1, n):
            assert odd.get(k, 0) - even.get(k, 0) == expected


def test_split_enumeration_oracle_to_12():
    """Closed-form counts match split-assembly censuses through n = 12."""
    from papkit.verify import split_census

    for n in (10, 11, 12):
        total, even, odd = split_census(Family.PAP, n)
        assert total == pap_count(n)
        assert (even, odd) == pap_parity_counts(n)
        total, even, odd = split_census(Family.PAD, n)
        assert total == pad_count(n)
        assert (even, odd) == pad_parity_counts(n)
