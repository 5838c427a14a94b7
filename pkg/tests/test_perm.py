import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from papkit.errors import DuplicateElement, ElementOutOfRange, NotABijection
from papkit.perm import (
    CycleDecomposition,
    Parity,
    Permutation,
    cycles_of_word,
    parse_cycles,
    parse_permutation,
    parse_word,
    sign_of_word,
)


def words(max_n=8):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.permutations(tuple(range(1, n + 1)))
    )


class TestParsing:
    def test_word(self):
        assert parse_word("3 4 1 2").word == (3, 4, 1, 2)
        assert parse_word("3,4,1,2").word == (3, 4, 1, 2)
        assert parse_word("4 2 1 7 8 6 3 5").n == 8

    def test_not_a_bijection(self):
        with pytest.raises(NotABijection):
            parse_word("1 1 2")
        with pytest.raises(NotABijection):
            parse_word("1 2 4")

    def test_cycles(self):
        p = parse_cycles("(1 3)(2 4)")
        assert p.word == (3, 4, 1, 2)
        assert parse_cycles("(1 5 2)(3 4)").word == (5, 1, 4, 3, 2)
        assert parse_cycles("()").n == 0

    def test_cycles_with_explicit_size(self):
        assert parse_cycles("(1 2)", n=4).word == (2, 1, 3, 4)

    def test_autodetect(self):
        assert parse_permutation("(1 3)(2 4)") == parse_permutation("3 4 1 2")


class TestCycles:
    def test_worked_example(self):
        p = parse_word("4 2 1 7 8 6 3 5")
        assert p.cycle_text() == "(1 4 7 3)(2)(5 8)(6)"

    def test_identity(self):
        assert Permutation.identity(3).cycle_text() == "(1)(2)(3)"

    def test_two_transpositions(self):
        assert cycles_of_word((3, 4, 1, 2)) == ((1, 3), (2, 4))

    def test_from_cycles_fills_fixed_points(self):
        assert Permutation.from_cycles([], 3) == Permutation.identity(3)
        assert Permutation.from_cycles([(1, 5, 2, 6), (3, 4)], 6).word == (5, 6, 4, 3, 2, 1)

    def test_from_cycles_errors(self):
        with pytest.raises(ElementOutOfRange):
            Permutation.from_cycles([(1, 5)], 4)
        with pytest.raises(DuplicateElement):
            Permutation.from_cycles([(1, 2), (2, 3)], 3)

    def test_canonical_form(self):
        decomposition = CycleDecomposition(((8, 5), (4, 7, 3, 1), (2,), (6,)))
        assert str(decomposition) == "(1 4 7 3)(2)(5 8)(6)"

    @given(words())
    def test_round_trip(self, word):
        p = Permutation(word)
        assert p.cycles().to_permutation(p.n) == p


class TestSign:
    def test_worked_example(self):
        assert parse_word("4 2 1 7 8 6 3 5").sign() == 1
        assert parse_word("4 2 1 7 8 6 3 5").parity() is Parity.EVEN

    def test_identity_even(self):
        for n in range(5):
            assert Permutation.identity(n).sign() == 1

    def test_single_transposition_odd(self):
        assert parse_word("3 2 1").sign() == -1

    @given(words())
    def test_matches_inversion_parity(self, word):
        inversions = sum(
            1
            for i in range(len(word))
            for j in range(i + 1, len(word))
            if word[i] > word[j]
        )
        assert sign_of_word(word) == (-1 if inversions % 2 else 1)


class TestPredicates:
    @pytest.mark.parametrize(
        "text, expected",
        [("3 4 1 2", True), ("1 2 3 4", False), ("5 2 1 4 3 6 7", False)],
    )
    def test_is_derangement(self, text, expected):
        assert parse_word(text).is_derangement() is expected

    @pytest.mark.parametrize(
        "text, expected",
        [("5 2 1 4 3 6 7", True), ("2 1", False), ("1 2 3 4", True)],
    )
    def test_is_pap(self, text, expected):
        assert parse_word(text).is_pap() is expected

    @pytest.mark.parametrize(
        "text, expected",
        [("3 4 1 2", True), ("5 2 1 4 3 6 7", False), ("1 2", False)],
    )
    def test_is_pad(self, text, expected):
        assert parse_word(text).is_pad() is expected

    def test_empty_is_everything(self):
        empty = Permutation(())
        assert empty.is_pap() and empty.is_pad() and empty.is_derangement()
        assert empty.sign() == 1


class TestExcedance:
    @pytest.mark.parametrize(
        "text, expected",
        [("1 2 3", 0), ("3 4 1 2", 2), ("5 6 4 3 2 1", 3)],
    )
    def test_examples(self, text, expected):
        assert parse_word(text).excedance_count() == expected


class TestInverse:
    def test_examples(self):
        assert parse_word("3 4 1 2").inverse() == parse_word("3 4 1 2")
        assert Permutation.identity(4).inverse() == Permutation.identity(4)
        assert parse_word("2 3 1").inverse() == parse_word("3 1 2")

    @given(words())
    def test_properties(self, word):
        p = Permutation(word)
        inv = p.inverse()
        assert inv.inverse() == p
        assert (p * inv) == Permutation.identity(p.n)
        assert inv.sign() == p.sign()
        assert inv.excedance_count() == p.n - p.fixed_point_count() - p.excedance_count()

    def test_pad_inverse_excedances_reflect(self):
        # inversion sends k excedances to n-k on derangements
        for word in itertools.permutations(range(1, 6)):
            p = Permutation(word)
            if p.is_derangement():
                assert p.inverse().excedance_count() == p.n - p.excedance_count()


def test_parity_enum():
    assert Parity.EVEN.sign == 1
    assert Parity.ODD.sign == -1
    assert Parity.EVEN.flipped() is Parity.ODD
    assert str(Parity.from_sign(-1)) == "odd"
