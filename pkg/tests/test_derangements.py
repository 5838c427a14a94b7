import itertools

import pytest

from papkit.derangements import (
    DerangementReduction,
    ReductionKind,
    attach_largest,
    chain_derangement,
    detach_largest,
    exceptional_derangements,
    expand_derangement,
    extraction_involution,
    extraction_point,
    is_chain,
    reduce_derangement,
)
from papkit.errors import (
    ExceptionalDerangement,
    ExceptionalInput,
    ForbiddenPair,
    MalformedImage,
    NotADerangement,
    OddSize,
    SizeTooSmall,
)
from papkit.perm import Permutation, parse_cycles, parse_word


def derangements(n):
    return [
        Permutation(w)
        for w in itertools.permutations(range(1, n + 1))
        if Permutation(w).is_derangement()
    ]


class TestChain:
    def test_small(self):
        assert chain_derangement(2).word == (2, 1)
        assert chain_derangement(4).word == (2, 1, 4, 3)
        assert chain_derangement(6).word == (2, 1, 4, 3, 6, 5)

    def test_odd_size_rejected(self):
        with pytest.raises(OddSize):
            chain_derangement(5)

    def test_sign(self):
        for n in (2, 4, 6, 8):
            assert chain_derangement(n).sign() == (-1) ** (n // 2)

    def test_is_chain(self):
        assert is_chain(parse_word("2 1 4 3"))
        assert not is_chain(parse_word("3 4 1 2"))
        assert not is_chain(parse_word("2 3 1"))


class TestReduction:
    def test_long_cycle_example(self):
        image = reduce_derangement(parse_cycles("(1 5 2 6)(3 4)"))
        assert image.index == 2
        assert image.kind is ReductionKind.LONG_CYCLE
        assert image.reduced == parse_cycles("(1 5 2)(3 4)")

    def test_transposition_example(self):
        image = reduce_derangement(parse_cycles("(1 3)(4 5)(2 6)"))
        assert image.index == 2
        assert image.kind is ReductionKind.TRANSPOSITION
        assert image.reduced == parse_cycles("(1 2)(3 4)")

    def test_smallest(self):
        image = reduce_derangement(parse_word("2 1"))
        assert image.index == 1
        assert image.kind is ReductionKind.TRANSPOSITION
        assert image.reduced.n == 0

    def test_errors(self):
        with pytest.raises(NotADerangement):
            reduce_derangement(parse_word("1 2"))
        with pytest.raises(SizeTooSmall):
            reduce_derangement(Permutation(()))

    def test_expansion_examples(self):
        long_img = DerangementReduction(2, ReductionKind.LONG_CYCLE, parse_cycles("(1 5 2)(3 4)"))
        assert expand_derangement(long_img) == parse_cycles("(1 5 2 6)(3 4)")
        trans_img = DerangementReduction(2, ReductionKind.TRANSPOSITION, parse_cycles("(1 2)(3 4)"))
        assert expand_derangement(trans_img, 6) == parse_cycles("(1 3)(4 5)(2 6)")
        tiny = DerangementReduction(1, ReductionKind.TRANSPOSITION, Permutation(()))
        assert expand_derangement(tiny) == parse_word("2 1")

    def test_expansion_errors(self):
        bad = DerangementReduction(3, ReductionKind.LONG_CYCLE, parse_word("2 1"))
        with pytest.raises(MalformedImage):
            expand_derangement(bad)
        not_derangement = DerangementReduction(1, ReductionKind.LONG_CYCLE, parse_word("1 3 2"))
        with pytest.raises(MalformedImage):
            expand_derangement(not_derangement)

    def test_exhaustive_properties(self):
        for n in range(2, 7):
            for d in derangements(n):
                image = reduce_derangement(d)
                assert image.reduced.sign() == -d.sign()
                assert expand_derangement(image) == d


class TestAttachDetach:
    def test_attach_examples(self):
        assert attach_largest(1, parse_cycles("(1 2)")) == parse_cycles("(1 3 2)")
        assert attach_largest(2, parse_cycles("(1 2)")) == parse_cycles("(1 2 3)")

    def test_forbidden_pair(self):
        with pytest.raises(ForbiddenPair):
            attach_largest(3, chain_derangement(2))
        with pytest.raises(ForbiddenPair):
            attach_largest(5, chain_derangement(4))

    def test_detach_examples(self):
        assert detach_largest(parse_cycles("(1 3 2)")) == (1, parse_cycles("(1 2)"))
        i, smaller = detach_largest(parse_cycles("(1 3)(2 4)"))
        assert i == 4 and smaller.n == 3
        assert attach_largest(i, smaller) == parse_cycles("(1 3)(2 4)")

    def test_chain_excluded(self):
        with pytest.raises(ExceptionalDerangement):
            detach_largest(chain_derangement(4))
        with pytest.raises(ExceptionalDerangement):
            detach_largest(chain_derangement(2))

    def test_round_trip_exhaustive(self):
        for n in range(2, 7):
            for d in derangements(n):
                if n % 2 == 0 and is_chain(d):
                    continue
                i, smaller = detach_largest(d)
                assert 1 <= i <= n
                assert attach_largest(i, smaller) == d


class TestExtractionPoint:
    @pytest.mark.parametrize(
        "cycles, expected",
        [
            ("(1 2 3 4)", 3),
            ("(1 2 4 3)", None),
            ("(1 3)(2 5 4)", 2),
            ("(1 2)(3 4)", 3),
            ("(1 2)", None),
        ],
    )
    def test_examples(self, cycles, expected):
        assert extraction_point(parse_cycles(cycles)) == expected

    def test_rejects_non_derangement(self):
        with pytest.raises(NotADerangement):
            extraction_point(parse_word("1 3 2"))


class TestExceptionalDerangements:
    def test_n4(self):
        expected = {"(1 2 4 3)", "(1 3 4 2)", "(1 4 3 2)"}
        assert {d.cycle_text() for d in exceptional_derangements(4)} == expected

    def test_n2(self):
        assert [d.word for d in exceptional_derangements(2)] == [(2, 1)]

    def test_matches_missing_extraction_points(self):
        for n in range(2, 7):
            via_formula = {d.word for d in exceptional_derangements(n)}
            via_scan = {
                d.word for d in derangements(n) if extraction_point(d) is None
            }
            assert via_formula == via_scan

    def test_census_at_8(self):
        """|X_8| = 7 and the signed census over all of D_8 equals -7."""
        assert len(exceptional_derangements(8)) == 7
        census = sum(d.sign() for d in derangements(8))
        assert census == -7

    def test_shared_sign(self):
        for n in range(2, 11):
            assert all(d.sign() == (-1) ** (n - 1) for d in exceptional_derangements(n))


class TestExtractionInvolution:
    def test_examples(self):
        assert extraction_involution(parse_cycles("(1 2 3 4)")) == parse_cycles("(1 2)(3 4)")
        assert extraction_involution(parse_cycles("(1 2)(3 4)")) == parse_cycles("(1 2 3 4)")

    def test_second_cycle_merge(self):
        assert extraction_involution(parse_cycles("(1 3)(2 5 4)")) == parse_cycles("(1 3 2 5 4)")

    def test_exceptional_rejected(self):
        with pytest.raises(ExceptionalInput):
            extraction_involution(parse_cycles("(1 2 4 3)"))

    def test_exhaustive_properties(self):
        for n in range(2, 7):
            exceptional = {d.word for d in exceptional_derangements(n)}
            for d in derangements(n):
                if d.word in exceptional:
                    continue
                image = extraction_involution(d)
                assert image.word != d.word
                assert image.sign() == -d.sign()
                assert image.is_derangement()
                assert extraction_involution(image) == d
