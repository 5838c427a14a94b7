"""The splitting bijection between PAPs and pairs of smaller permutations.

A parity alternating permutation starting odd carries its odd values on odd
positions and its even values on even positions, so it decomposes into two
independent permutations: the odd part of size ceil(n/2) (odd values rescaled
via x -> (x+1)/2) and the even part of size floor(n/2) (even values rescaled
via x -> x/2).  Restricted to derangements this sends a PAD to a pair of
derangements.  Both directions are implemented and round-trip exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAPad, NotAPap, SizeMismatch
from .perm import CycleDecomposition, Permutation, Word


@dataclass(frozen=True)
class SplitPair:
    """Image of a PAP under the splitting bijection; ``n`` is the original size."""

    odd_part: Permutation
    even_part: Permutation
    n: int

    def __post_init__(self):
        if self.odd_part.n != (self.n + 1) // 2 or self.even_part.n != self.n // 2:
            raise SizeMismatch(
                f"part sizes ({self.odd_part.n}, {self.even_part.n}) "
                f"inconsistent with n={self.n}"
            )

    def __str__(self) -> str:
        return f"({self.odd_part} | {self.even_part})"


def split_words(word: Word) -> tuple[Word, Word]:
    """Split a PAP word into (odd part word, even part word) without validation."""
    odd = tuple((x + 1) // 2 for x in word[0::2])
    even = tuple(x // 2 for x in word[1::2])
    return odd, even


def join_words(odd: Word, even: Word) -> Word:
    """Interleave rescaled parts back into a PAP word; sizes must differ by 0 or 1."""
    if len(odd) - len(even) not in (0, 1):
        raise SizeMismatch(f"cannot interleave parts of sizes {len(odd)}, {len(even)}")
    word = [0] * (len(odd) + len(even))
    word[0::2] = [2 * x - 1 for x in odd]
    word[1::2] = [2 * x for x in even]
    return tuple(word)


def split_pap(p: Permutation) -> SplitPair:
    """Split a PAP into its odd and even parts.

    >>> pair = split_pap(Permutation((5, 2, 1, 4, 3, 6, 7)))
    >>> str(pair)
    '(3 1 2 4 | 1 2 3)'
    """
    if not p.is_pap():
        raise NotAPap(f"{p} is not a parity alternating permutation starting odd")
    odd, even = split_words(p.word)
    return SplitPair(Permutation(odd), Permutation(even), p.n)


def join_pap(pair: SplitPair) -> Permutation:
    """Inverse of :func:`split_pap`; always produces a PAP."""
    return Permutation(join_words(pair.odd_part.word, pair.even_part.word))


def split_pad(p: Permutation) -> SplitPair:
    """Split restricted to PADs; both parts of the result are derangements."""
    if not p.is_pad():
        raise NotAPad(f"{p} is not a parity alternating derangement")
    return split_pap(p)


def split_cycle_view(p: Permutation) -> tuple[CycleDecomposition, CycleDecomposition]:
    """The cycle-form view of the split: relabel single-parity cycles directly.

    Every cycle of a PAP consists of values of one parity; relabelling the
    odd-value cycles by x -> (x+1)/2 and the even-value cycles by x -> x/2
    yields the cycle forms of the two parts.  This is a derived view used to
    cross-check :func:`split_pap`, not a second code path.
    """
    if not p.is_pap():
        raise NotAPap(f"{p} is not a parity alternating permutation starting odd")
    odd_cycles = []
    even_cycles = []
    for cycle in p.cycles():
        if cycle[0] % 2 == 1:
            odd_cycles.append(tuple((x + 1) // 2 for x in cycle))
        else:
            even_cycles.append(tuple(x // 2 for x in cycle))
    return CycleDecomposition(tuple(odd_cycles)), CycleDecomposition(tuple(even_cycles))
