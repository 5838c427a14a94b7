"""Derangement bijections: reduction by the largest letter, insertion with an
excluded chain, extraction points and the extraction-point involution.

Three constructions live here.

``reduce_derangement`` / ``expand_derangement``: a derangement of [n] maps to a
pair (i, smaller derangement) where i is the preimage of n.  If n sits in a
cycle of length > 2 the smaller derangement has size n-1 (delete n from its
cycle); if n sits in a transposition (i n) the smaller one has size n-2 (delete
the transposition, relabel values above i down by one).  Counting the two
branches gives d_n = (n-1)(d_{n-1} + d_{n-2}); the reduction always flips the
sign.

``attach_largest`` / ``detach_largest``: a bijection between pairs
(i in [n], derangement of [n-1]) and derangements of [n], except that for even
n the chain derangement (1 2)(3 4)...(n-1 n) is unreachable and for odd n the
pair (n, chain of size n-1) is excluded.  For i <= n-1 the new letter n is
inserted right after i in i's cycle; for i = n the pair is rebuilt as a
transposition (j n) around the detachment of the smaller derangement, which
recurses on strictly smaller sizes.  Counting gives d_n = n d_{n-1} + (-1)^n.

``extraction_point`` / ``extraction_involution``: in canonical cycle form with
first cycle (1 a2 ...), the extraction point is the smallest candidate value
e >= 2 (e != a2) such that the first cycle does not end with {2..e}\\{a2} in
decreasing order.  Exactly n-1 derangements lack one (the exceptional ones,
all single n-cycles of sign (-1)**(n-1)); on the rest, cutting the first cycle
at e or merging the second cycle back before the forced decreasing suffix is a
fixed-point-free involution that flips the sign.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    ElementOutOfRange,
    ExceptionalDerangement,
    ExceptionalInput,
    ForbiddenPair,
    MalformedImage,
    NotADerangement,
    OddSize,
    SizeTooSmall,
)
from .perm import Permutation, Word


class ReductionKind(enum.Enum):
    LONG_CYCLE = "long"
    TRANSPOSITION = "trans"


@dataclass(frozen=True)
class DerangementReduction:
    """Image (i, kind, reduced) of a derangement under largest-letter reduction."""

    index: int
    kind: ReductionKind
    reduced: Permutation

    @property
    def n(self) -> int:
        """Size of the derangement this image expands back to."""
        return self.reduced.n + (1 if self.kind is ReductionKind.LONG_CYCLE else 2)

    def __str__(self) -> str:
        return f"({self.index}, {self.kind.value}, {self.reduced.cycle_text()})"


def chain_derangement(n: int) -> Permutation:
    """(1 2)(3 4)...(n-1 n); defined for even n >= 2, sign (-1)**(n/2)."""
    if n < 2 or n % 2:
        raise OddSize(f"chain derangement needs even n >= 2, got {n}")
    word = []
    for i in range(1, n + 1, 2):
        word += [i + 1, i]
    return Permutation(tuple(word))


def is_chain(p: Permutation) -> bool:
    n = p.n
    return n >= 2 and n % 2 == 0 and all(
        p.word[i] == i + 2 and p.word[i + 1] == i + 1 for i in range(0, n, 2)
    )


def _require_derangement(d: Permutation) -> None:
    if not d.is_derangement():
        raise NotADerangement(f"{d} has a fixed point")


def _relabel_down(word: Word, i: int) -> Word:
    """Remove positions/values {i, n} from a word fixing both, shifting values > i down."""
    out = []
    for pos, x in enumerate(word, start=1):
        if pos in (i, len(word)):
            continue
        out.append(x - 1 if x > i else x)
    return tuple(out)


def _relabel_up(word: Word, i: int, n: int) -> Word:
    """Inverse of :func:`_relabel_down`: re-insert i and n as the transposition (i n)."""
    lifted = {}
    positions = [p for p in range(1, n + 1) if p not in (i, n)]
    for pos, x in zip(positions, word):
        lifted[pos] = x + 1 if x >= i else x
    lifted[i] = n
    lifted[n] = i
    return tuple(lifted[p] for p in range(1, n + 1))


def reduce_derangement(d: Permutation) -> DerangementReduction:
    """Map a derangement of [n] (n >= 2) to (i, kind, smaller derangement).

    >>> from .perm import parse_cycles
    >>> str(reduce_derangement(parse_cycles("(1 5 2 6)(3 4)")))
    '(2, long, (1 5 2)(3 4))'
    """
    _require_derangement(d)
    n = d.n
    if n < 2:
        raise SizeTooSmall(f"reduction needs n >= 2, got {n}")
    i = d.word.index(n) + 1
    if d.word[n - 1] == i:
        return DerangementReduction(
            i, ReductionKind.TRANSPOSITION, Permutation(_relabel_down(d.word, i))
        )
    reduced = list(d.word[:-1])
    reduced[i - 1] = d.word[n - 1]
    return DerangementReduction(i, ReductionKind.LONG_CYCLE, Permutation(tuple(reduced)))


def expand_derangement(image: DerangementReduction, n: int | None = None) -> Permutation:
    """Inverse of :func:`reduce_derangement`; n is inferable from the image shape."""
    if n is None:
        n = image.n
    elif n != image.n:
        raise MalformedImage(f"image shape implies n={image.n}, got n={n}")
    if not image.reduced.is_derangement():
        raise MalformedImage(f"reduced permutation {image.reduced} has a fixed point")
    i = image.index
    if not 1 <= i <= n - 1:
        raise MalformedImage(f"index {i} outside [1, {n - 1}]")
    if image.kind is ReductionKind.LONG_CYCLE:
        word = list(image.reduced.word) + [image.reduced.word[i - 1]]
        word[i - 1] = n
        return Permutation(tuple(word))
    return Permutation(_relabel_up(image.reduced.word, i, n))


def attach_largest(i: int, d: Permutation) -> Permutation:
    """Insert the new largest letter n = d.n + 1 into a derangement, steered by i in [n].

    For i <= n-1 the letter lands right after i in i's cycle.  For i = n the
    smaller derangement is detached once and rebuilt around a transposition
    (j n), which produces exactly the derangements with n in a 2-cycle.  The
    pair (n, chain) is forbidden for odd n; the chain of [n] is never produced.
    """
    _require_derangement(d)
    n = d.n + 1
    if not 1 <= i <= n:
        raise ElementOutOfRange(f"index {i} outside [1, {n}]")
    if i < n:
        word = list(d.word) + [d.word[i - 1]]
        word[i - 1] = n
        return Permutation(tuple(word))
    if n % 2 == 1 and is_chain(d):
        raise ForbiddenPair(f"({n}, chain of [{n - 1}]) is excluded for odd n")
    j, smaller = detach_largest(d)
    return expand_derangement(
        DerangementReduction(j, ReductionKind.TRANSPOSITION, smaller), n
    )


def detach_largest(d: Permutation) -> tuple[int, Permutation]:
    """Inverse of :func:`attach_largest`: strip n off a derangement of [n].

    Undefined on the chain derangement for even n (raises ExceptionalDerangement).
    """
    _require_derangement(d)
    n = d.n
    if n < 2:
        raise SizeTooSmall(f"detachment needs n >= 2, got {n}")
    if n % 2 == 0 and is_chain(d):
        raise ExceptionalDerangement(f"the chain of [{n}] is excluded for even n")
    image = reduce_derangement(d)
    if image.kind is ReductionKind.LONG_CYCLE:
        return image.index, image.reduced
    return n, attach_largest(image.index, image.reduced)


def extraction_point(d: Permutation) -> int | None:
    """Smallest eligible entry witnessing a break in the first cycle's forced suffix.

    Returns None exactly on the exceptional derangements.  When it exists, the
    extraction point always lies in the first or second canonical cycle.
    """
    _require_derangement(d)
    n = d.n
    if n < 2:
        raise SizeTooSmall(f"extraction points need n >= 2, got {n}")
    first = d.cycles().cycles[0]
    a2 = first[1]
    for e in range(2, n + 1):
        if e == a2:
            continue
        forced = sorted((x for x in range(2, e + 1) if x != a2), reverse=True)
        if list(first[len(first) - len(forced):]) != forced:
            in_first = e in first
            if not in_first:
                second = d.cycles().cycles[1]
                assert second[0] == e, "extraction point must lead the second cycle"
            return e
    return None


def exceptional_derangements(n: int) -> tuple[Permutation, ...]:
    """The n-1 derangements of [n] without an extraction point, n >= 2.

    Each is the single n-cycle (1 i n n-1 ... i+1 i-1 ... 2) for i in [2, n];
    all share sign (-1)**(n-1).
    """
    if n < 2:
        return ()
    out = []
    for i in range(2, n + 1):
        cycle = [1, i] + list(range(n, i, -1)) + list(range(i - 1, 1, -1))
        out.append(Permutation.from_cycles([cycle], n))
    return tuple(out)


def extraction_involution(d: Permutation) -> Permutation:
    """Split the first cycle at the extraction point, or merge the second back.

    With first cycle (1 a2 X e Y Z) and e extracted there, the image is
    (1 a2 X Z)(e Y); when e leads the second cycle (e Y), that cycle is spliced
    back in front of the forced suffix Z.  Fixed-point-free and sign-reversing
    on derangements that have an extraction point.
    """
    e = extraction_point(d)
    if e is None:
        raise ExceptionalInput(f"{d} has no extraction point")
    cycles = d.cycles().cycles
    first = cycles[0]
    a2 = first[1]
    forced = sorted((x for x in range(2, e) if x != a2), reverse=True)
    z_len = len(forced)
    assert list(first[len(first) - z_len:]) == forced, "first cycle must end with the forced suffix"
    if e in first:
        cut = first.index(e)
        new_cycles = [
            first[:cut] + first[len(first) - z_len:],
            first[cut:len(first) - z_len],
        ]
        rest = cycles[1:]
    else:
        second = cycles[1]
        new_cycles = [first[:len(first) - z_len] + second + first[len(first) - z_len:]]
        rest = cycles[2:]
    return Permutation.from_cycles(list(new_cycles) + list(rest), d.n)
