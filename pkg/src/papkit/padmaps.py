"""Bijections at the PAP/PAD level, built on the split and the derangement maps.

``pap_shrink``/``pap_grow`` delete or restore the largest relevant value (the
top of the even part for even n, of the odd part for odd n), proving
p_n = ceil(n/2) * p_{n-1} by counting.  ``pap_shrink_parity`` is the variant
whose two branches track sign: deleting a non-fixed top flips the sign and
records its position, deleting a fixed top preserves the sign and records
nothing.

``parity_swap`` exchanges the first and last odd value of a PAP in one-line
form (positions 1 and n for odd n, 1 and n-1 for even n), an involution that
flips the sign and witnesses p_n^even = p_n^odd for n >= 3.

``pad_reduce``/``pad_expand`` apply largest-letter reduction to the split
parts of a PAD of size n >= 4, landing in a PAD of size n-1 when the first
targeted top sits in a long cycle and otherwise, after a second reduction, in
a PAD of size n-3 or n-4.

``pad_step_down``/``pad_step_up`` detach or attach one letter of one part
(the even part for even n, the odd part for odd n), a bijection onto
(index, PAD of size n-1) away from the chain exclusions.

``exceptional_pads`` joins pairs of exceptional derangements;
``pad_extraction_involution`` applies the extraction-point involution to the
odd part for odd n and to the even part for even n, exactly the printed
fixed-side rule.  For n >= 8 that rule is partial: some PADs outside the
exceptional set have an exceptional targeted part while the other part is not;
these raise ExtractionMissing and are surfaced by the verification report.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .derangements import (
    DerangementReduction,
    ReductionKind,
    attach_largest,
    detach_largest,
    exceptional_derangements,
    expand_derangement,
    extraction_involution,
    extraction_point,
    reduce_derangement,
)
from .errors import (
    ExceptionalDerangement,
    ExceptionalPad,
    ExtractionMissing,
    MalformedImage,
    NotAPap,
    NotAPad,
    SizeTooSmall,
)
from .perm import Permutation, Word
from .split import join_words, split_pad, split_words


@dataclass(frozen=True)
class PadReduction:
    """Image (i, tail) or (i, j, tail) of a PAD under split-wise reduction."""

    index: int
    inner_index: int | None
    tail: Permutation

    def __str__(self) -> str:
        if self.inner_index is None:
            return f"({self.index} | {self.tail})"
        return f"({self.index}, {self.inner_index} | {self.tail})"


def _delete_max(word: Word) -> tuple[int, Word]:
    """Remove the largest value n from a word, recording its position."""
    n = len(word)
    i = word.index(n) + 1
    if i == n:
        return i, word[:-1]
    out = list(word[:-1])
    out[i - 1] = word[n - 1]
    return i, tuple(out)


def _insert_max(i: int, word: Word) -> Word:
    """Inverse of :func:`_delete_max`: place the new largest value at position i."""
    n = len(word) + 1
    if not 1 <= i <= n:
        raise MalformedImage(f"index {i} outside [1, {n}]")
    if i == n:
        return word + (n,)
    out = list(word) + [word[i - 1]]
    out[i - 1] = n
    return tuple(out)


def _require_pap(p: Permutation) -> None:
    if not p.is_pap():
        raise NotAPap(f"{p} is not a parity alternating permutation starting odd")


def _require_pad(p: Permutation) -> None:
    if not p.is_pad():
        raise NotAPad(f"{p} is not a parity alternating derangement")


def pap_shrink(p: Permutation) -> tuple[int, Permutation]:
    """Delete the top of the size-governing part; i ranges over [ceil(n/2)].

    >>> pap_shrink(Permutation((1, 2, 3, 4)))
    (2, Permutation(word=(1, 2, 3)))
    """
    _require_pap(p)
    if p.n < 1:
        raise SizeTooSmall("needs n >= 1")
    odd, even = split_words(p.word)
    if p.n % 2 == 0:
        i, even = _delete_max(even)
    else:
        i, odd = _delete_max(odd)
    return i, Permutation(join_words(odd, even))


def pap_grow(i: int, p: Permutation, n: int | None = None) -> Permutation:
    """Inverse of :func:`pap_shrink`; the result size is p.n + 1."""
    _require_pap(p)
    if n is None:
        n = p.n + 1
    elif n != p.n + 1:
        raise MalformedImage(f"result size must be {p.n + 1}, got {n}")
    odd, even = split_words(p.word)
    if n % 2 == 0:
        even = _insert_max(i, even)
    else:
        odd = _insert_max(i, odd)
    return Permutation(join_words(odd, even))


def pap_shrink_parity(p: Permutation) -> Union[tuple[int, Permutation], Permutation]:
    """Sign-tracking shrink: (i, smaller) flips the sign, bare smaller keeps it.

    The bare branch fires exactly when the targeted top is a fixed point of its
    part (so i would equal the part size); then only the 1-cycle is dropped.
    """
    _require_pap(p)
    if p.n < 1:
        raise SizeTooSmall("needs n >= 1")
    odd, even = split_words(p.word)
    if p.n % 2 == 0:
        i, even = _delete_max(even)
        top = len(even) + 1
    else:
        i, odd = _delete_max(odd)
        top = len(odd) + 1
    smaller = Permutation(join_words(odd, even))
    if i == top:
        return smaller
    return i, smaller


def pap_grow_parity(
    image: Union[tuple[int, Permutation], Permutation], n: int | None = None
) -> Permutation:
    """Inverse of :func:`pap_shrink_parity`."""
    if isinstance(image, Permutation):
        # Bare branch: the restored top is a fixed point at the part's last slot.
        size = image.n + 1
        i = (size + 1) // 2 if size % 2 else size // 2
        return pap_grow(i, image, n)
    i, smaller = image
    return pap_grow(i, smaller, n)


def parity_swap(p: Permutation) -> Permutation:
    """Swap the first and last odd value in one-line form; sign-flipping involution."""
    _require_pap(p)
    n = p.n
    if n < 3:
        raise SizeTooSmall(f"parity swap needs n >= 3, got {n}")
    j = n if n % 2 else n - 1
    word = list(p.word)
    word[0], word[j - 1] = word[j - 1], word[0]
    return Permutation(tuple(word))


def pad_reduce(d: Permutation) -> PadReduction:
    """Reduce a PAD of size n >= 4 through its split parts.

    The outer index i lies in [floor((n-1)/2)]; when present, the inner index j
    lies in [n - 2 - floor((n-1)/2)] and the tail has size n-3 or n-4 according
    to the kind of the second reduction.
    """
    _require_pad(d)
    n = d.n
    if n < 4:
        raise SizeTooSmall(f"reduction needs n >= 4, got {n}")
    pair = split_pad(d)
    d1, d2 = pair.odd_part, pair.even_part
    if n % 2:
        r1 = reduce_derangement(d1)
        if r1.kind is ReductionKind.LONG_CYCLE:
            return PadReduction(r1.index, None, Permutation(join_words(r1.reduced.word, d2.word)))
        r2 = reduce_derangement(d2)
        return PadReduction(
            r1.index, r2.index, Permutation(join_words(r1.reduced.word, r2.reduced.word))
        )
    r2 = reduce_derangement(d2)
    if r2.kind is ReductionKind.LONG_CYCLE:
        return PadReduction(r2.index, None, Permutation(join_words(d1.word, r2.reduced.word)))
    r1 = reduce_derangement(d1)
    return PadReduction(
        r1.index, r2.index, Permutation(join_words(r1.reduced.word, r2.reduced.word))
    )


def _expand_part(i: int, kind: ReductionKind, reduced: Permutation) -> Permutation:
    return expand_derangement(DerangementReduction(i, kind, reduced))


def pad_expand(image: PadReduction, n: int) -> Permutation:
    """Inverse of :func:`pad_reduce` for the given target size n."""
    tail = image.tail
    if not tail.is_pad():
        raise MalformedImage(f"tail {tail} is not a parity alternating derangement")
    s = (n - 1) // 2
    if not 1 <= image.index <= s:
        raise MalformedImage(f"index {image.index} outside [1, {s}]")
    t = tail.n
    odd_w, even_w = split_words(tail.word)
    a, b = Permutation(odd_w), Permutation(even_w)
    if image.inner_index is None:
        if t != n - 1:
            raise MalformedImage(f"tail size {t} must be {n - 1}")
        if n % 2:
            d1, d2 = _expand_part(image.index, ReductionKind.LONG_CYCLE, a), b
        else:
            d1, d2 = a, _expand_part(image.index, ReductionKind.LONG_CYCLE, b)
    else:
        if not 1 <= image.inner_index <= n - 2 - s:
            raise MalformedImage(f"inner index {image.inner_index} outside [1, {n - 2 - s}]")
        if t == n - 3:
            first_kind = ReductionKind.TRANSPOSITION if n % 2 else ReductionKind.LONG_CYCLE
            second_kind = ReductionKind.LONG_CYCLE if n % 2 else ReductionKind.TRANSPOSITION
        elif t == n - 4:
            first_kind = second_kind = ReductionKind.TRANSPOSITION
        else:
            raise MalformedImage(f"tail size {t} must be one of {n - 3}, {n - 4}")
        d1 = _expand_part(image.index, first_kind, a)
        d2 = _expand_part(image.inner_index, second_kind, b)
    result = Permutation(join_words(d1.word, d2.word))
    if result.n != n:
        raise MalformedImage(f"image shape produces size {result.n}, not {n}")
    return result


def pad_step_down(d: Permutation) -> tuple[int, Permutation]:
    """Detach one letter of one part of a PAD: the even part for even n, the odd
    part for odd n.  Lands in (i in [ceil(n/2)], PAD of size n-1); undefined when
    the acted-on part is the chain derangement (of even size)."""
    _require_pad(d)
    n = d.n
    if n < 4:
        raise SizeTooSmall(f"step-down needs n >= 4, got {n}")
    pair = split_pad(d)
    try:
        if n % 2 == 0:
            i, part = detach_largest(pair.even_part)
            return i, Permutation(join_words(pair.odd_part.word, part.word))
        i, part = detach_largest(pair.odd_part)
        return i, Permutation(join_words(part.word, pair.even_part.word))
    except ExceptionalDerangement as exc:
        raise ExceptionalPad(f"{d}: acted-on part is the chain derangement") from exc


def pad_step_up(i: int, pad: Permutation, n: int | None = None) -> Permutation:
    """Inverse of :func:`pad_step_down`; the result size is pad.n + 1."""
    _require_pad(pad)
    if n is None:
        n = pad.n + 1
    elif n != pad.n + 1:
        raise MalformedImage(f"result size must be {pad.n + 1}, got {n}")
    odd_w, even_w = split_words(pad.word)
    if n % 2 == 0:
        part = attach_largest(i, Permutation(even_w))
        return Permutation(join_words(odd_w, part.word))
    part = attach_largest(i, Permutation(odd_w))
    return Permutation(join_words(part.word, even_w))


def exceptional_pads(n: int) -> tuple[Permutation, ...]:
    """Joins of pairs of exceptional derangements; ceil((n-2)/2)*floor((n-2)/2)
    of them for n >= 4, all of sign (-1)**n; empty below n = 4."""
    if n < 4:
        return ()
    odd_exc = exceptional_derangements((n + 1) // 2)
    even_exc = exceptional_derangements(n // 2)
    return tuple(
        Permutation(join_words(a.word, b.word)) for a in odd_exc for b in even_exc
    )


def is_exceptional_pad(d: Permutation) -> bool:
    """True iff both split parts lack an extraction point."""
    _require_pad(d)
    if d.n < 4:
        return False
    pair = split_pad(d)
    return (
        extraction_point(pair.odd_part) is None
        and extraction_point(pair.even_part) is None
    )


def pad_extraction_involution(d: Permutation) -> Permutation:
    """Apply the extraction-point involution to the fixed side of the split:
    the odd part for odd n, the even part for even n.

    Raises ExceptionalPad when both parts are exceptional (the input belongs to
    the exceptional set) and ExtractionMissing when only the targeted part is
    (the documented gap of the fixed-side rule, nonempty from n = 8 on).
    """
    _require_pad(d)
    n = d.n
    if n < 4:
        raise SizeTooSmall(f"needs n >= 4, got {n}")
    pair = split_pad(d)
    target, other = (
        (pair.odd_part, pair.even_part) if n % 2 else (pair.even_part, pair.odd_part)
    )
    if extraction_point(target) is None:
        if extraction_point(other) is None:
            raise ExceptionalPad(f"{d} is an exceptional parity alternating derangement")
        raise ExtractionMissing(
            f"{d}: the fixed-side rule targets a part with no extraction point"
        )
    flipped = extraction_involution(target)
    if n % 2:
        return Permutation(join_words(flipped.word, pair.even_part.word))
    return Permutation(join_words(pair.odd_part.word, flipped.word))
