"""Permutations of [n] = {1, ..., n} in one-line form.

A permutation is stored as the word (w(1), ..., w(n)) of 1-based images; the
empty word is the legal permutation of the empty set.  Free functions operate
on plain tuples (``Word``) so that enumeration loops can stay allocation-light;
the :class:`Permutation` dataclass wraps a validated word and exposes the same
operations as methods.

Text conventions: one-line form is whitespace- or comma-separated images, e.g.
``"3 4 1 2"``; cycle form is ``"(1 3)(2 4)"`` with fixed points written as
1-cycles and ``"()"`` denoting the empty permutation.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateElement,
    ElementOutOfRange,
    NotABijection,
)

Word = tuple[int, ...]
Cycle = tuple[int, ...]


class Parity(enum.Enum):
    EVEN = 1
    ODD = -1

    @property
    def sign(self) -> int:
        return self.value

    def flipped(self) -> "Parity":
        return Parity.ODD if self is Parity.EVEN else Parity.EVEN

    @staticmethod
    def from_sign(sign: int) -> "Parity":
        return Parity.EVEN if sign > 0 else Parity.ODD

    def __str__(self) -> str:
        return "even" if self is Parity.EVEN else "odd"


def check_word(word: Sequence[int]) -> Word:
    """Return ``word`` as a tuple, raising NotABijection unless it rearranges 1..n."""
    w = tuple(word)
    n = len(w)
    seen = [False] * n
    for x in w:
        if not isinstance(x, int) or x < 1 or x > n or seen[x - 1]:
            raise NotABijection(f"{w!r} is not a rearrangement of 1..{n}")
        seen[x - 1] = True
    return w


def cycles_of_word(word: Sequence[int]) -> tuple[Cycle, ...]:
    """Disjoint cycles in canonical form: min first in each cycle, cycles by ascending min.

    Fixed points are kept as 1-cycles.

    >>> cycles_of_word((4, 2, 1, 7, 8, 6, 3, 5))
    ((1, 4, 7, 3), (2,), (5, 8), (6,))
    """
    n = len(word)
    visited = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if visited[start]:
            continue
        cycle = []
        x = start
        while not visited[x]:
            visited[x] = True
            cycle.append(x)
            x = word[x - 1]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def word_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Word:
    """One-line word from disjoint cycles; elements of [n] not mentioned become fixed points."""
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for cycle in cycles:
        for x in cycle:
            if x < 1 or x > n:
                raise ElementOutOfRange(f"element {x} outside [1, {n}]")
            if x in seen:
                raise DuplicateElement(f"element {x} appears in two cycles")
            seen.add(x)
        for pos, x in enumerate(cycle):
            images[x - 1] = cycle[(pos + 1) % len(cycle)]
    return tuple(images)


def sign_of_word(word: Sequence[int]) -> int:
    """(-1)**(n - c) where c counts cycles, fixed points included; +1 for the empty word."""
    return -1 if (len(word) - len(cycles_of_word(word))) % 2 else 1


def is_derangement_word(word: Sequence[int]) -> bool:
    return all(x != i for i, x in enumerate(word, start=1))


def is_pap_word(word: Sequence[int]) -> bool:
    """Odd entries at odd positions and even entries at even positions."""
    return all((x - i) % 2 == 0 for i, x in enumerate(word, start=1))


def is_pad_word(word: Sequence[int]) -> bool:
    return is_pap_word(word) and is_derangement_word(word)


def excedance_count_word(word: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(word, start=1) if x > i)


def inverse_word(word: Sequence[int]) -> Word:
    inv = [0] * len(word)
    for i, x in enumerate(word, start=1):
        inv[x - 1] = i
    return tuple(inv)


def compose_words(outer: Sequence[int], inner: Sequence[int]) -> Word:
    """Word of outer∘inner (apply inner first)."""
    if len(outer) != len(inner):
        raise NotABijection("cannot compose permutations of different sizes")
    return tuple(outer[x - 1] for x in inner)


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical disjoint-cycle form: each cycle rotated min-first, cycles sorted by min."""

    cycles: tuple[Cycle, ...]

    def __post_init__(self):
        seen: set[int] = set()
        normalized = []
        for cycle in self.cycles:
            cycle = tuple(cycle)
            if not cycle:
                continue
            for x in cycle:
                if not isinstance(x, int) or x < 1:
                    raise ElementOutOfRange(f"cycle element {x!r} is not a positive integer")
                if x in seen:
                    raise DuplicateElement(f"element {x} appears twice")
                seen.add(x)
            k = cycle.index(min(cycle))
            normalized.append(cycle[k:] + cycle[:k])
        normalized.sort(key=lambda c: c[0])
        object.__setattr__(self, "cycles", tuple(normalized))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for cycle in self.cycles for x in cycle)

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[Cycle]:
        return iter(self.cycles)

    def to_permutation(self, n: int | None = None) -> "Permutation":
        size = max(self.support, default=0) if n is None else n
        return Permutation(word_from_cycles(self.cycles, size))

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in self.cycles)


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n], immutable; ``word[i-1]`` is the image of position i."""

    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", check_word(self.word))

    # --- construction ---

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        return Permutation(word_from_cycles(cycles, n))

    # --- basic structure ---

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Image of position i (1-based)."""
        if not 1 <= i <= self.n:
            raise ElementOutOfRange(f"position {i} outside [1, {self.n}]")
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def cycles(self) -> CycleDecomposition:
        return CycleDecomposition(cycles_of_word(self.word))

    def inverse(self) -> "Permutation":
        return Permutation(inverse_word(self.word))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition self∘other (apply ``other`` first)."""
        return Permutation(compose_words(self.word, other.word))

    # --- statistics and predicates ---

    def sign(self) -> int:
        return sign_of_word(self.word)

    def parity(self) -> Parity:
        return Parity.from_sign(self.sign())

    def is_derangement(self) -> bool:
        return is_derangement_word(self.word)

    def is_pap(self) -> bool:
        return is_pap_word(self.word)

    def is_pad(self) -> bool:
        return is_pad_word(self.word)

    def excedance_count(self) -> int:
        """Number of positions i with image strictly above i.

        >>> Permutation((3, 4, 1, 2)).excedance_count()
        2
        """
        return excedance_count_word(self.word)

    def fixed_point_count(self) -> int:
        return sum(1 for i, x in enumerate(self.word, start=1) if x == i)

    # --- text forms ---

    def one_line(self) -> str:
        return " ".join(str(x) for x in self.word)

    def cycle_text(self) -> str:
        return str(self.cycles())

    def __str__(self) -> str:
        return self.one_line()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_word(text: str) -> Permutation:
    """Parse a one-line permutation, e.g. ``"3 4 1 2"`` or ``"3,4,1,2"``.

    >>> parse_word("4 2 1 7 8 6 3 5").cycle_text()
    '(1 4 7 3)(2)(5 8)(6)'
    """
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    return Permutation(tuple(int(t) for t in tokens))


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse cycle form, e.g. ``"(1 3)(2 4)"``; n defaults to the largest element."""
    stripped = text.strip()
    pieces = _CYCLE_RE.findall(stripped)
    if _CYCLE_RE.sub("", stripped).strip():
        raise NotABijection(f"unparseable cycle text {text!r}")
    cycles = []
    for piece in pieces:
        tokens = [t for t in re.split(r"[,\s]+", piece.strip()) if t]
        if tokens:
            cycles.append(tuple(int(t) for t in tokens))
    if n is None:
        n = max((x for c in cycles for x in c), default=0)
    return Permutation.from_cycles(cycles, n)


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse either text convention, inferring which one from a leading '('."""
    if text.strip().startswith("("):
        return parse_cycles(text, n)
    return parse_word(text)
