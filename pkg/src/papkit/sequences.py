"""Exact counting and brute-force enumeration.

Closed forms and recurrences are plain integer arithmetic (Python ints are the
arbitrary-precision carrier); each public count cross-checks its independent
routes once per argument and raises with the first counterexample on mismatch.
Enumeration is the oracle layer: small families are materialized exactly, in
deterministic lexicographic order, either by filtering S_n or by assembling
split parts.  Triangles index counts by (size, excedance number) and are
stored sparsely: an absent entry means zero.
"""
from __future__ import annotations

import enum
import itertools
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .errors import BoundExceeded, IndexOutOfRange
from .padmaps import exceptional_pads
from .perm import (
    Permutation,
    Word,
    excedance_count_word,
    is_derangement_word,
    is_pad_word,
    is_pap_word,
    sign_of_word,
)
from .split import join_words

DEFAULT_SPLIT_BOUND = 12
DEFAULT_FILTER_BOUND = 9
BOUND_ENV_VAR = "PAPKIT_MAX_BRUTE"

# Above this many elements a family is recomputed on demand instead of cached.
_CACHE_ELEMENT_LIMIT = 150_000


def _fail(name: str, n: int, expected: int, got: int) -> None:
    raise AssertionError(f"{name} inconsistent at n={n}: expected {expected}, got {got}")


# ---------------------------------------------------------------------------
# closed forms and recurrences
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def pap_count(n: int) -> int:
    """Number of PAPs of [n]: ceil(n/2)! * floor(n/2)!.

    Cross-checked against the one-step recurrence p_n = ceil(n/2) * p_{n-1}.
    """
    value = math.factorial((n + 1) // 2) * math.factorial(n // 2)
    if n >= 1:
        by_step = ((n + 1) // 2) * pap_count(n - 1)
        if value != by_step:
            _fail("pap_count", n, value, by_step)
    return value


@lru_cache(maxsize=None)
def pap_parity_counts(n: int) -> tuple[int, int]:
    """(even, odd) PAP counts by the two-branch recurrence; equal for n >= 3."""
    if n == 0:
        return 1, 0
    prev_even, prev_odd = pap_parity_counts(n - 1)
    s = (n - 1) // 2
    even = s * prev_odd + prev_even
    odd = s * prev_even + prev_odd
    if even + odd != pap_count(n):
        _fail("pap_parity_counts sum", n, pap_count(n), even + odd)
    if n >= 3 and even != odd:
        _fail("pap_parity_counts balance", n, even, odd)
    return even, odd


@lru_cache(maxsize=None)
def derangement_count(n: int) -> int:
    """d_n by the adjacent recurrence, cross-checked against n*d_{n-1} + (-1)^n."""
    if n == 0:
        return 1
    if n == 1:
        return 0
    value = (n - 1) * (derangement_count(n - 1) + derangement_count(n - 2))
    by_step = n * derangement_count(n - 1) + (-1 if n % 2 else 1)
    if value != by_step:
        _fail("derangement_count", n, value, by_step)
    return value


@lru_cache(maxsize=None)
def derangement_parity_counts(n: int) -> tuple[int, int]:
    """(even, odd) derangement counts by the parity-swapped adjacent recurrence."""
    if n == 0:
        return 1, 0
    if n == 1:
        return 0, 0
    e1, o1 = derangement_parity_counts(n - 1)
    e2, o2 = derangement_parity_counts(n - 2)
    even = (n - 1) * (o1 + o2)
    odd = (n - 1) * (e1 + e2)
    if even + odd != derangement_count(n):
        _fail("derangement_parity_counts sum", n, derangement_count(n), even + odd)
    expected_diff = (n - 1) * (1 if n % 2 else -1)
    if even - odd != expected_diff:
        _fail("derangement_parity_counts difference", n, expected_diff, even - odd)
    return even, odd


def pad_count(n: int) -> int:
    """Number of PADs of [n]: the product of the two part derangement counts.

    Cross-checked against the inclusion-exclusion double sum and against both
    recurrences (the four-term split recurrence and the one-step detachment
    recurrence).
    """
    value = _pad_product(n)
    for name, route in (
        ("pad_count_by_sum", pad_count_by_sum),
        ("pad_count_by_split_recurrence", pad_count_by_split_recurrence),
        ("pad_count_by_step_recurrence", pad_count_by_step_recurrence),
    ):
        got = route(n)
        if got != value:
            _fail(name, n, value, got)
    return value


@lru_cache(maxsize=None)
def _pad_product(n: int) -> int:
    return derangement_count((n + 1) // 2) * derangement_count(n // 2)


def pad_count_by_sum(n: int) -> int:
    """Inclusion-exclusion: sum over (i, j) of ceil! floor! (-1)^(i+j) / (j! i!)."""
    a, b = (n + 1) // 2, n // 2
    total = Fraction(0)
    for j in range(a + 1):
        for i in range(b + 1):
            sign = -1 if (i + j) % 2 else 1
            total += Fraction(sign * math.factorial(a) * math.factorial(b),
                              math.factorial(j) * math.factorial(i))
    assert total.denominator == 1
    return int(total)


@lru_cache(maxsize=None)
def pad_count_by_split_recurrence(n: int) -> int:
    """Four-term recurrence with s = floor((n-1)/2), valid from n = 4."""
    if n == 0:
        return 1
    if n <= 3:
        return 0
    s = (n - 1) // 2
    assert s == (2 * n - 3 - (-1) ** n) // 4
    return s * (
        pad_count_by_split_recurrence(n - 1)
        + (n - 2 - s)
        * (pad_count_by_split_recurrence(n - 3) + pad_count_by_split_recurrence(n - 4))
    )


@lru_cache(maxsize=None)
def pad_count_by_step_recurrence(n: int) -> int:
    """One-step recurrence with s = ceil(n/2), valid from n = 1."""
    if n == 0:
        return 1
    s = (n + 1) // 2
    assert s == (2 * n + 1 - (-1) ** n) // 4
    sign = -1 if s % 2 else 1
    return s * pad_count_by_step_recurrence(n - 1) + sign * derangement_count(n - s)


@lru_cache(maxsize=None)
def pad_parity_counts(n: int) -> tuple[int, int]:
    """(even, odd) PAD counts from the parity products of the part counts.

    Cross-checked against the four-term parity recurrences, the total, and the
    closed-form signed difference.
    """
    a, b = (n + 1) // 2, n // 2
    ea, oa = derangement_parity_counts(a)
    eb, ob = derangement_parity_counts(b)
    even = eb * ea + ob * oa
    odd = eb * oa + ea * ob
    if even + odd != _pad_product(n):
        _fail("pad_parity_counts sum", n, _pad_product(n), even + odd)
    if even - odd != pad_parity_difference(n):
        _fail("pad_parity_counts difference", n, pad_parity_difference(n), even - odd)
    if n >= 4:
        by_rec = pad_parity_counts_by_recurrence(n)
        if (even, odd) != by_rec:
            _fail("pad_parity_counts recurrence", n, (even, odd), by_rec)
    return even, odd


@lru_cache(maxsize=None)
def pad_parity_counts_by_recurrence(n: int) -> tuple[int, int]:
    """Parity-refined four-term recurrences, valid from n = 4."""
    if n == 0:
        return 1, 0
    if n <= 3:
        return 0, 0
    s = (n - 1) // 2
    e1, o1 = pad_parity_counts_by_recurrence(n - 1)
    e3, o3 = pad_parity_counts_by_recurrence(n - 3)
    e4, o4 = pad_parity_counts_by_recurrence(n - 4)
    even = s * (o1 + (n - 2 - s) * (e3 + e4))
    odd = s * (e1 + (n - 2 - s) * (o3 + o4))
    return even, odd


def pad_parity_difference(n: int) -> int:
    """Signed census (even minus odd) of the PADs of [n].

    Closed form (-1)^n * ceil((n-2)/2) * floor((n-2)/2) for n >= 2; the two
    smallest values come from direct counts (the formula happens to agree under
    floor-division semantics, but they are pinned independently).
    """
    if n < 2:
        return (1, 0)[n]
    sign = -1 if n % 2 else 1
    return sign * ((n - 1) // 2) * ((n - 2) // 2)


# ---------------------------------------------------------------------------
# families and enumeration
# ---------------------------------------------------------------------------

class Family(enum.Enum):
    PERM = "perm"
    PAP = "pap"
    PAP_EVEN = "pap-even"
    PAP_ODD = "pap-odd"
    DERANGEMENT = "derangement"
    DER_EVEN = "der-even"
    DER_ODD = "der-odd"
    PAD = "pad"
    PAD_EVEN = "pad-even"
    PAD_ODD = "pad-odd"
    EXCEPTIONAL_PAD = "exceptional-pad"

    @staticmethod
    def parse(tag: str) -> "Family":
        try:
            return Family(tag.strip().lower().replace("_", "-"))
        except ValueError:
            raise IndexOutOfRange(
                f"unknown family {tag!r}; choose from "
                + ", ".join(f.value for f in Family)
            ) from None


SPLIT_FAMILIES = frozenset(
    {Family.PAP, Family.PAP_EVEN, Family.PAP_ODD, Family.PAD, Family.PAD_EVEN, Family.PAD_ODD}
)
FILTER_FAMILIES = frozenset(
    {Family.PERM, Family.DERANGEMENT, Family.DER_EVEN, Family.DER_ODD}
)

_PARITY_SUFFIX = {
    Family.PAP_EVEN: 1, Family.PAP_ODD: -1,
    Family.DER_EVEN: 1, Family.DER_ODD: -1,
    Family.PAD_EVEN: 1, Family.PAD_ODD: -1,
}


def split_bound() -> int:
    return int(os.environ.get(BOUND_ENV_VAR, DEFAULT_SPLIT_BOUND))


def filter_bound() -> int:
    return int(os.environ.get(BOUND_ENV_VAR, DEFAULT_FILTER_BOUND))


def family_count(family: Family, n: int) -> int:
    """Closed-form/recurrence count of the family at size n."""
    if family is Family.PERM:
        return math.factorial(n)
    if family is Family.PAP:
        return pap_count(n)
    if family in (Family.PAP_EVEN, Family.PAP_ODD):
        even, odd = pap_parity_counts(n)
        return even if family is Family.PAP_EVEN else odd
    if family is Family.DERANGEMENT:
        return derangement_count(n)
    if family in (Family.DER_EVEN, Family.DER_ODD):
        even, odd = derangement_parity_counts(n)
        return even if family is Family.DER_EVEN else odd
    if family is Family.PAD:
        return pad_count(n)
    if family in (Family.PAD_EVEN, Family.PAD_ODD):
        even, odd = pad_parity_counts(n)
        return even if family is Family.PAD_EVEN else odd
    if family is Family.EXCEPTIONAL_PAD:
        return ((n - 1) // 2) * ((n - 2) // 2) if n >= 4 else 0
    raise IndexOutOfRange(f"no count for family {family}")


def family_predicate(family: Family) -> Callable[[Word], bool]:
    """Membership test on words, used by the S_n filtering cross-check."""
    base: Callable[[Word], bool]
    if family is Family.PERM:
        base = lambda w: True
    elif family in (Family.PAP, Family.PAP_EVEN, Family.PAP_ODD):
        base = is_pap_word
    elif family in (Family.DERANGEMENT, Family.DER_EVEN, Family.DER_ODD):
        base = is_derangement_word
    elif family in (Family.PAD, Family.PAD_EVEN, Family.PAD_ODD):
        base = is_pad_word
    elif family is Family.EXCEPTIONAL_PAD:
        exceptional: dict[int, frozenset[Word]] = {}

        def base(w: Word) -> bool:
            n = len(w)
            if n not in exceptional:
                exceptional[n] = frozenset(x.word for x in exceptional_pads(n))
            return w in exceptional[n]
    else:  # pragma: no cover
        raise IndexOutOfRange(f"no predicate for family {family}")
    sign = _PARITY_SUFFIX.get(family)
    if sign is None:
        return base
    return lambda w: base(w) and sign_of_word(w) == sign


def _check_bound(family: Family, n: int, bound: int | None) -> None:
    if family is Family.EXCEPTIONAL_PAD:
        return
    limit = bound if bound is not None else (
        split_bound() if family in SPLIT_FAMILIES else filter_bound()
    )
    if n > limit:
        raise BoundExceeded(
            f"{family.value} enumeration at n={n} exceeds the bound {limit} "
            f"(override with {BOUND_ENV_VAR} or an explicit bound)"
        )


@lru_cache(maxsize=None)
def derangement_words(m: int) -> tuple[Word, ...]:
    """All derangement words of [m] in lexicographic order (filter of S_m)."""
    return tuple(
        w for w in itertools.permutations(range(1, m + 1)) if is_derangement_word(w)
    )


def _odd_parts_by_first(family: Family, size: int) -> dict[int, list[Word]]:
    """Odd-part candidates grouped by their first value: the sharding key."""
    if family in (Family.PAD, Family.PAD_EVEN, Family.PAD_ODD):
        parts: Iterable[Word] = derangement_words(size)
    else:
        parts = itertools.permutations(range(1, size + 1))
    shards: dict[int, list[Word]] = {}
    for w in parts:
        shards.setdefault(w[0] if w else 0, []).append(w)
    return shards


def _even_parts(family: Family, size: int) -> tuple[Word, ...]:
    if family in (Family.PAD, Family.PAD_EVEN, Family.PAD_ODD):
        return derangement_words(size)
    return tuple(itertools.permutations(range(1, size + 1)))


def _split_shard(family: Family, odd_parts: list[Word], even_parts: Sequence[Word]) -> list[Word]:
    """Assemble and sort one shard; the sign filter recomputes signs on the full word."""
    sign = _PARITY_SUFFIX.get(family)
    words = [join_words(o, e) for o in odd_parts for e in even_parts]
    if sign is not None:
        words = [w for w in words if sign_of_word(w) == sign]
    words.sort()
    return words


def iter_family_words(
    family: Family, n: int, *, bound: int | None = None, threads: int = 1
) -> Iterator[Word]:
    """Stream the family's words in lexicographic order.

    Split families are assembled shard by shard (keyed on the odd part's first
    value, which is the word's first letter up to rescaling, so shard order is
    lexicographic order); filter families stream S_n through the predicate.
    """
    _check_bound(family, n, bound)
    if family is Family.EXCEPTIONAL_PAD:
        yield from sorted(x.word for x in exceptional_pads(n))
        return
    if family in SPLIT_FAMILIES:
        shards = _odd_parts_by_first(family, (n + 1) // 2)
        even_parts = _even_parts(family, n // 2)
        keys = sorted(shards)
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                shard_lists = pool.map(
                    lambda key: _split_shard(family, shards[key], even_parts), keys
                )
                for shard in shard_lists:
                    yield from shard
        else:
            for key in keys:
                yield from _split_shard(family, shards[key], even_parts)
        return
    predicate = family_predicate(family)
    for w in itertools.permutations(range(1, n + 1)):
        if predicate(w):
            yield w


_words_cache: dict[tuple[Family, int], tuple[Word, ...]] = {}


def family_words(family: Family, n: int, *, bound: int | None = None) -> tuple[Word, ...]:
    """Materialized family, cached when small enough to keep."""
    key = (family, n)
    cached = _words_cache.get(key)
    if cached is not None:
        return cached
    words = tuple(iter_family_words(family, n, bound=bound))
    if len(words) <= _CACHE_ELEMENT_LIMIT:
        _words_cache[key] = words
    return words


def enumerate_family(
    family: Family, n: int, *, bound: int | None = None, threads: int = 1
) -> Iterator[Permutation]:
    """Stream the family as Permutation values in lexicographic order."""
    for w in iter_family_words(family, n, bound=bound, threads=threads):
        yield Permutation(w)


def family_count_by_enumeration(
    family: Family, n: int, *, bound: int | None = None, threads: int = 1
) -> int:
    return sum(1 for _ in iter_family_words(family, n, bound=bound, threads=threads))


def filter_family_words(family: Family, n: int, *, bound: int | None = None) -> tuple[Word, ...]:
    """Cross-check mode: the family by direct S_n filtering, regardless of kind."""
    limit = bound if bound is not None else filter_bound()
    if n > limit:
        raise BoundExceeded(f"S_{n} filtering exceeds the bound {limit}")
    predicate = family_predicate(family)
    return tuple(w for w in itertools.permutations(range(1, n + 1)) if predicate(w))


# ---------------------------------------------------------------------------
# excedance triangles
# ---------------------------------------------------------------------------

_PAD_TRIANGLE_FAMILIES = frozenset({Family.PAD, Family.PAD_EVEN, Family.PAD_ODD})


@dataclass
class Triangle:
    """Sparse (n, k) -> count table; missing entries are zero."""

    family: str
    max_n: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def value(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def row(self, n: int) -> dict[int, int]:
        return {k: v for (m, k), v in sorted(self.entries.items()) if m == n}

    def csv_lines(self) -> list[str]:
        lines = ["n,k,value"]
        lines += [f"{n},{k},{v}" for (n, k), v in sorted(self.entries.items())]
        return lines


def _triangle_start(family: Family) -> int:
    if family in _PAD_TRIANGLE_FAMILIES:
        return 4
    if family in (Family.DERANGEMENT, Family.DER_EVEN, Family.DER_ODD):
        return 2
    return 1


@lru_cache(maxsize=None)
def excedance_triangle(family: Family, max_n: int, *, bound: int | None = None) -> Triangle:
    """Brute-force triangle of excedance counts over the family.

    For PAD families rows start at n = 4 (excedances of a PAD lie in
    [2, n-2]; asserted) and row symmetry value(n,k) == value(n,n-k) is checked.
    Results are cached; callers must treat the returned triangle as read-only.
    """
    triangle = Triangle(family.value, max_n)
    for n in range(_triangle_start(family), max_n + 1):
        for w in family_words(family, n, bound=bound):
            k = excedance_count_word(w)
            if family in _PAD_TRIANGLE_FAMILIES and not 2 <= k <= n - 2:
                raise AssertionError(f"PAD excedance count {k} outside [2, {n - 2}] at {w}")
            key = (n, k)
            triangle.entries[key] = triangle.entries.get(key, 0) + 1
    if family in _PAD_TRIANGLE_FAMILIES:
        for n in range(4, max_n + 1):
            for k in range(2, n - 1):
                left, right = triangle.value(n, k), triangle.value(n, n - k)
                if left != right:
                    raise AssertionError(
                        f"{family.value} triangle asymmetric at (n,k)=({n},{k}): {left} != {right}"
                    )
    return triangle


@lru_cache(maxsize=None)
def derangement_excedance_row(m: int) -> dict[int, int]:
    """Brute-force excedance distribution over the derangements of [m]."""
    row: dict[int, int] = {}
    for w in derangement_words(m):
        k = excedance_count_word(w)
        row[k] = row.get(k, 0) + 1
    return row


@lru_cache(maxsize=None)
def derangement_excedance_parity_rows(m: int) -> tuple[dict[int, int], dict[int, int]]:
    """(even, odd) brute-force excedance distributions over derangements of [m]."""
    even: dict[int, int] = {}
    odd: dict[int, int] = {}
    for w in derangement_words(m):
        k = excedance_count_word(w)
        target = even if sign_of_word(w) == 1 else odd
        target[k] = target.get(k, 0) + 1
    return even, odd


def _convolution_indices(n: int, k: int) -> tuple[int, Iterator[int]]:
    if n < 4 or not 2 <= k <= n - 2:
        raise IndexOutOfRange(f"(n, k) = ({n}, {k}) outside n >= 4, 2 <= k <= n-2")
    kk = k if k <= n // 2 else n - k
    return kk, iter(range(1, kk))


def pad_excedance_by_convolution(n: int, k: int) -> int:
    """PAD excedance count from the part distributions.

    For k up to floor(n/2) this is sum_i d(ceil,i) d(floor,k-i); beyond the
    middle the row symmetry reflects k to n-k (the printed plus sign in the
    reflected branch's inner index is a transcription slip: it indexes past the
    part's maximum and would make the branch vanish).
    """
    kk, indices = _convolution_indices(n, k)
    da = derangement_excedance_row((n + 1) // 2)
    db = derangement_excedance_row(n // 2)
    return sum(da.get(i, 0) * db.get(kk - i, 0) for i in indices)


def pad_excedance_parity_by_convolution(n: int, k: int) -> tuple[int, int]:
    """(even, odd) PAD excedance counts from the parity-refined part rows."""
    kk, indices = _convolution_indices(n, k)
    ea, oa = derangement_excedance_parity_rows((n + 1) // 2)
    eb, ob = derangement_excedance_parity_rows(n // 2)
    even = 0
    odd = 0
    for i in indices:
        even += ea.get(i, 0) * eb.get(kk - i, 0) + oa.get(i, 0) * ob.get(kk - i, 0)
        odd += ea.get(i, 0) * ob.get(kk - i, 0) + oa.get(i, 0) * eb.get(kk - i, 0)
    return even, odd


def signed_pad_excedance_diff(n: int, k: int) -> int:
    """Signed difference (even minus odd) of PAD excedance counts.

    Closed form (-1)^n * min(k-1, n-k-1).  The max variant sometimes quoted for
    this quantity contradicts the enumeration (first at n=5, k=2, where the
    oracle gives -1); the verification report records that check.
    """
    if n < 4 or not 2 <= k <= n - 2:
        raise IndexOutOfRange(f"(n, k) = ({n}, {k}) outside n >= 4, 2 <= k <= n-2")
    sign = -1 if n % 2 else 1
    return sign * min(k - 1, n - k - 1)


def signed_pad_excedance_diff_max_variant(n: int, k: int) -> int:
    """The rejected max form, kept only so the verification report can exhibit
    its disagreement with the brute-force oracle."""
    if n < 4 or not 2 <= k <= n - 2:
        raise IndexOutOfRange(f"(n, k) = ({n}, {k}) outside n >= 4, 2 <= k <= n-2")
    sign = -1 if n % 2 else 1
    return sign * max(k - 1, n - k - 1)


def signed_diff_triangle(max_n: int) -> Triangle:
    """Closed-form signed difference triangle for 4 <= n <= max_n."""
    triangle = Triangle("diff", max_n)
    for n in range(4, max_n + 1):
        for k in range(2, n - 1):
            triangle.entries[(n, k)] = signed_pad_excedance_diff(n, k)
    return triangle


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def sequence_bfile_lines(values: Sequence[int], offset: int = 0) -> list[str]:
    """OEIS b-file style: one "n value" pair per line."""
    return [f"{offset + i} {v}" for i, v in enumerate(values)]


def sequence_json(values: Sequence[int]) -> str:
    return json.dumps(list(values))
