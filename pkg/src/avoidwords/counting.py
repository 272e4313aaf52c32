"""Ground-truth counting of pattern-avoiding words.

Three independent engines live here:

* an insertion construction (`sons`, `enumerate_reduced`, `alpha_table`)
  that grows each reduced avoiding word of length n+1 from a unique parent
  of length n, either by appending an existing letter or by inserting a new
  letter in one of the k+1 regions and renaming;
* a direct depth-first count over the full alphabet (`brute_force_total`)
  with incremental pruning, independent of reduction;
* a memoized state-space counter (`state_count`) for pattern sets of type
  (1,2), whose frontier legality test only needs the set of letters before
  the last position and the last letter itself.

`alpha_table` counts reduced avoiding words by (length n, letters used k);
`lifted_total` turns that into the count over an m-letter alphabet via
sum_k C(m,k) alpha_{n,k}. All counts are exact Python integers.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .patterns import (
    DashedPattern,
    avoids,
    is_type_12,
    occurs_ending_at_last,
)
from .series import binomial
from .words import Word, alphabet_span, format_word, is_reduced, shift_up, sign


@dataclass
class AlphaMatrix:
    """Counts of reduced avoiding words by length n and letters used k.

    Row 0 is the empty word; entries with k > n or k beyond the alphabet
    cap are zero and not stored.
    """

    n_max: int
    k_max: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def value(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def row(self, n: int, width: int | None = None) -> list[int]:
        if width is None:
            width = self.k_max + 1
        return [self.value(n, k) for k in range(width)]

    def rows(self, width: int | None = None) -> list[list[int]]:
        return [self.row(n, width) for n in range(self.n_max + 1)]


def _ends_forbidden(patterns: Sequence[DashedPattern], word: Word) -> bool:
    return any(occurs_ending_at_last(p, word) for p in patterns)


def _sons_unchecked(word: Word, patterns: Sequence[DashedPattern], m: int) -> list[Word]:
    k = alphabet_span(word)
    out = []
    for c in range(1, k + 1):
        cand = word + (c,)
        if not _ends_forbidden(patterns, cand):
            out.append(cand)
    if k < m:
        for r in range(1, k + 2):
            cand = shift_up(word, r) + (r,)
            if not _ends_forbidden(patterns, cand):
                out.append(cand)
    return out


def sons(word: Sequence[int], patterns: Iterable[DashedPattern], m: int) -> list[Word]:
    """The avoiding words of length n+1 produced by a reduced avoiding
    word of length n, in deterministic order: appended existing letters
    c = 1..k first, then new-letter regions r = 1..k+1 (the latter only
    when k < m, since a full alphabet admits no new letter).

    Every extension is vetted with the incremental check: only a forbidden
    occurrence ending at the new last position can break avoidance.
    """
    word = tuple(word)
    pats = tuple(patterns)
    if not word:
        raise ValueError("sons needs a non-empty word")
    if not is_reduced(word):
        raise ValueError(f"sons needs a reduced word, got {format_word(word)!r}")
    k = alphabet_span(word)
    if k > m:
        raise ValueError(f"word uses {k} letters but the alphabet only has {m}")
    if not avoids(pats, word):
        raise ValueError(f"word {format_word(word)!r} does not avoid the pattern set")
    return _sons_unchecked(word, pats, m)


def enumerate_reduced(patterns: Iterable[DashedPattern], n: int, m: int) -> list[Word]:
    """All reduced avoiding words of length n on at most m letters, each
    exactly once, grown level by level from the one-letter word."""
    if n < 0:
        raise ValueError("length must be >= 0")
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    pats = tuple(patterns)
    if n == 0:
        return [()]
    level: list[Word] = [(1,)] if avoids(pats, (1,)) else []
    for _ in range(n - 1):
        level = [son for word in level for son in _sons_unchecked(word, pats, m)]
    return level


def alpha_table(patterns: Iterable[DashedPattern], n_max: int, m: int) -> AlphaMatrix:
    """Counts alpha_{n,k} of reduced avoiding words of length n on exactly
    k letters, for n <= n_max, k <= min(n_max, m), via the insertion
    construction."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    pats = tuple(patterns)
    table = AlphaMatrix(n_max, min(n_max, m), {(0, 0): 1})
    level: list[Word] = [(1,)] if n_max >= 1 and avoids(pats, (1,)) else []
    for n in range(1, n_max + 1):
        if n > 1:
            level = [son for word in level for son in _sons_unchecked(word, pats, m)]
        counts: dict[int, int] = defaultdict(int)
        for word in level:
            counts[alphabet_span(word)] += 1
        for k, cnt in counts.items():
            table.entries[(n, k)] = cnt
    return table


def lifted_total(patterns: Iterable[DashedPattern], m: int, n: int) -> int:
    """Number of avoiding words of length n over an m-letter alphabet via
    the binomial lift sum_k C(m,k) alpha_{n,k}."""
    table = alpha_table(patterns, n, m)
    return sum(binomial(m, k) * table.value(n, k) for k in range(min(n, m) + 1))


def brute_force_total(patterns: Iterable[DashedPattern], m: int, n: int) -> int:
    """Number of avoiding words of length n over an m-letter alphabet by
    depth-first extension over the letters 1..m, pruning every prefix that
    acquires a forbidden occurrence at its last position. Independent of
    the reduced-word machinery."""
    if n < 0:
        raise ValueError("length must be >= 0")
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    pats = tuple(patterns)
    if n == 0:
        return 1

    def extend(word: Word, depth: int) -> int:
        if depth == n:
            return 1
        total = 0
        for c in range(1, m + 1):
            cand = word + (c,)
            if not _ends_forbidden(pats, cand):
                total += extend(cand, depth + 1)
        return total

    return extend((), 0)


def _shift_mask(mask: int, region: int) -> int:
    # Letter v occupies bit v-1; letters >= region move up one value.
    low = mask & ((1 << (region - 1)) - 1)
    return low | ((mask >> (region - 1)) << region)


def _triple_signature(a: int, b: int, c: int) -> tuple[int, int, int]:
    return (sign(a, b), sign(a, c), sign(b, c))


def state_count(patterns: Iterable[DashedPattern], n_max: int, m: int) -> AlphaMatrix:
    """Same table as alpha_table, computed by dynamic programming over
    states (k, h, S): letters used, last letter, and the set of letter
    values occurring strictly before the last position.

    Only pattern sets whose members all have the shape a-bc qualify: for
    those, an occurrence ending at the last position is a triple (earlier
    letter, previous letter, new letter), so the state determines exactly
    which extensions stay avoiding.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    pats = tuple(patterns)
    bad = [p for p in pats if not is_type_12(p)]
    if bad:
        raise ValueError(f"state_count only handles a-bc patterns, got {bad[0]}")
    signatures = {_triple_signature(*p.letters) for p in pats}

    def legal(mask: int, h: int, c: int, k: int) -> bool:
        for v in range(1, k + 2):
            if mask >> (v - 1) & 1 and _triple_signature(v, h, c) in signatures:
                return False
        return True

    table = AlphaMatrix(n_max, min(n_max, m), {(0, 0): 1})
    if n_max == 0:
        return table
    # State: (k, h, mask of letters strictly before the last position).
    states: dict[tuple[int, int, int], int] = {(1, 1, 0): 1}
    table.entries[(1, 1)] = 1
    for n in range(2, n_max + 1):
        nxt: dict[tuple[int, int, int], int] = defaultdict(int)
        for (k, h, mask), cnt in states.items():
            full = mask | (1 << (h - 1))
            for c in range(1, k + 1):
                if legal(mask, h, c, k):
                    nxt[(k, c, full)] += cnt
            if k < m:
                for r in range(1, k + 2):
                    if legal(_shift_mask(mask, r), h + (h >= r), r, k + 1):
                        nxt[(k + 1, r, _shift_mask(full, r))] += cnt
        states = dict(nxt)
        row: dict[int, int] = defaultdict(int)
        for (k, _h, _mask), cnt in states.items():
            row[k] += cnt
        for k, cnt in row.items():
            table.entries[(n, k)] = cnt
    return table
