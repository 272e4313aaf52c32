"""Independent oracles used to pin expected values.

Everything here counts by exhaustive filtering with the full containment
scanner, deliberately bypassing the incremental checks, the insertion
construction, and the state-space machinery that the library itself uses.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterable, Iterator

from avoidwords.patterns import DashedPattern, avoids
from avoidwords.words import Word, is_reduced


def all_words(m: int, n: int) -> Iterator[Word]:
    """Every word in {1..m}^n."""
    return product(range(1, m + 1), repeat=n)


def reduced_avoiders_by_filter(
    patterns: Iterable[DashedPattern], n: int, k: int
) -> list[Word]:
    """All reduced avoiding words of length n on exactly k letters, found
    by filtering {1..k}^n with the full scanner."""
    pats = tuple(patterns)
    if k == 0:
        return [()] if n == 0 else []
    return [
        w
        for w in all_words(k, n)
        if max(w) == k and is_reduced(w) and avoids(pats, w)
    ]


def alpha_by_filter(patterns: Iterable[DashedPattern], n: int, k: int, m: int) -> int:
    """alpha_{n,k} by exhaustive filtering; zero beyond the alphabet cap."""
    if k > m:
        return 0
    return len(reduced_avoiders_by_filter(patterns, n, k))


def total_by_filter(patterns: Iterable[DashedPattern], m: int, n: int) -> int:
    """|W_n| over the m-letter alphabet by filtering all m^n words with the
    full scanner (no incremental pruning)."""
    pats = tuple(patterns)
    return sum(1 for w in all_words(m, n) if avoids(pats, w))


def random_reduced_word(rng: random.Random, max_letters: int, length: int) -> Word:
    letters = tuple(rng.randint(1, max_letters) for _ in range(length))
    rank = {v: i + 1 for i, v in enumerate(sorted(set(letters)))}
    return tuple(rank[v] for v in letters)


def random_pattern(rng: random.Random, max_len: int = 3) -> DashedPattern:
    """A random dashed pattern of length 2..max_len with a random block
    split (every gap independently a dash or not)."""
    length = rng.randint(2, max_len)
    flat = random_reduced_word(rng, rng.randint(1, length), length)
    blocks: list[list[int]] = [[flat[0]]]
    for letter in flat[1:]:
        if rng.random() < 0.5:
            blocks.append([letter])
        else:
            blocks[-1].append(letter)
    return DashedPattern(tuple(tuple(b) for b in blocks))
