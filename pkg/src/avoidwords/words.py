"""Words over a finite totally ordered alphabet {1, 2, ..., m}.

A word is a tuple of positive integers; the empty tuple is the length-0
word. Words print as a plain digit string when every letter is at most 9
(``12132``) and as comma-separated integers otherwise (``10,2,11``); both
forms are accepted on input.

A word is *reduced* when its letter set is exactly {1, ..., k} for some k.
Reduced words are the canonical representatives of words under order
isomorphism: every word reduces to one by ranking its distinct letters.

All functions are pure and never mutate their arguments. The ambient
alphabet size m is never stored inside a word; it is passed explicitly to
the operations that need it.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

Word = tuple[int, ...]


def sign(a: int, b: int) -> int:
    """-1, 0 or 1 according to a < b, a == b, a > b."""
    return (a > b) - (a < b)


def parse_word(text: str) -> Word:
    """Parse a word from its string form.

    >>> parse_word("12132")
    (1, 2, 1, 3, 2)
    >>> parse_word("10,2,3")
    (10, 2, 3)
    >>> parse_word("")
    ()
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"bad word {text!r}: letters must be decimal integers")
        letters = tuple(int(p) for p in parts)
    else:
        if not text.isdigit():
            raise ValueError(f"bad word {text!r}: expected digits or comma-separated integers")
        letters = tuple(int(ch) for ch in text)
    if any(x < 1 for x in letters):
        raise ValueError(f"bad word {text!r}: letters must be >= 1")
    return letters


def format_word(word: Sequence[int]) -> str:
    """Inverse of parse_word; the empty word prints as the empty string.

    >>> format_word((1, 2, 1, 3, 2))
    '12132'
    >>> format_word((10, 2, 3))
    '10,2,3'
    """
    if not word:
        return ""
    if max(word) <= 9:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def alphabet_span(word: Sequence[int]) -> int:
    """Largest letter in the word; 0 for the empty word. Equals the
    alphabet size k when the word is reduced."""
    return max(word) if word else 0


def is_reduced(word: Sequence[int]) -> bool:
    """True when the letter set is exactly {1, ..., max letter}.

    >>> is_reduced((3, 2, 2, 1, 2))
    True
    >>> is_reduced((4, 1, 7, 7, 6))
    False
    >>> is_reduced(())
    True
    """
    if not word:
        return True
    letters = set(word)
    return letters == set(range(1, max(letters) + 1))


def reduce_word(word: Sequence[int]) -> Word:
    """Rank the distinct letters down to {1, ..., k}.

    The result is order-isomorphic to the input and reduced; reducing a
    reduced word is the identity.

    >>> reduce_word((4, 1, 7, 7, 6))
    (2, 1, 4, 4, 3)
    >>> reduce_word((3, 2, 2, 1, 2))
    (3, 2, 2, 1, 2)
    """
    rank = {v: i + 1 for i, v in enumerate(sorted(set(word)))}
    return tuple(rank[v] for v in word)


def order_isomorphic(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when u and v have the same <, =, > relation at every index pair.

    >>> order_isomorphic((1, 4, 1), (1, 2, 1))
    True
    >>> order_isomorphic((1, 1), (1, 2))
    False
    """
    if len(u) != len(v):
        return False
    n = len(u)
    for a in range(n):
        for b in range(a + 1, n):
            if sign(u[a], u[b]) != sign(v[a], v[b]):
                return False
    return True


def embed(word: Sequence[int], subset: Sequence[int]) -> Word:
    """Rewrite a reduced word onto the letters of ``subset``.

    ``subset`` must be strictly ascending with one entry per letter of the
    reduced word; letter i of the result is subset[word[i] - 1], so the
    result is order-isomorphic to the input.

    >>> embed((1, 2, 1, 3), (1, 3, 4))
    (1, 3, 1, 4)
    """
    if not is_reduced(word):
        raise ValueError(f"embed needs a reduced word, got {format_word(word)!r}")
    k = alphabet_span(word)
    if len(subset) != k:
        raise ValueError(f"subset size mismatch: word uses {k} letters, subset has {len(subset)}")
    if any(subset[i] >= subset[i + 1] for i in range(len(subset) - 1)):
        raise ValueError(f"subset must be strictly ascending, got {tuple(subset)}")
    return tuple(subset[x - 1] for x in word)


def all_embeddings(word: Sequence[int], m: int) -> list[Word]:
    """All C(m, k) rewritings of a reduced word into the alphabet {1..m},
    one per ascending k-subset, in lexicographic subset order.

    >>> [format_word(w) for w in all_embeddings((1,), 3)]
    ['1', '2', '3']
    """
    k = alphabet_span(word)
    if k > m:
        raise ValueError(f"word uses {k} letters but the alphabet only has {m}")
    return [embed(word, subset) for subset in combinations(range(1, m + 1), k)]


def shift_up(word: Sequence[int], region: int) -> Word:
    """Increment every letter >= region by one: the renaming that frees the
    value ``region`` for a newly inserted letter.

    >>> shift_up((1, 2, 1, 3, 2), 2)
    (1, 3, 1, 4, 3)
    """
    return tuple(x + 1 if x >= region else x for x in word)
