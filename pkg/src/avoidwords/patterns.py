"""Generalized dashed patterns and containment tests for words.

A dashed pattern is a reduced word split into blocks, written with dashes
between the blocks: ``1-12``, ``2-21``, ``12-1``. An occurrence of the
pattern in a word selects one run of consecutive positions per block, the
runs appearing left to right with arbitrary gaps where the dashes are, such
that the selected letters are order-isomorphic (equalities included) to the
pattern's letters. So ``1-12`` occurs in a word exactly when some adjacent
ascending pair w[j] < w[j+1] is preceded, anywhere earlier, by a letter
equal to w[j].

A pattern string without any dash denotes a fully classical pattern: every
letter is its own block and all gaps are allowed. Hence ``121`` occurs in
311472511 (letters 1, 4, 1 at positions 2, 4, 8) even though no three
consecutive positions match it; adjacency constraints come only from
multi-letter blocks written between dashes.

Everything here is pure; the containment scan is naive backtracking over
block placements, which is plenty for the short patterns this library
deals with.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .words import Word, is_reduced, sign


@dataclass(frozen=True)
class DashedPattern:
    """Blocks of letters; the flattened letter sequence must be reduced."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("pattern needs at least one block")
        if any(not block for block in self.blocks):
            raise ValueError("pattern blocks must be non-empty")
        flat = self.letters
        if any(x < 1 for x in flat):
            raise ValueError("pattern letters must be >= 1")
        if not is_reduced(flat):
            raise ValueError(f"pattern letters {flat} are not reduced")

    @property
    def letters(self) -> Word:
        """The flattened letter sequence."""
        return tuple(x for block in self.blocks for x in block)

    def __str__(self) -> str:
        def block_str(block: tuple[int, ...]) -> str:
            if max(block) <= 9:
                return "".join(str(x) for x in block)
            return ",".join(str(x) for x in block)

        return "-".join(block_str(b) for b in self.blocks)

    def __lt__(self, other: "DashedPattern") -> bool:
        return self.blocks < other.blocks


PatternSet = tuple[DashedPattern, ...]


def parse_pattern(text: str) -> DashedPattern:
    """Parse a pattern such as ``1-12``, ``2-21`` or ``121``.

    Dashes split the letters into blocks; a dashless string is read as a
    classical pattern, one block per letter.

    >>> parse_pattern("1-12").blocks
    ((1,), (1, 2))
    >>> parse_pattern("121").blocks
    ((1,), (2,), (1,))
    """
    text = text.strip()
    if not text:
        raise ValueError("empty pattern")

    def parse_block(part: str) -> tuple[int, ...]:
        if not part:
            raise ValueError(f"empty block in pattern {text!r}")
        if not part.isdigit():
            raise ValueError(f"illegal character in pattern {text!r}")
        return tuple(int(ch) for ch in part)

    if "-" in text:
        blocks = tuple(parse_block(part) for part in text.split("-"))
    else:
        blocks = tuple((x,) for x in parse_block(text))
    return DashedPattern(blocks)


def parse_pattern_set(text: str) -> PatternSet:
    """Parse a comma-separated pattern set; duplicates collapse and the
    result is sorted into a canonical order.

    >>> [str(p) for p in parse_pattern_set("2-21,1-12")]
    ['1-12', '2-21']
    >>> parse_pattern_set("")
    ()
    """
    text = text.strip()
    if not text:
        return ()
    return tuple(sorted({parse_pattern(part) for part in text.split(",")}))


def pattern_set_id(patterns: Iterable[DashedPattern]) -> str:
    """Canonical comma-joined, sorted string form of a pattern set."""
    return ",".join(str(p) for p in sorted(set(patterns)))


def is_type_12(pattern: DashedPattern) -> bool:
    """True for patterns of the shape a-bc: a singleton block then a
    two-letter block."""
    return (
        len(pattern.blocks) == 2
        and len(pattern.blocks[0]) == 1
        and len(pattern.blocks[1]) == 2
    )


def _search(
    blocks: tuple[tuple[int, ...], ...],
    flat: Word,
    word: Sequence[int],
    block_index: int,
    min_start: int,
    chosen: list[int],
    positions: list[int],
    last_anchor: Optional[int],
) -> Optional[tuple[int, ...]]:
    # Backtracking placement of blocks left to right. chosen/positions hold
    # the letters and indices selected so far; rollback on failure.
    if block_index == len(blocks):
        return tuple(positions)
    block = blocks[block_index]
    blen = len(block)
    tail = sum(len(b) for b in blocks[block_index + 1 :])
    if last_anchor is not None and block_index == len(blocks) - 1:
        starts: Iterable[int] = (last_anchor,) if last_anchor >= min_start else ()
    else:
        starts = range(min_start, len(word) - blen - tail + 1)
    for s in starts:
        added = 0
        ok = True
        for j in range(blen):
            letter = word[s + j]
            q = len(chosen)
            if all(sign(chosen[r], letter) == sign(flat[r], flat[q]) for r in range(q)):
                chosen.append(letter)
                positions.append(s + j)
                added += 1
            else:
                ok = False
                break
        if ok:
            found = _search(
                blocks, flat, word, block_index + 1, s + blen, chosen, positions, last_anchor
            )
            if found is not None:
                return found
        for _ in range(added):
            chosen.pop()
            positions.pop()
    return None


def find_occurrence(pattern: DashedPattern, word: Sequence[int]) -> Optional[tuple[int, ...]]:
    """First occurrence of the pattern in the word, as a tuple of 0-based
    positions (one per pattern letter), or None when the word avoids it.

    >>> find_occurrence(parse_pattern("121"), (3, 1, 1, 4, 7, 2, 5, 1, 1))
    (1, 3, 7)
    """
    flat = pattern.letters
    if len(flat) > len(word):
        return None
    return _search(pattern.blocks, flat, word, 0, 0, [], [], None)


def occurs(pattern: DashedPattern, word: Sequence[int]) -> bool:
    """True when the word contains the pattern.

    >>> occurs(parse_pattern("32-1"), (4, 1, 3, 2, 5))
    False
    >>> occurs(parse_pattern("321"), (4, 1, 3, 2, 5))
    True
    """
    return find_occurrence(pattern, word) is not None


def avoids(patterns: Iterable[DashedPattern], word: Sequence[int]) -> bool:
    """True when the word contains none of the patterns."""
    return all(not occurs(p, word) for p in patterns)


def occurs_ending_at_last(pattern: DashedPattern, word: Sequence[int]) -> bool:
    """True when some occurrence uses the final position of the word as the
    last letter of its last block.

    This is the incremental check: a word extension w+c stays avoiding if
    and only if w was avoiding and no forbidden occurrence ends at the new
    last position.

    >>> occurs_ending_at_last(parse_pattern("1-12"), (1, 1, 2))
    True
    >>> occurs_ending_at_last(parse_pattern("1-12"), (1, 1, 2, 1))
    False
    """
    if not word:
        raise ValueError("occurs_ending_at_last needs a non-empty word")
    flat = pattern.letters
    if len(flat) > len(word):
        return False
    anchor = len(word) - len(pattern.blocks[-1])
    if anchor < 0:
        return False
    return _search(pattern.blocks, flat, word, 0, 0, [], [], anchor) is not None
