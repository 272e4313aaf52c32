"""Succession rules executed as generating trees with an alphabet cap.

A succession rule is an axiom label plus a production map: each node of
the generating tree carries a label, and the labels of its children are a
function of the node's label and the alphabet cap m. Truncation happens in
the productions themselves: a child whose represented word would need an
(m+1)-th letter is dropped, together with its entire subtree, while the
surviving siblings are kept. Level n of the tree then counts the avoiding
words of length n, split by label.

Three rules are built in, one per avoidance class with a known rule; the
engine itself is generic, so further hand-derived rules plug in without
changes.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable

from .counting import AlphaMatrix


@dataclass(frozen=True)
class Label:
    """A structured generating-tree label.

    Kinds in use: ``odd`` is the label (2k+1) and ``one`` the label (1_k)
    of the rule for {1-12, 2-21}; ``arr`` is the plain integer label (k) of
    the rule for {1-21, 2-12}; ``sub`` is the label (k_h) of the rule for
    {1-11, 1-12}. ``plain``/``barred`` name words whose last letter is or
    is not a first occurrence, for hand-built rules that keep that split.
    """

    kind: str
    k: int
    h: int = 0

    def name(self) -> str:
        if self.kind == "odd":
            return f"({2 * self.k + 1})"
        if self.kind == "one":
            return f"1_{self.k}"
        if self.kind == "arr":
            return f"({self.k})"
        if self.kind in ("sub", "plain"):
            return f"{self.k}_{self.h}"
        if self.kind == "barred":
            return f"{self.k}~{self.h}"
        raise ValueError(f"unknown label kind {self.kind!r}")


def odd(k: int) -> Label:
    return Label("odd", k)


def one(k: int) -> Label:
    return Label("one", k)


def arr(k: int) -> Label:
    return Label("arr", k)


def sub(k: int, h: int) -> Label:
    return Label("sub", k, h)


def plain(k: int, h: int) -> Label:
    return Label("plain", k, h)


def barred(k: int, h: int) -> Label:
    return Label("barred", k, h)


def label_sort_key(label: Label) -> tuple[int, int, str]:
    # Group by k ascending; within a group h descending, so the special
    # column k_(k+1) comes first; kind breaks remaining ties.
    return (label.k, -label.h, label.kind)


@dataclass(frozen=True)
class SuccessionRule:
    """Axiom plus production map over labels, parameterized by the cap m.

    ``letters`` maps a label to the number of distinct letters of the words
    it represents, which is what ties tree levels back to alpha counts.
    """

    name: str
    axiom: Label
    produce: Callable[[Label, int], tuple[Label, ...]]
    letters: Callable[[Label], int]


def rule_1_12__2_21() -> SuccessionRule:
    """Axiom (3); (2k+1) -> (1_k)^k (2k+3)^(k+1), (1_k) -> (1_k).

    A label (2k+1) is a k-letter word whose last letter is a first
    occurrence; (1_k) is a k-letter word whose last letter occurred before.
    At the cap k = m the (2k+3) children are dropped.
    """

    def produce(label: Label, m: int) -> tuple[Label, ...]:
        if label.kind == "odd":
            k = label.k
            out = [one(k)] * k
            if k < m:
                out += [odd(k + 1)] * (k + 1)
            return tuple(out)
        if label.kind == "one":
            return (label,)
        raise ValueError(f"label {label} does not belong to rule 1-12,2-21")

    return SuccessionRule("1-12,2-21", odd(1), produce, lambda lab: lab.k)


def rule_1_21__2_12() -> SuccessionRule:
    """Axiom (3); (k) -> (k)(k+1)^(k-1).

    A label (k) represents a word with k-2 distinct letters, so the
    (k+1)-children are dropped once k-2 reaches the cap m.
    """

    def produce(label: Label, m: int) -> tuple[Label, ...]:
        if label.kind != "arr":
            raise ValueError(f"label {label} does not belong to rule 1-21,2-12")
        j = label.k
        out = [arr(j)]
        if j - 2 < m:
            out += [arr(j + 1)] * (j - 1)
        return tuple(out)

    return SuccessionRule("1-21,2-12", arr(3), produce, lambda lab: lab.k - 2)


def rule_1_11__1_12() -> SuccessionRule:
    """Axiom (1_2); (k_h) -> (k_1)...(k_{h-1}) ((k+1)_{k+2})^h, h <= k+1.

    A label (k_h) represents a k-letter word; h-1 children keep k letters
    and h children move to k+1 letters (dropped at the cap k = m).
    """

    def produce(label: Label, m: int) -> tuple[Label, ...]:
        if label.kind != "sub":
            raise ValueError(f"label {label} does not belong to rule 1-11,1-12")
        k, h = label.k, label.h
        out = [sub(k, t) for t in range(1, h)]
        if k < m:
            out += [sub(k + 1, k + 2)] * h
        return tuple(out)

    return SuccessionRule("1-11,1-12", sub(1, 2), produce, lambda lab: lab.k)


def levels(rule: SuccessionRule, m: int, n_max: int) -> list[dict[Label, int]]:
    """Label counts at levels 1..n_max of the generating tree under cap m.
    Level 1 is the axiom with count 1."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out: list[dict[Label, int]] = [{rule.axiom: 1}]
    for _ in range(n_max - 1):
        nxt: dict[Label, int] = {}
        for label, cnt in out[-1].items():
            for child in rule.produce(label, m):
                nxt[child] = nxt.get(child, 0) + cnt
        out.append(nxt)
    return out


def alpha_from_tree(rule: SuccessionRule, m: int, n: int, k: int) -> int:
    """Number of k-letter avoiding words of length n, read off the tree as
    the level-n count of labels representing k-letter words."""
    if n == 0:
        return 1 if k == 0 else 0
    vec = levels(rule, m, n)[-1]
    return sum(cnt for label, cnt in vec.items() if rule.letters(label) == k)


def alpha_table_from_tree(rule: SuccessionRule, n_max: int, m: int) -> AlphaMatrix:
    """Whole alpha table from one tree run; same layout as
    counting.alpha_table."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    table = AlphaMatrix(n_max, min(n_max, m), {(0, 0): 1})
    if n_max == 0:
        return table
    for n, vec in enumerate(levels(rule, m, n_max), start=1):
        for label, cnt in vec.items():
            key = (n, rule.letters(label))
            table.entries[key] = table.entries.get(key, 0) + cnt
    return table


def eco_matrix(rule: SuccessionRule, m: int, n_levels: int) -> tuple[list[str], list[list[int]]]:
    """Label-distribution matrix: one row per level 1..n_levels, one column
    per label that shows up, columns grouped by k with the special column
    first within each group. Returns (column names, rows)."""
    vecs = levels(rule, m, n_levels)
    columns = sorted({label for vec in vecs for label in vec}, key=label_sort_key)
    names = [label.name() for label in columns]
    rows = [[vec.get(label, 0) for label in columns] for vec in vecs]
    return names, rows


def eco_matrix_csv(rule: SuccessionRule, m: int, n_levels: int) -> str:
    """CSV form of eco_matrix with a leading level column."""
    names, rows = eco_matrix(rule, m, n_levels)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["level"] + names)
    for n, row in enumerate(rows, start=1):
        writer.writerow([n] + row)
    return buf.getvalue()
