import pytest

from avoidwords.counting import alpha_table
from avoidwords.patterns import parse_pattern_set
from avoidwords.succession import (
    alpha_from_tree,
    alpha_table_from_tree,
    arr,
    eco_matrix,
    eco_matrix_csv,
    levels,
    odd,
    one,
    rule_1_11__1_12,
    rule_1_12__2_21,
    rule_1_21__2_12,
    sub,
)

ECO_COLUMNS = [
    "1_2", "1_1",
    "2_3", "2_2", "2_1",
    "3_4", "3_3", "3_2", "3_1",
    "4_5", "4_4", "4_3", "4_2", "4_1",
    "5_6",
]

ECO_ROWS = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 2, 2, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 3, 9, 6, 6, 6, 24, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 5, 9, 15, 21, 72, 24, 24, 24, 24, 120],
]


def test_rule_1_12__2_21_axiom_and_level_two():
    rule = rule_1_12__2_21()
    assert rule.axiom == odd(1)
    assert levels(rule, 5, 2)[-1] == {one(1): 1, odd(2): 2}


def test_rule_1_12__2_21_cap_drops_new_letters():
    rule = rule_1_12__2_21()
    assert rule.produce(odd(3), 3) == (one(3),) * 3
    assert rule.produce(odd(3), 4) == (one(3),) * 3 + (odd(4),) * 4


def test_rule_1_12__2_21_one_is_fixed_point():
    rule = rule_1_12__2_21()
    assert rule.produce(one(5), 9) == (one(5),)


def test_rule_1_12__2_21_level_label_set():
    rule = rule_1_12__2_21()
    for n in range(2, 7):
        vec = levels(rule, 10, n)[-1]
        assert set(vec) == {one(k) for k in range(1, n)} | {odd(n)}


def test_rule_1_12__2_21_one_counts_stabilize():
    # The number of one(k) labels is the same at every level beyond k+1.
    rule = rule_1_12__2_21()
    vecs = levels(rule, 10, 9)
    for k in range(1, 6):
        counts = {vecs[n - 1].get(one(k), 0) for n in range(k + 2, 10)}
        assert len(counts) == 1


def test_rule_1_21__2_12_levels():
    rule = rule_1_21__2_12()
    assert rule.axiom == arr(3)
    assert levels(rule, 5, 2)[-1] == {arr(3): 1, arr(4): 2}
    assert levels(rule, 5, 3)[-1] == {arr(3): 1, arr(4): 4, arr(5): 6}


def test_rule_1_21__2_12_cap_keeps_self_loop():
    rule = rule_1_21__2_12()
    m = 4
    assert rule.produce(arr(m + 2), m) == (arr(m + 2),)


def test_rule_1_11__1_12_productions():
    rule = rule_1_11__1_12()
    assert rule.axiom == sub(1, 2)
    assert rule.produce(sub(2, 3), 5) == (sub(2, 1), sub(2, 2)) + (sub(3, 4),) * 3
    # Leaf: no smaller siblings and the cap kills the new-letter children.
    assert rule.produce(sub(3, 1), 3) == ()


def test_eco_matrix_known_table():
    names, rows = eco_matrix(rule_1_11__1_12(), 5, 5)
    assert names == ECO_COLUMNS
    assert rows == ECO_ROWS


def test_eco_matrix_csv_layout():
    text = eco_matrix_csv(rule_1_11__1_12(), 5, 5)
    lines = text.splitlines()
    assert lines[0] == "level," + ",".join(ECO_COLUMNS)
    assert lines[5] == "5," + ",".join(str(v) for v in ECO_ROWS[4])


def test_levels_start_at_axiom():
    for make in (rule_1_12__2_21, rule_1_21__2_12, rule_1_11__1_12):
        rule = make()
        assert levels(rule, 3, 1) == [{rule.axiom: 1}]


def test_alpha_from_tree_spot_values():
    assert alpha_from_tree(rule_1_12__2_21(), 5, 5, 3) == 18
    assert alpha_from_tree(rule_1_21__2_12(), 5, 5, 2) == 8
    assert alpha_from_tree(rule_1_11__1_12(), 5, 4, 3) == 27
    assert alpha_from_tree(rule_1_11__1_12(), 5, 0, 0) == 1


def test_row_five_special_column():
    vec = levels(rule_1_11__1_12(), 5, 5)[-1]
    assert vec[sub(4, 5)] == 72


@pytest.mark.parametrize(
    "make,class_text",
    [
        (rule_1_12__2_21, "1-12,2-21"),
        (rule_1_21__2_12, "1-21,2-12"),
        (rule_1_11__1_12, "1-11,1-12"),
    ],
)
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_tree_alpha_equals_generation_alpha(make, class_text, m):
    patterns = parse_pattern_set(class_text)
    tree = alpha_table_from_tree(make(), 8, m)
    gen = alpha_table(patterns, 8, m)
    assert tree.entries == gen.entries


@pytest.mark.parametrize("make", [rule_1_12__2_21, rule_1_21__2_12, rule_1_11__1_12])
def test_capped_levels_are_restrictions_of_uncapped(make):
    rule = make()
    for m in (1, 2, 3):
        capped = levels(rule, m, 7)
        uncapped = levels(rule, 10, 7)
        for cvec, uvec in zip(capped, uncapped):
            for label, cnt in cvec.items():
                if rule.letters(label) <= m:
                    assert cnt == uvec[label]
            for label, cnt in uvec.items():
                if rule.letters(label) <= m:
                    assert cvec.get(label, 0) == cnt


def test_produce_rejects_foreign_labels():
    with pytest.raises(ValueError):
        rule_1_12__2_21().produce(arr(3), 5)
    with pytest.raises(ValueError):
        rule_1_21__2_12().produce(one(2), 5)
    with pytest.raises(ValueError):
        rule_1_11__1_12().produce(odd(1), 5)
