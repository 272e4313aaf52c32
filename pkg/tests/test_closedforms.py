import pytest

from avoidwords.closedforms import (
    alpha_1_12__2_21,
    alpha_1_21__2_12,
    arrangements_level_poly,
    count_by_k_1_12__2_21,
    total_1_12__2_21,
    total_1_21__2_12,
)
from avoidwords.counting import brute_force_total
from avoidwords.patterns import parse_pattern_set
from avoidwords.series import falling_factorial, poly_sub
from avoidwords.succession import alpha_from_tree, rule_1_21__2_12

T_1_12__2_21 = parse_pattern_set("1-12,2-21")
T_1_21__2_12 = parse_pattern_set("1-21,2-12")


def test_alpha_1_12__2_21_values():
    assert alpha_1_12__2_21(5, 3, 5) == 18
    assert alpha_1_12__2_21(4, 4, 5) == 24
    assert alpha_1_12__2_21(3, 5, 4) == 0
    assert alpha_1_12__2_21(5, 4, 3) == 0
    assert alpha_1_12__2_21(0, 0, 3) == 1


def test_alpha_1_12__2_21_recursions():
    # alpha_{n,n} = n alpha_{n-1,n-1}; alpha_{n,n-1} = (n-1) alpha_{n-1,n-1};
    # alpha_{n,k} = alpha_{k+1,k} below the diagonal.
    m = 20
    for n in range(2, 13):
        assert alpha_1_12__2_21(n, n, m) == n * alpha_1_12__2_21(n - 1, n - 1, m)
        assert alpha_1_12__2_21(n, n - 1, m) == (n - 1) * alpha_1_12__2_21(n - 1, n - 1, m)
        for k in range(1, n - 1):
            assert alpha_1_12__2_21(n, k, m) == alpha_1_12__2_21(k + 1, k, m)


def test_count_by_k_1_12__2_21():
    assert count_by_k_1_12__2_21(3, 2, 2) == 4
    assert count_by_k_1_12__2_21(3, 3, 3) == 6
    assert count_by_k_1_12__2_21(3, 4, 3) == 0
    assert count_by_k_1_12__2_21(2, 3, 5) == 0


def test_total_1_12__2_21_values():
    assert total_1_12__2_21(3, 2) == 6
    assert total_1_12__2_21(0, 7) == 1
    assert total_1_12__2_21(3, 3) == 21


def test_total_1_12__2_21_short_tail_undercounts():
    assert total_1_12__2_21(3, 2, short_tail=True) == 2
    # The two variants agree while n <= m.
    assert total_1_12__2_21(3, 3, short_tail=True) == total_1_12__2_21(3, 3)


def test_total_1_12__2_21_matches_brute_force():
    for m in range(1, 5):
        for n in range(0, 11):
            assert total_1_12__2_21(n, m) == brute_force_total(T_1_12__2_21, m, n), (m, n)


def test_total_1_12__2_21_constant_beyond_m():
    for m in range(1, 6):
        stabilized = total_1_12__2_21(m + 1, m)
        for n in range(m + 1, m + 6):
            assert total_1_12__2_21(n, m) == stabilized


def test_alpha_1_21__2_12_values():
    assert alpha_1_21__2_12(5, 2, 5) == 8
    assert alpha_1_21__2_12(4, 3, 5) == 18
    assert alpha_1_21__2_12(4, 3, 2) == 0
    assert alpha_1_21__2_12(1, 2, 5) == 0
    assert alpha_1_21__2_12(0, 0, 5) == 1


def test_alpha_1_21__2_12_difference_identity():
    # k (n-1)_{k-1} = (n)_k - (n-1)_k as exact integers.
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert alpha_1_21__2_12(n, k, 20) == falling_factorial(n, k) - falling_factorial(
                n - 1, k
            )


def test_total_1_21__2_12_values():
    assert total_1_21__2_12(3, 2) == 6
    assert total_1_21__2_12(1, 7) == 7
    assert total_1_21__2_12(0, 4) == 1


def test_total_1_21__2_12_matches_brute_force():
    for m in range(1, 5):
        for n in range(0, 9):
            assert total_1_21__2_12(n, m) == brute_force_total(T_1_21__2_12, m, n), (m, n)


def test_arrangements_level_poly():
    assert arrangements_level_poly(1) == [1]
    assert arrangements_level_poly(3) == [1, 2, 2]
    with pytest.raises(ValueError):
        arrangements_level_poly(0)


def test_arrangement_difference_is_tree_level_poly():
    # (p_{n+1} - p_n)/x matches the uncapped level polynomial of the tree
    # for {1-21, 2-12}, coefficient of x^(k-1) counting k-letter words.
    rule = rule_1_21__2_12()
    for n in range(1, 11):
        delta = poly_sub(arrangements_level_poly(n + 1), arrangements_level_poly(n))
        assert delta[0] == 0
        quotient = delta[1:]
        level_poly = [alpha_from_tree(rule, 12, n, k) for k in range(1, n + 1)]
        while level_poly and level_poly[-1] == 0:
            level_poly.pop()
        assert quotient == level_poly, n


def test_rejects_negative_arguments():
    with pytest.raises(ValueError):
        alpha_1_12__2_21(-1, 0, 3)
    with pytest.raises(ValueError):
        total_1_12__2_21(2, 0)
    with pytest.raises(ValueError):
        total_1_21__2_12(-1, 3)
