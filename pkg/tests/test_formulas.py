#!/usr/bin/env python
"""Tests for the closed-form clique-count formulas."""

import math

import pytest

from scripts.errors import ArgumentError
from scripts.formulas import (
    binom,
    conjecture_value,
    ex_p3_closed,
    f_formula,
    g_threshold,
    luo_bound,
    luo_f,
    proven_regime,
    s_equals_k_plus_one_threshold,
    thm11_lower,
    thm12_upper,
    two_p3_triangle_law,
)


def test_binom_conventions():
    assert binom(5, 3) == 10
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(0, 0) == 1
    assert binom(0, 2) == 0
    assert binom(0, 2, "zero-base-one") == 1
    assert binom(4, 2, "zero-base-one") == 6
    with pytest.raises(ArgumentError):
        binom(4, 2, "pascal")


def test_f_formula_counts_the_join():
    assert f_formula(6, 2, 3) == 2
    assert f_formula(10, 3, 3) == 8 + 4 * 2
    assert f_formula(8, 1, 2) == 4
    with pytest.raises(ArgumentError):
        f_formula(3, 4, 3)
    with pytest.raises(ArgumentError):
        f_formula(5, 2, -1)


def test_conjecture_value_tie_at_22():
    assert conjecture_value(22, 2, 3) == 10
    assert f_formula(22, 2, 3) == 10
    assert conjecture_value(23, 2, 3) == 11
    assert conjecture_value(9, 3, 3) == 56
    with pytest.raises(ArgumentError):
        conjecture_value(5, 2, 3)
    with pytest.raises(ArgumentError):
        conjecture_value(6, 2, 2)


@pytest.mark.parametrize("n", range(6, 41))
def test_triangle_law_agrees_with_conjecture(n):
    assert two_p3_triangle_law(n) == conjecture_value(n, 2, 3)


def test_triangle_law_domain():
    assert two_p3_triangle_law(6) == 10
    assert two_p3_triangle_law(30) == 14
    with pytest.raises(ArgumentError):
        two_p3_triangle_law(5)


@pytest.mark.parametrize(
    "k,s,expected",
    [(3, 3, 384), (4, 3, 1181), (4, 4, 3533), (5, 3, 2720)],
)
def test_g_threshold(k, s, expected):
    assert g_threshold(k, s) == expected


def test_g_threshold_domain():
    with pytest.raises(ArgumentError):
        g_threshold(2, 3)
    with pytest.raises(ArgumentError):
        g_threshold(5, 2)


def test_luo_values():
    assert luo_f(10, 6, 2, 3) == 10
    assert luo_f(7, 4, 1, 2) == 7
    assert luo_bound(10, 7, 3) == 10
    assert luo_bound(6, 4, 2) == 5
    with pytest.raises(ArgumentError):
        luo_f(5, 6, 2, 3)
    with pytest.raises(ArgumentError):
        luo_bound(6, 3, 2)


def test_k_plus_one_threshold():
    assert s_equals_k_plus_one_threshold(4) == 1981
    assert s_equals_k_plus_one_threshold(2) == 59
    with pytest.raises(ArgumentError):
        s_equals_k_plus_one_threshold(0)


@pytest.mark.parametrize(
    "n,k,s,regime",
    [
        (6, 2, 3, "small-k"),
        (12, 2, 6, "trivial"),
        (12, 4, 6, "large-s"),
        (12, 4, 3, "open"),
        (1181, 4, 3, "large-n"),
        (1180, 4, 3, "open"),
        (1981, 4, 5, "s-equals-k-plus-one"),
        (1980, 4, 5, "open"),
    ],
)
def test_proven_regime(n, k, s, regime):
    assert proven_regime(n, k, s) == regime


def test_proven_regime_domain():
    with pytest.raises(ArgumentError):
        proven_regime(5, 2, 3)


def test_ex_p3_closed():
    assert [ex_p3_closed(7, i) for i in range(5)] == [1, 7, 3, 0, 0]
    assert ex_p3_closed(0, 2) == 0
    with pytest.raises(ArgumentError):
        ex_p3_closed(-1, 2)


def test_lower_bound_values():
    assert thm11_lower(6, 2, 3, 3, ex_p3_closed) == (10, 10, 2)
    assert thm11_lower(30, 2, 3, 3, ex_p3_closed) == (14, 10, 14)


def test_upper_bound_values():
    assert thm12_upper(6, 2, 3, 3, ex_p3_closed) == 13
    assert thm12_upper(9, 3, 3, 3, ex_p3_closed) == 71
    with pytest.raises(ArgumentError):
        thm12_upper(6, 2, 3, 2, ex_p3_closed)
    with pytest.raises(ArgumentError):
        thm12_upper(5, 2, 3, 3, ex_p3_closed)


def test_zero_base_one_shifts_the_join_branch():
    assert thm11_lower(7, 1, 3, 3, ex_p3_closed)[2] == 0
    assert thm11_lower(7, 1, 3, 3, ex_p3_closed, convention="zero-base-one")[2] == 11


def test_lower_bound_domain():
    with pytest.raises(ArgumentError):
        thm11_lower(5, 2, 3, 3, ex_p3_closed)
    with pytest.raises(ArgumentError):
        thm11_lower(6, 0, 3, 3, ex_p3_closed)


def test_bounds_bracket_the_conjecture_for_p3():
    for k in range(1, 6):
        for s in range(3, 3 * k):
            for n in range(3 * k, 65):
                value = conjecture_value(n, k, s)
                assert thm11_lower(n, k, s, 3, ex_p3_closed)[0] == value
                assert value <= thm12_upper(n, k, s, 3, ex_p3_closed)


def test_conjecture_is_the_larger_of_two_counts():
    for k in range(1, 6):
        for s in range(3, 7):
            for n in range(3 * k, 65):
                assert conjecture_value(n, k, s) == max(math.comb(3 * k - 1, s), f_formula(n, k, s))
