from math import comb

import pytest

from games import G1, G2, G3, G4, INFINITESIMALS
from shortgames.explore import (
    BudgetExceeded, distinct_values, enumerate_forms, infinitesimal_right_gaps,
    is_positive_infinitesimal, predicted_count, scan_infinitesimal_right_gap, scan_weak_zugzwangs,
)
from shortgames.forms import STAR, UP, ZERO, make_game
from shortgames.numbers import is_number, is_weak_zugzwang
from shortgames.order import Relation, geq_by_sum, relation
from shortgames.reduction import canonicalize


def test_enumeration_counts():
    assert enumerate_forms(0, 2) == [ZERO]
    day1 = enumerate_forms(1, 2)
    assert set(day1) == {ZERO, make_game([ZERO]), make_game((), [ZERO]), STAR}
    # four day-1 values; option sets of size <= 2 over them
    per_side = comb(4, 0) + comb(4, 1) + comb(4, 2)
    assert len(enumerate_forms(2, 2)) == per_side ** 2 == 121
    assert distinct_values(enumerate_forms(2, 2)) == 22
    assert len(enumerate_forms(3, 2)) == predicted_count(22, 2) == 254 ** 2


def test_enumeration_is_deterministic_and_nested():
    d2 = enumerate_forms(2, 2)
    assert d2 == sorted(d2, key=lambda g: g.key)
    assert set(enumerate_forms(1, 2)) <= set(d2)
    assert set(d2) <= set(enumerate_forms(3, 2))
    assert all(g.birthday <= 3 for g in enumerate_forms(3, 2))


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_forms(3, 3)
    with pytest.raises(ValueError):
        enumerate_forms(-1, 2)


def test_weak_zugzwang_scan_small():
    assert scan_weak_zugzwangs(2, 2) == []


def test_weak_zugzwang_games_are_excluded_from_weak_zugzwang_scan():
    for g in (G1, G2, G3, G4):
        assert is_weak_zugzwang(g) and is_number(g)


def test_right_gap_scan_on_infinitesimal_games():
    for _, g in INFINITESIMALS:
        assert infinitesimal_right_gaps(g) == []
    assert relation(UP, STAR) is Relation.FUZZY


def test_right_gap_scan_day2_hits_are_dominated_options():
    one = make_game([ZERO])
    hits = scan_infinitesimal_right_gap(2, 2)
    assert {g for g, _ in hits} == {
        make_game([ZERO], [one, STAR]),
        make_game([ZERO, make_game((), [ZERO])], [one, STAR]),
        make_game([ZERO, STAR], [one, STAR]),
    }
    assert all(gr is one for _, gr in hits)
    # Right's option 1 is dominated by *; every hit is ^ in disguise
    assert all(canonicalize(g) is UP for g, _ in hits)


def test_right_gap_day3_single_right_option():
    hits = [p for p in scan_infinitesimal_right_gap(3, 2) if len(p[0].right) == 1]
    assert hits == []


def test_right_gap_day3_witness_is_genuine():
    # {0 | ^, *} is a canonical positive infinitesimal lying below its option ^
    g = make_game([ZERO], [STAR, UP])
    assert (g, UP) in scan_infinitesimal_right_gap(3, 2)
    assert is_positive_infinitesimal(g)
    assert geq_by_sum(UP, g) and not geq_by_sum(g, UP)
    assert geq_by_sum(g, ZERO) and not geq_by_sum(ZERO, g)
