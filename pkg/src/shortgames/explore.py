"""Small test universes and scans for the open problems on weak zugzwangs
and positive infinitesimals."""
from __future__ import annotations

from itertools import combinations
from math import comb

from .forms import ZERO, GameForm, make_game
from .numbers import is_infinitesimal, is_number, is_weak_zugzwang
from .order import Relation, geq, relation
from .reduction import canonicalize

DEFAULT_BUDGET = 250_000


class BudgetExceeded(RuntimeError):
    pass


def _subsets(reps: list[GameForm], max_options: int) -> list[tuple[GameForm, ...]]:
    out: list[tuple[GameForm, ...]] = []
    for size in range(min(max_options, len(reps)) + 1):
        out.extend(combinations(reps, size))
    return out


def _representatives(forms: list[GameForm]) -> list[GameForm]:
    return sorted({canonicalize(g) for g in forms}, key=lambda g: g.key)


def predicted_count(n_values: int, max_options: int) -> int:
    per_side = sum(comb(n_values, s) for s in range(min(max_options, n_values) + 1))
    return per_side * per_side


_universes: dict[tuple[int, int], list[GameForm]] = {}


def enumerate_forms(day: int, max_options: int = 2, budget: int = DEFAULT_BUDGET) -> list[GameForm]:
    """Forms of birthday <= ``day`` whose option sets are subsets (of size at
    most ``max_options``) of one representative per value born earlier.

    Representatives are canonical forms. Raises :class:`BudgetExceeded` before
    building more than ``budget`` forms.
    """
    if day < 0 or max_options < 1:
        raise ValueError("day must be >= 0 and max_options >= 1")
    hit = _universes.get((day, max_options))
    if hit is not None:
        return hit
    if day == 0:
        forms = [ZERO]
    else:
        reps = _representatives(enumerate_forms(day - 1, max_options, budget))
        n = predicted_count(len(reps), max_options)
        if n > budget:
            raise BudgetExceeded(f"day {day} with max_options {max_options} needs {n} forms (budget {budget})")
        sides = _subsets(reps, max_options)
        forms = [make_game(left, right) for left in sides for right in sides]
        forms.sort(key=lambda g: g.key)
    _universes[(day, max_options)] = forms
    return forms


def distinct_values(forms: list[GameForm]) -> int:
    return len({canonicalize(g) for g in forms})


def scan_weak_zugzwangs(day: int, max_options: int = 2, budget: int = DEFAULT_BUDGET) -> list[GameForm]:
    """Weak zugzwangs in the universe that are not numbers."""
    return [g for g in enumerate_forms(day, max_options, budget) if is_weak_zugzwang(g) and not is_number(g)]


def is_positive_infinitesimal(g: GameForm) -> bool:
    return is_infinitesimal(g) and geq(g, ZERO) and not geq(ZERO, g)


def infinitesimal_right_gaps(g: GameForm) -> list[tuple[GameForm, GameForm]]:
    if not is_positive_infinitesimal(g):
        return []
    return [(g, gr) for gr in g.right if relation(g, gr) is Relation.LESS]


def scan_infinitesimal_right_gap(
    day: int, max_options: int = 2, budget: int = DEFAULT_BUDGET
) -> list[tuple[GameForm, GameForm]]:
    """Pairs ``(G, G^R)`` with ``G`` a positive infinitesimal and ``G < G^R``."""
    out: list[tuple[GameForm, GameForm]] = []
    for g in enumerate_forms(day, max_options, budget):
        out.extend(infinitesimal_right_gaps(g))
    return out
