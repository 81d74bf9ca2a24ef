"""Outcomes and the game order on literal forms."""
from __future__ import annotations

import enum
import sys

from .forms import GameForm, add, conjugate

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class Outcome(enum.Enum):
    L = "L"
    R = "R"
    N = "N"
    P = "P"

    def __ge__(self, other: Outcome) -> bool:
        if self is other:
            return True
        return other in _BELOW[self]

    def __gt__(self, other: Outcome) -> bool:
        return self is not other and self >= other

    def __le__(self, other: Outcome) -> bool:
        return other >= self

    def __lt__(self, other: Outcome) -> bool:
        return other > self


# Outcome diamond, Left-favourable: L on top, R at the bottom, N and P incomparable.
_BELOW = {
    Outcome.L: {Outcome.N, Outcome.P, Outcome.R},
    Outcome.N: {Outcome.R},
    Outcome.P: {Outcome.R},
    Outcome.R: set(),
}


class Relation(enum.Enum):
    GREATER = ">"
    LESS = "<"
    EQUAL = "="
    FUZZY = "||"

    @property
    def symbol(self) -> str:
        return self.value


_left_wins: dict[GameForm, bool] = {}
_right_wins: dict[GameForm, bool] = {}
_geq: dict[tuple[int, int], bool] = {}


def left_wins_first(g: GameForm) -> bool:
    r = _left_wins.get(g)
    if r is None:
        r = any(not right_wins_first(gl) for gl in g.left)
        _left_wins[g] = r
    return r


def right_wins_first(g: GameForm) -> bool:
    r = _right_wins.get(g)
    if r is None:
        r = any(not left_wins_first(gr) for gr in g.right)
        _right_wins[g] = r
    return r


def outcome(g: GameForm) -> Outcome:
    lw, rw = left_wins_first(g), right_wins_first(g)
    if lw:
        return Outcome.N if rw else Outcome.L
    return Outcome.R if rw else Outcome.P


def geq(g: GameForm, h: GameForm) -> bool:
    """``g >= h``: Right, moving first in ``g - h``, loses.

    Right's moves in ``g - h`` are ``g^R - h`` and ``g - h^L``; each is a
    winning reply for Left exactly when it is not ``<= 0``. The difference
    game is walked pairwise instead of being built.
    """
    if g is h:
        return True
    sig = (g.id, h.id)
    r = _geq.get(sig)
    if r is None:
        r = not (any(geq(h, gr) for gr in g.right) or any(geq(hl, g) for hl in h.left))
        _geq[sig] = r
    return r


def leq(g: GameForm, h: GameForm) -> bool:
    return geq(h, g)


def geq_by_sum(g: GameForm, h: GameForm) -> bool:
    """Reference ``g >= h`` that materialises ``g + conjugate(h)``."""
    return not right_wins_first(add(g, conjugate(h)))


def relation(g: GameForm, h: GameForm) -> Relation:
    ge = geq(g, h)
    le = geq(h, g)
    if ge and le:
        return Relation.EQUAL
    if ge:
        return Relation.GREATER
    if le:
        return Relation.LESS
    return Relation.FUZZY


def equal(g: GameForm, h: GameForm) -> bool:
    return geq(g, h) and geq(h, g)


def less(g: GameForm, h: GameForm) -> bool:
    return geq(h, g) and not geq(g, h)


def confused_or_less(g: GameForm, h: GameForm) -> bool:
    """``g ◁ h``, i.e. not ``g >= h``."""
    return not geq(g, h)


def clear_caches() -> None:
    _left_wins.clear()
    _right_wins.clear()
    _geq.clear()
