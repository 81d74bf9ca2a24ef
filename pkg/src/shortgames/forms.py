"""Interned literal game forms.

Every structurally distinct form exists exactly once, so identity (``is``)
is the same thing as the ``≅`` relation between literal forms. Downstream
memo tables key on these handles.
"""
from __future__ import annotations

import threading
from typing import Iterable, Iterator


class GameForm:
    """A short game as a literal tree ``{left | right}``.

    Do not instantiate directly; use :func:`make_game`.
    """

    __slots__ = ("left", "right", "id", "birthday", "key")

    left: tuple[GameForm, ...]
    right: tuple[GameForm, ...]
    id: int
    birthday: int
    key: tuple

    def __hash__(self) -> int:
        return self.id

    def __eq__(self, other: object) -> bool:
        return self is other

    def __lt__(self, other: GameForm) -> bool:
        return self.key < other.key

    def __reduce__(self):
        return (make_game, (self.left, self.right))

    def __repr__(self) -> str:
        from .notation import print_form

        return f"GameForm({print_form(self, shorthand=True)})"

    @property
    def is_zero(self) -> bool:
        return not self.left and not self.right


_table: dict[tuple[tuple[int, ...], tuple[int, ...]], GameForm] = {}
_lock = threading.Lock()


def _normalize(options: Iterable[GameForm]) -> tuple[GameForm, ...]:
    return tuple(sorted(set(options), key=lambda g: g.key))


def make_game(left: Iterable[GameForm] = (), right: Iterable[GameForm] = ()) -> GameForm:
    """Return the interned form ``{left | right}`` (duplicate options collapse)."""
    lo = _normalize(left)
    ro = _normalize(right)
    sig = (tuple(g.id for g in lo), tuple(g.id for g in ro))
    g = _table.get(sig)
    if g is not None:
        return g
    with _lock:
        g = _table.get(sig)
        if g is None:
            g = object.__new__(GameForm)
            g.left = lo
            g.right = ro
            g.id = len(_table)
            g.birthday = 1 + max((o.birthday for o in lo + ro), default=-1)
            g.key = (g.birthday, tuple(o.key for o in lo), tuple(o.key for o in ro))
            _table[sig] = g
    return g


def intern_count() -> int:
    return len(_table)


ZERO = make_game()
ONE = make_game([ZERO])
MINUS_ONE = make_game((), [ZERO])
STAR = make_game([ZERO], [ZERO])
UP = make_game([ZERO], [STAR])
DOWN = make_game([STAR], [ZERO])

_conj: dict[GameForm, GameForm] = {}
_sums: dict[tuple[int, int], GameForm] = {}


def conjugate(g: GameForm) -> GameForm:
    """Swap the roles of Left and Right everywhere."""
    r = _conj.get(g)
    if r is None:
        r = make_game([conjugate(o) for o in g.right], [conjugate(o) for o in g.left])
        _conj[g] = r
        _conj[r] = g
    return r


def add(g: GameForm, h: GameForm) -> GameForm:
    """Disjunctive sum, fully unfolded into a literal form."""
    if g.is_zero:
        return h
    if h.is_zero:
        return g
    sig = (g.id, h.id) if g.id <= h.id else (h.id, g.id)
    r = _sums.get(sig)
    if r is None:
        left = [add(g, hl) for hl in h.left] + [add(gl, h) for gl in g.left]
        right = [add(g, hr) for hr in h.right] + [add(gr, h) for gr in g.right]
        r = make_game(left, right)
        _sums[sig] = r
    return r


def add_all(games: Iterable[GameForm]) -> GameForm:
    total = ZERO
    for g in games:
        total = add(total, g)
    return total


def subtract(g: GameForm, h: GameForm) -> GameForm:
    return add(g, conjugate(h))


def birthday(g: GameForm) -> int:
    """Height of the literal tree; 0 only for the zero game."""
    return g.birthday


def options(g: GameForm) -> Iterator[GameForm]:
    yield from g.left
    yield from g.right


def followers(g: GameForm) -> set[GameForm]:
    """Every form reachable by a finite sequence of moves, ``g`` included."""
    seen = {g}
    stack = [g]
    while stack:
        for o in options(stack.pop()):
            if o not in seen:
                seen.add(o)
                stack.append(o)
    return seen
