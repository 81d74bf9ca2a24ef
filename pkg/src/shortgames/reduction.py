"""Dominated and reversible options, and canonical forms."""
from __future__ import annotations

import random

from .forms import GameForm, make_game
from .order import geq

_canon: dict[GameForm, GameForm] = {}


def _undominated(opts: tuple[GameForm, ...], better) -> list[GameForm]:
    kept = list(opts)
    i = 0
    while i < len(kept):
        o = kept[i]
        if any(p is not o and better(p, o) for p in kept):
            del kept[i]
        else:
            i += 1
    return kept


def remove_dominated(g: GameForm) -> GameForm:
    """Drop Left options that some other Left option is ``>=`` (dually on the Right)."""
    left = _undominated(g.left, geq)
    right = _undominated(g.right, lambda p, o: geq(o, p))
    return make_game(left, right)


def _bypass_left(g: GameForm, opts) -> tuple[list[GameForm], bool]:
    out: list[GameForm] = []
    changed = False
    for gl in opts:
        rev = next((glr for glr in gl.right if geq(g, glr)), None)
        if rev is None:
            out.append(gl)
        else:
            out.extend(rev.left)
            changed = True
    return out, changed


def _bypass_right(g: GameForm, opts) -> tuple[list[GameForm], bool]:
    out: list[GameForm] = []
    changed = False
    for gr in opts:
        rev = next((grl for grl in gr.left if geq(grl, g)), None)
        if rev is None:
            out.append(gr)
        else:
            out.extend(rev.right)
            changed = True
    return out, changed


def bypass_reversible(g: GameForm) -> GameForm:
    """Replace each reversible option by the options of its reversing move.

    A Left option ``g^L`` reverses through ``g^{LR} <= g`` and is replaced by
    all Left options of ``g^{LR}``, possibly none.
    """
    left, _ = _bypass_left(g, g.left)
    right, _ = _bypass_right(g, g.right)
    return make_game(left, right)


def canonicalize(g: GameForm) -> GameForm:
    r = _canon.get(g)
    if r is not None:
        return r
    h = make_game([canonicalize(o) for o in g.left], [canonicalize(o) for o in g.right])
    while True:
        h2 = bypass_reversible(remove_dominated(h))
        if h2 is h:
            break
        h = h2
    _canon[g] = h
    _canon[h] = h
    return h


def is_canonical(g: GameForm) -> bool:
    return canonicalize(g) is g


def reduce_in_random_order(g: GameForm, rng: random.Random) -> GameForm:
    """Reach a form with no dominated or reversible options anywhere, choosing
    the next simplification step at random.

    Root steps may run before the options have been simplified. Used to check
    that the end result does not depend on the order of steps.
    """
    done: set[GameForm] = set()

    def go(h: GameForm) -> GameForm:
        left = list(h.left)
        right = list(h.right)
        while True:
            cur = make_game(left, right)
            left, right = list(cur.left), list(cur.right)
            steps = []
            for side, opts in (("L", left), ("R", right)):
                for i, o in enumerate(opts):
                    if o not in done:
                        steps.append(("reduce", side, i))
            for i, a in enumerate(left):
                if any(b is not a and geq(b, a) for b in left):
                    steps.append(("dominated", "L", i))
                if any(geq(cur, ar) for ar in a.right):
                    steps.append(("reverse", "L", i))
            for i, a in enumerate(right):
                if any(b is not a and geq(a, b) for b in right):
                    steps.append(("dominated", "R", i))
                if any(geq(al, cur) for al in a.left):
                    steps.append(("reverse", "R", i))
            if not steps:
                done.add(cur)
                return cur
            kind, side, i = rng.choice(steps)
            opts = left if side == "L" else right
            o = opts[i]
            if kind == "reduce":
                opts[i] = go(o)
            elif kind == "dominated":
                del opts[i]
            elif side == "L":
                rev = rng.choice([ar for ar in o.right if geq(cur, ar)])
                opts[i : i + 1] = list(rev.left)
            else:
                rev = rng.choice([al for al in o.left if geq(al, cur)])
                opts[i : i + 1] = list(rev.right)

    return go(g)


def clear_caches() -> None:
    _canon.clear()
