"""Fitting sets, the simplicity search, and classification predicates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .dyadics import Dyadic, canonical_dyadic_form, dyadic_between
from .forms import ZERO, GameForm, add, followers
from .order import Outcome, geq, left_wins_first, less, outcome


def _too_small(g: GameForm, xf: GameForm) -> bool:
    # some Left option is >= x
    return any(geq(gl, xf) for gl in g.left)


def _too_big(g: GameForm, xf: GameForm) -> bool:
    # some Right option is <= x
    return any(geq(xf, gr) for gr in g.right)


def fitting_contains(g: GameForm, x: Dyadic) -> bool:
    """``x`` lies in the fitting set: ``g^L ◁ x ◁ g^R`` for every option."""
    xf = canonical_dyadic_form(x)
    return not _too_small(g, xf) and not _too_big(g, xf)


_searches: dict[GameForm, "FittingSearch"] = {}


@dataclass(frozen=True)
class FittingSearch:
    """Outcome of the simplicity search.

    ``reason`` is ``"found"``, ``"both-fail"`` (one candidate was too small and
    too big at once) or ``"birthday-cap"``.
    """

    value: Optional[Dyadic]
    reason: str
    candidates: tuple[Dyadic, ...]


def simplest_fitting(g: GameForm) -> Optional[Dyadic]:
    """Simplest member of the fitting set, or None when it is empty.

    Candidates are visited in order of increasing canonical birthday (0, then
    integers outward, then midpoints of the bracketing interval). The search
    stops with None when one candidate is both too small and too big, or when
    the candidate birthday passes ``birthday(g)``: a nonempty fitting set holds
    the value of ``g``, whose canonical birthday is at most ``birthday(g)``.
    """
    return fitting_search(g).value


def fitting_search(g: GameForm) -> FittingSearch:
    r = _searches.get(g)
    if r is None:
        r = _search(g)
        _searches[g] = r
    return r


def _probe(g: GameForm, x: Dyadic) -> Optional[int]:
    """0 if x fits, -1 if too small only, +1 if too big only, None if both."""
    xf = canonical_dyadic_form(x)
    small, big = _too_small(g, xf), _too_big(g, xf)
    if small and big:
        return None
    return -1 if small else 1 if big else 0


def _search(g: GameForm) -> FittingSearch:
    cap = g.birthday
    seen: list[Dyadic] = []

    def visit(x: Dyadic):
        seen.append(x)
        return _probe(g, x)

    def done(value, reason):
        return FittingSearch(value, reason, tuple(seen))

    x = Dyadic(0)
    c = visit(x)
    if c is None:
        return done(None, "both-fail")
    if c == 0:
        return done(x, "found")
    step = Dyadic(-c)
    prev = x
    while True:
        x = prev + step
        if x.birthday() > cap:
            return done(None, "birthday-cap")
        c = visit(x)
        if c is None:
            return done(None, "both-fail")
        if c == 0:
            return done(x, "found")
        if c == step.num:
            # overshot: prev and x bracket the fitting set
            break
        prev = x
    lo, hi = (prev, x) if prev < x else (x, prev)
    while True:
        mid = dyadic_between(lo, hi)
        if mid.birthday() > cap:
            return done(None, "birthday-cap")
        c = visit(mid)
        if c is None:
            return done(None, "both-fail")
        if c == 0:
            return done(mid, "found")
        if c < 0:
            lo = mid
        else:
            hi = mid


def is_number(g: GameForm) -> bool:
    return simplest_fitting(g) is not None


def value_of(g: GameForm) -> Optional[Dyadic]:
    return simplest_fitting(g)


_c_num: dict[GameForm, bool] = {}
_s_num: dict[GameForm, bool] = {}
_zug: dict[GameForm, bool] = {}


def is_c_number(g: GameForm) -> bool:
    """Every ``g^L ◁ g^R``, and every option is itself a C-number."""
    r = _c_num.get(g)
    if r is None:
        r = all(not geq(gl, gr) for gl in g.left for gr in g.right) and all(
            is_c_number(o) for o in g.left + g.right
        )
        _c_num[g] = r
    return r


def is_s_number(g: GameForm) -> bool:
    """Every ``g^L < g^R``, and every option is itself an S-number."""
    r = _s_num.get(g)
    if r is None:
        r = all(less(gl, gr) for gl in g.left for gr in g.right) and all(
            is_s_number(o) for o in g.left + g.right
        )
        _s_num[g] = r
    return r


def is_weak_zugzwang(g: GameForm) -> bool:
    """``g^L < g < g^R`` at the root only."""
    return all(less(gl, g) for gl in g.left) and all(less(g, gr) for gr in g.right)


def is_zugzwang(g: GameForm) -> bool:
    r = _zug.get(g)
    if r is None:
        r = is_weak_zugzwang(g) and all(is_zugzwang(o) for o in g.left + g.right)
        _zug[g] = r
    return r


def is_dicotic(g: GameForm) -> bool:
    """Both players can move from every follower other than 0."""
    return all(f.is_zero or (f.left and f.right) for f in followers(g))


_stops: dict[GameForm, tuple[Dyadic, Dyadic]] = {}


def stops(g: GameForm) -> tuple[Dyadic, Dyadic]:
    """(left stop, right stop)."""
    r = _stops.get(g)
    if r is None:
        v = value_of(g)
        if v is not None:
            r = (v, v)
        else:
            if not g.left or not g.right:
                raise AssertionError(f"non-number with an empty option set: {g!r}")
            r = (max(stops(gl)[1] for gl in g.left), min(stops(gr)[0] for gr in g.right))
        _stops[g] = r
    return r


def left_stop(g: GameForm) -> Dyadic:
    return stops(g)[0]


def right_stop(g: GameForm) -> Dyadic:
    return stops(g)[1]


def is_infinitesimal(g: GameForm) -> bool:
    return stops(g) == (Dyadic(0), Dyadic(0))


def archimedean_bound(g: GameForm) -> int:
    """An integer ``n`` with ``-n < g < n``."""
    return g.birthday + 1


class PreconditionError(ValueError):
    pass


def avoidance_witness(g: GameForm, x: GameForm) -> Optional[GameForm]:
    """A Left option ``g^L`` with ``g^L + x >= 0``, given that ``x`` is a number,
    ``g`` is not, and Left moving first wins ``g + x``."""
    if not is_number(x):
        raise PreconditionError("x is not a number")
    if is_number(g):
        raise PreconditionError("G is a number")
    if not left_wins_first(add(g, x)):
        raise PreconditionError("Left does not win G + x moving first")
    for gl in g.left:
        if geq(add(gl, x), ZERO):
            return gl
    return None


@dataclass(frozen=True)
class Classification:
    outcome: Outcome
    birthday: int
    is_number: bool
    value: Optional[Dyadic]
    is_c_number: bool
    is_s_number: bool
    is_zugzwang: bool
    is_weak_zugzwang: bool
    is_dicotic: bool
    is_infinitesimal: bool


def classify(g: GameForm) -> Classification:
    v = value_of(g)
    return Classification(
        outcome=outcome(g),
        birthday=g.birthday,
        is_number=v is not None,
        value=v,
        is_c_number=is_c_number(g),
        is_s_number=is_s_number(g),
        is_zugzwang=is_zugzwang(g),
        is_weak_zugzwang=is_weak_zugzwang(g),
        is_dicotic=is_dicotic(g),
        is_infinitesimal=is_infinitesimal(g),
    )
