"""Exact dyadic rationals and their game forms."""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Optional

from .forms import ZERO, GameForm, add_all, conjugate, make_game


@functools.total_ordering
@dataclass(frozen=True)
class Dyadic:
    """``num / 2**exp`` kept normalized: ``exp == 0`` or ``num`` odd."""

    num: int
    exp: int = 0

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError(f"negative exponent: {self.exp}")
        if self.exp > 0 and self.num % 2 == 0:
            raise ValueError(f"{self.num}/2^{self.exp} is not normalized; use Dyadic.of")

    @classmethod
    def of(cls, m: int, k: int = 0) -> Dyadic:
        if k < 0:
            raise ValueError(f"negative exponent: {k}")
        if m == 0:
            return cls(0, 0)
        while k > 0 and m % 2 == 0:
            m //= 2
            k -= 1
        return cls(m, k)

    @classmethod
    def parse(cls, text: str) -> Dyadic:
        """Accept ``m``, ``m/2^k`` or ``p/q`` with ``q`` a power of two."""
        s = text.strip().replace(" ", "")
        m = re.fullmatch(r"([+-]?\d+)(?:/(?:2\^(\d+)|(\d+)))?", s)
        if not m:
            raise ValueError(f"not a dyadic rational: {text!r}")
        num = int(m.group(1))
        if m.group(2) is not None:
            return cls.of(num, int(m.group(2)))
        if m.group(3) is not None:
            q = int(m.group(3))
            if q <= 0 or q & (q - 1):
                raise ValueError(f"denominator {q} is not a power of two")
            return cls.of(num, q.bit_length() - 1)
        return cls(num)

    @property
    def denominator(self) -> int:
        return 1 << self.exp

    @property
    def is_integer(self) -> bool:
        return self.exp == 0

    def lifted(self, k: int) -> int:
        """Numerator over ``2**k`` (``k >= exp``)."""
        return self.num << (k - self.exp)

    def __add__(self, other: Dyadic) -> Dyadic:
        k = max(self.exp, other.exp)
        return Dyadic.of(self.lifted(k) + other.lifted(k), k)

    def __neg__(self) -> Dyadic:
        return Dyadic(-self.num, self.exp)

    def __sub__(self, other: Dyadic) -> Dyadic:
        return self + (-other)

    def __lt__(self, other: Dyadic) -> bool:
        k = max(self.exp, other.exp)
        return self.lifted(k) < other.lifted(k)

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{self.denominator}"

    def birthday(self) -> int:
        """Birthday of the canonical form: ``|n|`` for integers, ``ceil|x| + exp`` otherwise."""
        if self.exp == 0:
            return abs(self.num)
        return -(-abs(self.num) // self.denominator) + self.exp


def dyadic_add(x: Dyadic, y: Dyadic) -> Dyadic:
    return x + y


def dyadic_neg(x: Dyadic) -> Dyadic:
    return -x


def dyadic_cmp(x: Dyadic, y: Dyadic) -> int:
    """-1, 0 or 1 as ``x`` is less than, equal to, or greater than ``y``."""
    return (x > y) - (x < y)


def dyadic_between(x: Dyadic, y: Dyadic) -> Dyadic:
    """A dyadic strictly between ``x < y``: ``(n + 2^j m) / 2^(k+1)``.

    ``x`` and ``y`` are written over the larger exponent ``k``; the numerator
    of the coarser one picks up the factor ``2^j``.
    """
    if not x < y:
        raise ValueError(f"need x < y, got {x} and {y}")
    k = max(x.exp, y.exp)
    return Dyadic.of(x.lifted(k) + y.lifted(k), k + 1)


_integer_forms: dict[int, GameForm] = {0: ZERO}


def literal_integer_form(n: int) -> GameForm:
    """``(n) = {(n-1) | }`` for positive ``n``; negatives are conjugates."""
    g = _integer_forms.get(n)
    if g is None:
        if n < 0:
            g = conjugate(literal_integer_form(-n))
        else:
            # iterative so large n does not recurse
            g = ZERO
            for i in range(1, n + 1):
                g = _integer_forms.get(i) or make_game([g])
                _integer_forms[i] = g
        _integer_forms[n] = g
    return g


_unit_forms: dict[int, GameForm] = {}


def unit_fraction_form(k: int) -> GameForm:
    """``1/2^k = {0 | 1/2^(k-1)}`` with ``1/2^0 = 1``."""
    g = _unit_forms.get(k)
    if g is None:
        g = literal_integer_form(1) if k == 0 else make_game([ZERO], [unit_fraction_form(k - 1)])
        _unit_forms[k] = g
    return g


def literal_dyadic_form(m: int, k: int) -> GameForm:
    """The unfolded sum of ``|m|`` copies of ``±1/2^k``; ``m`` need not be odd."""
    if k < 0:
        raise ValueError(f"negative exponent: {k}")
    if k == 0:
        return literal_integer_form(m)
    unit = unit_fraction_form(k)
    g = add_all([unit] * abs(m))
    return conjugate(g) if m < 0 else g


_canonical_forms: dict[Dyadic, GameForm] = {}


def canonical_dyadic_form(x: Dyadic) -> GameForm:
    """Canonical form: ``{[(m-1)/2^k] | [(m+1)/2^k]}`` for odd ``m``, with both
    neighbours renormalized first."""
    g = _canonical_forms.get(x)
    if g is None:
        if x.is_integer:
            g = literal_integer_form(x.num)
        elif x.num < 0:
            g = conjugate(canonical_dyadic_form(-x))
        else:
            lo = Dyadic.of(x.num - 1, x.exp)
            hi = Dyadic.of(x.num + 1, x.exp)
            g = make_game([canonical_dyadic_form(lo)], [canonical_dyadic_form(hi)])
        _canonical_forms[x] = g
    return g


_canon_member: dict[GameForm, Optional[Dyadic]] = {}


def is_canonical_dyadic_member(g: GameForm) -> Optional[Dyadic]:
    """The ``x`` with ``g ≅ canonical_dyadic_form(x)``, by pattern matching; else None."""
    if g in _canon_member:
        return _canon_member[g]
    x = _match_canonical(g)
    _canon_member[g] = x
    return x


def _match_canonical(g: GameForm) -> Optional[Dyadic]:
    if len(g.left) > 1 or len(g.right) > 1:
        return None
    if g.is_zero:
        return Dyadic(0)
    lo = is_canonical_dyadic_member(g.left[0]) if g.left else None
    hi = is_canonical_dyadic_member(g.right[0]) if g.right else None
    if g.left and lo is None or g.right and hi is None:
        return None
    if hi is None:
        cand = lo + Dyadic(1) if lo.is_integer and lo.num >= 0 else None
    elif lo is None:
        cand = hi - Dyadic(1) if hi.is_integer and hi.num <= 0 else None
    else:
        cand = dyadic_between(lo, hi) if lo < hi else None
    if cand is not None and canonical_dyadic_form(cand) is g:
        return cand
    return None


def is_literal_dyadic_member(g: GameForm) -> Optional[tuple[int, int]]:
    """Some ``(m, k)`` with ``g ≅ literal_dyadic_form(m, k)``, else None."""
    from .reduction import canonicalize

    x = is_canonical_dyadic_member(canonicalize(g))
    if x is None:
        return None
    if x.num == 0:
        return (0, 0) if g.is_zero else None
    b = g.birthday
    for j in range(b + 1):
        m, k = x.num << j, x.exp + j
        # the literal form of m/2^k has birthday |m| * (k + 1)
        size = abs(m) * (k + 1) if k else abs(m)
        if size != b:
            continue
        if literal_dyadic_form(m, k) is g:
            return (m, k)
    return None
