"""Blue-red Hackenbush strings and Toppling Dominoes rows as literal forms."""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .forms import GameForm, add_all, make_game


@dataclass(frozen=True)
class HackenbushString:
    """Stalks of coloured edges, each listed ground-up (``B`` blue/Left, ``R`` red/Right)."""

    stalks: tuple[str, ...]

    def __post_init__(self):
        for s in self.stalks:
            if not s or set(s) - {"B", "R"}:
                raise ValueError(f"bad Hackenbush stalk {s!r}")

    @classmethod
    def parse(cls, text: str) -> HackenbushString:
        return cls(tuple(text.upper().split()))

    def __str__(self) -> str:
        return " ".join(self.stalks)

    def swapped(self) -> HackenbushString:
        return HackenbushString(tuple(s.translate(_SWAP_BR) for s in self.stalks))


@dataclass(frozen=True)
class TopplingRow:
    """Dominoes left to right; ``L`` belongs to Left, ``R`` to Right."""

    pieces: str

    def __post_init__(self):
        if set(self.pieces) - {"L", "R"}:
            raise ValueError(f"bad Toppling Dominoes row {self.pieces!r}")

    @classmethod
    def parse(cls, text: str) -> TopplingRow:
        return cls(text.strip().upper())

    def __str__(self) -> str:
        return self.pieces

    def swapped(self) -> TopplingRow:
        return TopplingRow(self.pieces.translate(_SWAP_LR))


_SWAP_BR = str.maketrans("BR", "RB")
_SWAP_LR = str.maketrans("LR", "RL")


@functools.lru_cache(maxsize=None)
def stalk_form(stalk: str) -> GameForm:
    # cutting edge i drops it and everything above it
    left = [stalk_form(stalk[:i]) for i, c in enumerate(stalk) if c == "B"]
    right = [stalk_form(stalk[:i]) for i, c in enumerate(stalk) if c == "R"]
    return make_game(left, right)


def hackenbush_to_form(p: HackenbushString) -> GameForm:
    return add_all(stalk_form(s) for s in p.stalks)


@functools.lru_cache(maxsize=None)
def _row_form(row: str) -> GameForm:
    def moves(colour: str) -> list[GameForm]:
        out = []
        for i, c in enumerate(row):
            if c == colour:
                out.append(_row_form(row[i + 1 :]))  # topple leftwards
                out.append(_row_form(row[:i]))  # topple rightwards
        return out

    return make_game(moves("L"), moves("R"))


def toppling_to_form(p: TopplingRow) -> GameForm:
    return _row_form(p.pieces)
