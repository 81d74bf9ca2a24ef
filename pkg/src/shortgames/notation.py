"""Brace notation: a small recursive-descent parser and the form printer.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := "-" term | atom
    atom   := number | "*" | "^" | "v" | "{" list "|" list "}"
    list   := (expr ("," expr)*)?
    number := integer ("/" power-of-two)?

Numbers elaborate to canonical forms; ``+`` and ``-`` build unfolded literal
sums, so ``1/2+1/2`` is the literal form of 2/2, not the form of 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .dyadics import Dyadic, canonical_dyadic_form, is_canonical_dyadic_member
from .forms import DOWN, STAR, UP, GameForm, add, conjugate, make_game


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


@dataclass(frozen=True)
class Num:
    value: Dyadic


@dataclass(frozen=True)
class Atom:
    name: str  # "*", "^" or "v"


@dataclass(frozen=True)
class Braces:
    left: tuple["Expr", ...]
    right: tuple["Expr", ...]


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Sum:
    terms: tuple["Expr", ...]


Expr = Union[Num, Atom, Braces, Neg, Sum]

_SINGLE = set("+-*^v{}|,/")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    """(kind, text, position) triples; kinds are ``int``, a symbol, or ``end``."""
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif c in _SINGLE:
            toks.append((c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", text, i)
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.toks[self.i][0]

    def error(self, message: str) -> ParseError:
        kind, tok, pos = self.toks[self.i]
        found = "end of input" if kind == "end" else repr(tok)
        return ParseError(f"{message}, found {found}", self.text, pos)

    def take(self, kind: str) -> str:
        if self.kind != kind:
            raise self.error(f"expected {kind!r}")
        tok = self.toks[self.i][1]
        self.i += 1
        return tok

    def parse(self) -> Expr:
        e = self.expr()
        if self.kind != "end":
            raise self.error("expected '+', '-' or end of input")
        return e

    def expr(self) -> Expr:
        terms = [self.term()]
        while self.kind in ("+", "-"):
            op = self.take(self.kind)
            t = self.term()
            terms.append(Neg(t) if op == "-" else t)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Expr:
        if self.kind == "-":
            self.take("-")
            return Neg(self.term())
        return self.atom()

    def atom(self) -> Expr:
        k = self.kind
        if k == "int":
            return self.number()
        if k in ("*", "^", "v"):
            return Atom(self.take(k))
        if k == "{":
            self.take("{")
            left = self.options("|")
            self.take("|")
            right = self.options("}")
            if self.kind != "}":
                raise self.error("expected ',' or '}'")
            self.take("}")
            return Braces(left, right)
        raise self.error("expected a number, '*', '^', 'v' or '{'")

    def options(self, closer: str) -> tuple[Expr, ...]:
        if self.kind == closer:
            return ()
        out = [self.expr()]
        while self.kind == ",":
            self.take(",")
            out.append(self.expr())
        if self.kind != closer:
            raise self.error(f"expected ',' or {closer!r}")
        return tuple(out)

    def number(self) -> Num:
        num = int(self.take("int"))
        if self.kind != "/":
            return Num(Dyadic(num))
        self.take("/")
        pos = self.toks[self.i][2]
        q = int(self.take("int"))
        if q <= 0 or q & (q - 1):
            raise ParseError(f"denominator {q} is not a power of two", self.text, pos)
        return Num(Dyadic.of(num, q.bit_length() - 1))


def parse(text: str) -> Expr:
    return _Parser(text).parse()


_ATOMS = {"*": STAR, "^": UP, "v": DOWN}


def elaborate(e: Expr) -> GameForm:
    if isinstance(e, Num):
        return canonical_dyadic_form(e.value)
    if isinstance(e, Atom):
        return _ATOMS[e.name]
    if isinstance(e, Braces):
        return make_game([elaborate(o) for o in e.left], [elaborate(o) for o in e.right])
    if isinstance(e, Neg):
        return conjugate(elaborate(e.arg))
    total = elaborate(e.terms[0])
    for t in e.terms[1:]:
        total = add(total, elaborate(t))
    return total


def parse_game(text: str) -> GameForm:
    return elaborate(parse(text))


def print_form(g: GameForm, shorthand: bool = True) -> str:
    """Brace rendering, options in structural-key order.

    The zero game prints as ``0``. With ``shorthand``, canonical dyadics print
    as ``m`` or ``m/q`` and star, up and down as ``*``, ``^``, ``v``.
    """
    if g.is_zero:
        return "0"
    if shorthand:
        x = is_canonical_dyadic_member(g)
        if x is not None:
            return str(x)
        for name, atom in _ATOMS.items():
            if g is atom:
                return name
    left = ",".join(print_form(o, shorthand) for o in g.left)
    right = ",".join(print_form(o, shorthand) for o in g.right)
    return f"{{{left}|{right}}}"
