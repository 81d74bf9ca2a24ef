import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import random

from conftest import random_form, random_forms
from shortgames.dyadics import Dyadic, canonical_dyadic_form, literal_dyadic_form
from shortgames.forms import DOWN, STAR, UP, ZERO, add, conjugate, make_game
from shortgames.notation import Atom, Braces, Neg, Num, ParseError, Sum, parse, parse_game, print_form
from shortgames.numbers import value_of
from shortgames.order import Relation, relation


def test_parse_ast():
    assert parse("{1|2}") == Braces((Num(Dyadic(1)),), (Num(Dyadic(2)),))
    assert parse(" * + ^ - v ") == Sum((Atom("*"), Atom("^"), Neg(Atom("v"))))
    assert parse("{|}") == Braces((), ())
    assert parse("-3/4") == Neg(Num(Dyadic(3, 2)))
    assert parse("6/4") == Num(Dyadic(3, 1))


def test_elaboration_examples():
    assert value_of(parse_game("{1|2}")) == Dyadic(3, 1)
    assert relation(parse_game("{*|*}"), ZERO) is Relation.EQUAL
    assert parse_game("1/2+1/2+1/2") is literal_dyadic_form(3, 1)
    assert parse_game("1/2") is literal_dyadic_form(1, 1)
    assert parse_game("3/2") is canonical_dyadic_form(Dyadic(3, 1))
    assert parse_game("*") is STAR and parse_game("^") is UP and parse_game("v") is DOWN
    assert parse_game("{0|}-{0|}") is add(make_game([ZERO]), make_game((), [ZERO]))
    assert parse_game("-{1|2}") is conjugate(parse_game("{1|2}"))
    assert parse_game("{|}") is ZERO and parse_game("0") is ZERO
    assert parse_game("^+*") is add(UP, STAR)


@pytest.mark.parametrize("text,pos,fragment", [
    ("{1|2", 4, "expected ',' or '}'"),
    ("{1,2}", 4, "expected ',' or '|'"),
    ("1/3", 2, "not a power of two"),
    ("1 2", 2, "expected '+', '-' or end of input"),
    ("{1|2}}", 5, "end of input"),
    ("", 0, "expected a number"),
    ("2 & 3", 2, "unexpected character"),
    ("1/0", 2, "not a power of two"),
])
def test_parse_errors(text, pos, fragment):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.pos == pos
    assert fragment in str(e.value)


def test_print_examples():
    assert print_form(ZERO) == "0" and print_form(ZERO, shorthand=False) == "0"
    g = canonical_dyadic_form(Dyadic(3, 1))
    assert print_form(g) == "3/2"
    assert print_form(g, shorthand=False) == "{{0|}|{{0|}|}}"
    assert print_form(make_game([ZERO, STAR], [ZERO])) == "{0,*|0}"
    assert print_form(canonical_dyadic_form(Dyadic(-5, 2))) == "-5/4"
    assert print_form(literal_dyadic_form(2, 1)) == "{1/2|{1,1/2|2}}"


def test_print_round_trip_examples():
    g = parse_game("{0,{*|*}|{0|}}")
    for shorthand in (True, False):
        assert parse_game(print_form(g, shorthand)) is g


def test_print_round_trip_random():
    for g in random_forms(61, 1000, 3):
        assert parse_game(print_form(g, True)) is g
        assert parse_game(print_form(g, False)) is g


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.booleans())
def test_print_round_trip_property(seed, shorthand):
    g = random_form(random.Random(seed), 4, max_options=3)
    assert parse_game(print_form(g, shorthand)) is g
