from .dyadics import Dyadic, canonical_dyadic_form, literal_dyadic_form, literal_integer_form
from .forms import DOWN, ONE, STAR, UP, ZERO, GameForm, add, conjugate, followers, make_game
from .numbers import classify, is_number, simplest_fitting, value_of
from .order import Outcome, Relation, geq, outcome, relation
from .reduction import canonicalize, is_canonical

__all__ = [
    "DOWN", "ONE", "STAR", "UP", "ZERO",
    "Dyadic", "GameForm", "Outcome", "Relation",
    "add", "canonical_dyadic_form", "canonicalize", "classify", "conjugate",
    "followers", "geq", "is_canonical", "is_number", "literal_dyadic_form",
    "literal_integer_form", "make_game", "outcome", "relation",
    "simplest_fitting", "value_of",
]
