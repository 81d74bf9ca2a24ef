import random

import pytest

from shortgames.explore import enumerate_forms
from shortgames.forms import make_game

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def random_form(rng: random.Random, day: int, max_options: int = 2, pool=None):
    """A random literal form of birthday <= ``day``, subpositions not reduced."""
    if day == 0:
        return make_game()
    pool = pool if pool is not None else {}
    lower = pool.setdefault(day - 1, [random_form(rng, day - 1, max_options, pool) for _ in range(6)] + [make_game()])

    def side():
        return [rng.choice(lower) if rng.random() < 0.7 else random_form(rng, day - 1, max_options)
                for _ in range(rng.randint(0, max_options))]

    return make_game(side(), side())


def random_forms(seed: int, n: int, day: int, max_options: int = 2):
    rng = random.Random(seed)
    return [random_form(rng, rng.randint(0, day), max_options) for _ in range(n)]


def brute_outcome_bits(g):
    """(Left wins moving first, Right wins moving first) by plain minimax, no memo."""
    def left_first(h):
        return any(not right_first(hl) for hl in h.left)

    def right_first(h):
        return any(not left_first(hr) for hr in h.right)

    return left_first(g), right_first(g)


@pytest.fixture(scope="session")
def day1():
    return enumerate_forms(1, 2)


@pytest.fixture(scope="session")
def day2():
    return enumerate_forms(2, 2)


@pytest.fixture(scope="session")
def day3():
    return enumerate_forms(3, 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
