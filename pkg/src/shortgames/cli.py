"""Command-line interface."""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from typing import Optional, Sequence

from .dyadics import Dyadic
from .explore import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    distinct_values,
    enumerate_forms,
    infinitesimal_right_gaps,
    scan_weak_zugzwangs,
)
from .forms import GameForm
from .notation import ParseError, parse_game, print_form
from .numbers import Classification, classify, fitting_contains, simplest_fitting
from .order import relation
from .reduction import canonicalize
from .rulesets import HackenbushString, TopplingRow, hackenbush_to_form, toppling_to_form

EXIT_OK, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # game expressions such as "-3/4" or "-{1|2}" are positionals, not flags
        self._negative_number_matcher = re.compile(r"^-(?!-)")

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def evaluate(g: GameForm) -> str:
    """The value if ``g`` is a number, else its canonical form."""
    v = simplest_fitting(g)
    return str(v) if v is not None else print_form(canonicalize(g))


def classification_dict(g: GameForm, c: Optional[Classification] = None) -> dict:
    c = c or classify(g)
    return {
        "outcome": c.outcome.value,
        "birthday": c.birthday,
        "is_number": c.is_number,
        "value": None if c.value is None else str(c.value),
        "is_c_number": c.is_c_number,
        "is_s_number": c.is_s_number,
        "is_zugzwang": c.is_zugzwang,
        "is_weak_zugzwang": c.is_weak_zugzwang,
        "is_dicotic": c.is_dicotic,
        "is_infinitesimal": c.is_infinitesimal,
        "canonical": print_form(canonicalize(g)),
    }


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def cmd_eval(args) -> None:
    print(evaluate(parse_game(args.expr)))


def cmd_canon(args) -> None:
    print(print_form(canonicalize(parse_game(args.expr))))


def cmd_cmp(args) -> None:
    print(relation(parse_game(args.left), parse_game(args.right)).symbol)


def cmd_classify(args) -> None:
    print(_dumps(classification_dict(parse_game(args.expr))))


def cmd_fitting(args) -> None:
    g = parse_game(args.expr)
    if args.probe is not None:
        try:
            x = Dyadic.parse(args.probe)
        except ValueError as e:
            raise UsageError(str(e)) from None
        print("true" if fitting_contains(g, x) else "false")
    else:
        v = simplest_fitting(g)
        print("empty" if v is None else str(v))


def cmd_ruleset(args) -> None:
    try:
        if args.game == "hackenbush":
            g = hackenbush_to_form(HackenbushString.parse(args.position))
        else:
            g = toppling_to_form(TopplingRow.parse(args.position))
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(evaluate(g))
    print(print_form(g, shorthand=False))


def cmd_scan(args) -> None:
    t0 = time.perf_counter()
    forms = enumerate_forms(args.day, args.max_options, args.budget)
    findings = 0
    if args.problem == "weak-zugzwang":
        for g in scan_weak_zugzwangs(args.day, args.max_options, args.budget):
            findings += 1
            print(_dumps({"game": print_form(g), "literal": print_form(g, False)}), flush=True)
    else:
        for g in forms:
            if args.single_right_option and len(g.right) != 1:
                continue
            for g_, gr in infinitesimal_right_gaps(g):
                findings += 1
                print(_dumps({"game": print_form(g_), "right_option": print_form(gr)}), flush=True)
    print(
        _dumps(
            {
                "summary": True,
                "problem": args.problem,
                "day": args.day,
                "max_options": args.max_options,
                "forms": len(forms),
                "findings": findings,
                "seconds": round(time.perf_counter() - t0, 3),
            }
        )
    )


def cmd_enumerate(args) -> None:
    forms = enumerate_forms(args.day, args.max_options, args.budget)
    if args.stats:
        print(_dumps({"day": args.day, "max_options": args.max_options, "forms": len(forms), "values": distinct_values(forms)}))
    else:
        for g in forms:
            print(print_form(g))


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="shortgames", description="Values, canonical forms and number predicates of short partizan games.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    s = sub.add_parser("eval", help="value if a number, else canonical form")
    s.add_argument("expr")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("canon", help="canonical form")
    s.add_argument("expr")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("cmp", help="compare two games: < > = ||")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_cmp)

    s = sub.add_parser("classify", help="JSON classification")
    s.add_argument("expr")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("fitting", help="fitting-set probe or simplest element")
    s.add_argument("expr")
    s.add_argument("--probe", metavar="DYADIC")
    s.set_defaults(func=cmd_fitting)

    s = sub.add_parser("ruleset", help="evaluate a Hackenbush or Toppling Dominoes position")
    s.add_argument("game", choices=["hackenbush", "toppling"])
    s.add_argument("position")
    s.set_defaults(func=cmd_ruleset)

    def universe_args(s):
        s.add_argument("--day", type=int, required=True)
        s.add_argument("--max-options", type=int, default=2)
        s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help=argparse.SUPPRESS)

    s = sub.add_parser("scan", help="search the small universe for open-problem candidates")
    s.add_argument("problem", choices=["weak-zugzwang", "inf-right-gap"])
    universe_args(s)
    s.add_argument("--single-right-option", action="store_true", help="inf-right-gap: only games with one Right option")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("enumerate", help="list the small universe")
    universe_args(s)
    s.add_argument("--stats", action="store_true")
    s.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except (UsageError, ParseError) as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"resource cap exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
