"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 enumeration budget
exceeded, 3 invariant violation (a counterexample was found).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .closure import class_automaton, member
from .coherence import (
    DEFAULT_BUDGET,
    MODES,
    BudgetExceeded,
    annihilator_generators,
    intersection_generators,
    render_text,
    witness_report,
)
from .presentation import BUNDLED, Presentation, bundled
from .sequences import (
    Branch1,
    EmptyU,
    HSequence,
    InvariantViolation,
    PreconditionError,
    Quadruple,
    factorize,
    find_sequence,
    reduce_step,
)
from .verify import run_verification
from .words import AlphabetError

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_presentation(spec: str | None) -> Presentation:
    if spec is None:
        raise UsageError("--presentation is required for this command")
    if spec.startswith("bundled:"):
        name = spec.split(":", 1)[1]
        if name not in BUNDLED:
            raise UsageError(f"unknown bundled presentation {name!r}; known: {', '.join(BUNDLED)}")
        return bundled(name)
    try:
        return Presentation.load(spec)
    except OSError as exc:
        raise UsageError(f"cannot read presentation: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"presentation is not valid JSON: {exc}") from None


def _load_sequence(path: str) -> HSequence:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return HSequence.from_json(json.loads(text))
    except OSError as exc:
        raise UsageError(f"cannot read sequence: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"sequence is not valid JSON: {exc}") from None


def cmd_member(args) -> int:
    P = _load_presentation(args.presentation)
    verdict = member(P, args.u, args.v)
    if args.format == "json":
        _emit(args, _dumps({"u": args.u, "v": args.v, "member": verdict}))
    else:
        _emit(args, f"{str(verdict).lower()}\n")
    return EXIT_OK


def cmd_class(args) -> int:
    P = _load_presentation(args.presentation)
    A = class_automaton(P, args.word).minimize()
    if args.format == "dot":
        _emit(args, A.to_dot())
    elif args.format == "json":
        _emit(args, _dumps(A.to_json()))
    else:
        finite = A.is_finite()
        words = A.words(max_len=args.cap if args.cap is not None else 8, limit=200)
        shown = ", ".join(repr(w) for w in words)
        _emit(args, f"states {A.n_states}, {'finite' if finite else 'infinite'}\n{shown}\n")
    return EXIT_OK


def cmd_trace(args) -> int:
    P = _load_presentation(args.presentation)
    q = Quadruple(args.a, args.u, args.b, args.v)
    P.alphabet.check(q.a, q.u, q.b, q.v)
    cap = args.max_len if args.max_len is not None else max(len(q.left), len(q.right)) + 2 * max(P.K, 1) + 2
    s = find_sequence(P, q.left, q.right, cap, args.max_steps, context=q)
    if s is None:
        _emit(args, _dumps({"found": False, "max_word_len": cap, "max_steps": args.max_steps}))
        return EXIT_OK
    _emit(args, _dumps(s.to_json()))
    return EXIT_OK


def _outcome_json(out) -> dict:
    if isinstance(out, Branch1):
        return {"branch": 1}
    return {"branch": 2, "i": out.i, "x": out.x, "truncated": out.truncated.to_json()}


def cmd_reduce(args) -> int:
    P = _load_presentation(args.presentation)
    s = _load_sequence(args.sequence)
    _emit(args, _dumps(_outcome_json(reduce_step(P, s))))
    return EXIT_OK


def cmd_factorize(args) -> int:
    P = _load_presentation(args.presentation)
    s = _load_sequence(args.sequence)
    f = factorize(P, s)
    if isinstance(f, EmptyU):
        _emit(args, _dumps({"empty_u": True}))
    else:
        _emit(args, _dumps({"empty_u": False, "parts": list(f.parts), "indices": list(f.indices)}))
    return EXIT_OK


def cmd_annihilator(args) -> int:
    P = _load_presentation(args.presentation)
    g = annihilator_generators(P, args.a, args.mode or "reduced", args.cap, args.budget)
    _emit(args, _dumps(g.to_json()))
    return EXIT_OK


def cmd_intersect(args) -> int:
    P = _load_presentation(args.presentation)
    _emit(args, _dumps(intersection_generators(P, args.a, args.b).to_json()))
    return EXIT_OK


def cmd_report(args) -> int:
    P = _load_presentation(args.presentation)
    cap = args.cap if args.cap is not None else 5
    report = witness_report(P, args.a, args.b, cap, args.mode, args.budget)
    if args.format == "text":
        _emit(args, render_text(report))
    else:
        _emit(args, _dumps(report))
    return EXIT_OK if report["certification"]["passed"] else EXIT_INVARIANT


def cmd_verify(args) -> int:
    if args.presentation:
        presentations = {args.presentation: _load_presentation(args.presentation)}
    else:
        presentations = bundled()
    cap = args.cap if args.cap is not None else 5
    report = run_verification(presentations, args.seed, cap, args.samples).to_json()
    _emit(args, _dumps(report))
    if report["failures"]:
        sys.stderr.write("counterexample:\n" + _dumps(report["failures"][0]))
        return EXIT_INVARIANT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--presentation", help="presentation JSON file, or bundled:NAME")
    common.add_argument("--format", choices=("json", "dot", "text"), default=None)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--cap", type=int, help="length cap")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max words to enumerate")
    common.add_argument("--mode", choices=MODES)
    common.add_argument("--seed", type=int, default=1)

    parser = _Parser(prog="freecoh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("member", parents=[common], help="decide u rho v")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("class", parents=[common], help="minimal automaton of a rho-class")
    p.add_argument("word")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("trace", parents=[common], help="find a rewriting chain from a u to b v")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--a", default="", help="left context word")
    p.add_argument("--b", default="", help="right context word")
    p.add_argument("--max-len", type=int, help="word length cap for the search")
    p.add_argument("--max-steps", type=int)
    p.set_defaults(func=cmd_trace)

    for name, func, text in (
        ("reduce", cmd_reduce, "one reduction step of an irreducible sequence"),
        ("factorize", cmd_factorize, "factorise u along an irreducible sequence"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("sequence", help="sequence JSON file, or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("annihilator", parents=[common], help="generators of r(a rho)")
    p.add_argument("a", nargs="?", default="")
    p.set_defaults(func=cmd_annihilator)

    p = sub.add_parser("intersect", parents=[common], help="generators of (a rho)S ∩ (b rho)S")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("report", parents=[common], help="both witnesses with certification")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", parents=[common], help="seeded randomized property checks")
    p.add_argument("--samples", type=int, default=40, help="random instances per presentation")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is not None and args.cap < 0:
        parser.error("--cap must be non-negative")
    if args.budget < 0:
        parser.error("--budget must be non-negative")
    if args.command == "annihilator" and args.mode == "capped" and args.cap is None:
        parser.error("--mode capped needs --cap")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"freecoh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AlphabetError, PreconditionError, ValueError) as exc:
        print(f"freecoh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"freecoh: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"freecoh: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
