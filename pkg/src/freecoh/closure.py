"""Deciding the right congruence generated by a presentation.

A pair ``(c, d)`` of the presentation rewrites ``c t`` to ``d t``.  The
reflexive-transitive closure of this prefix-rewriting relation is exactly
the right congruence rho (the pairs are symmetric), so rho-classes and right
ideal closures are regular and can be computed by saturation.

Construction
------------
Words are treated as pushdown stacks, first letter on top, with a bottom
marker appended.  Each rule ``(c, d)`` is normalized into micro-steps of a
pushdown system whose control states are

* ``MAIN`` (control 0), where configurations mean "a word of the language";
* a pop state for every non-empty proper prefix of a left side: reading
  ``x`` from the pop state of ``p`` moves to the pop state of ``p x``;
* a push state for every non-empty prefix ``q`` of a right side, meaning
  "``q`` is still to be pushed"; it pushes the last letter of ``q`` on top
  of any symbol (the bottom marker included, so ``c = ""`` rewrites every
  word, the empty one too) and moves to the push state of ``q`` minus that
  letter, the empty prefix being ``MAIN``.

Popping the last letter of ``c`` moves to the push state of ``d`` (``MAIN``
when ``d`` is empty); a rule with ``c = ""`` pushes from ``MAIN`` directly.
States are shared between rules through these prefix tries.  A run
``MAIN -> ... -> MAIN`` is exactly one rewrite ``c t -> d t``.  All rules then have the shape
``<p, x> -> <p', "">`` or ``<p, x> -> <p', y x>``, and the standard
worklist post* saturation applies: it only adds transitions over a state
set fixed in advance (seed states, one fresh state per push target, a
final bottom state), so it terminates in time polynomial in the seed size
and the total rule length.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .automata import FiniteAutomaton
from .presentation import Presentation
from .words import AlphabetError, Word

MAIN = 0
EPS = -1


@dataclass(frozen=True)
class ClosureResult:
    automaton: FiniteAutomaton
    saturation_rounds: int
    added_transitions: int


class _PushdownRules:
    """Micro-step normalization of a presentation (see module docstring)."""

    def __init__(self, P: Presentation):
        self.n_symbols = len(P.alphabet)
        self.bottom = self.n_symbols
        idx = P.alphabet.index
        controls: dict[tuple[str, Word], int] = {}

        def pop_state(prefix: Word) -> int:
            if not prefix:
                return MAIN
            return controls.setdefault(("pop", prefix), len(controls) + 1)

        def push_state(pending: Word) -> int:
            if not pending:
                return MAIN
            return controls.setdefault(("push", pending), len(controls) + 1)

        # pops[(p, symbol)] -> {p'} ; pushes[p] -> {(p', symbol)} for any top
        pops: dict[tuple[int, int], set[int]] = {}
        pushes: dict[int, set[tuple[int, int]]] = {}
        for c, d in P.sorted_pairs():
            for k in range(len(c)):
                nxt = push_state(d) if k == len(c) - 1 else pop_state(c[: k + 1])
                pops.setdefault((pop_state(c[:k]), idx(c[k])), set()).add(nxt)
            if not c:
                # nothing to pop: push the last letter of d straight from MAIN
                pushes.setdefault(MAIN, set()).add((push_state(d[:-1]), idx(d[-1])))
        todo = [key for key in controls if key[0] == "push"]
        while todo:
            key = todo.pop()
            pending = key[1]
            if len(pending) > 1 and ("push", pending[:-1]) not in controls:
                todo.append(("push", pending[:-1]))
            pushes.setdefault(controls[key], set()).add((push_state(pending[:-1]), idx(pending[-1])))
        self.n_controls = len(controls) + 1
        self.pops = {k: sorted(v) for k, v in pops.items()}
        self.pushes = {k: sorted(v) for k, v in pushes.items()}


@lru_cache(maxsize=256)
def _rules_for(P: Presentation) -> _PushdownRules:
    return _PushdownRules(P)


def closure_automaton(P: Presentation, seed: FiniteAutomaton) -> ClosureResult:
    """Smallest language containing L(seed) closed under ``c t -> d t``."""
    if seed.alphabet != P.alphabet:
        raise AlphabetError(f"seed alphabet {seed.alphabet!r} differs from {P.alphabet!r}")
    rules = _rules_for(P)
    idx = P.alphabet.index
    bottom = rules.bottom
    nc = rules.n_controls
    # P-automaton states: controls, then seed states, then FIN, then push targets
    offset = nc
    fin = offset + seed.n_states
    n_states = fin + 1
    push_state: dict[tuple[int, int], int] = {}

    rel: set[tuple[int, int, int]] = set()
    out: dict[int, set[tuple[int, int]]] = {}
    eps_into: dict[int, set[int]] = {}
    work: deque[tuple[int, int, int]] = deque()

    def add_rel(t):
        if t not in rel:
            rel.add(t)
            s, a, q = t
            if a == EPS:
                eps_into.setdefault(q, set()).add(s)
            else:
                out.setdefault(s, set()).add((a, q))
            return True
        return False

    initial_trans = set()
    for s, ch, t in seed.transitions:
        a = idx(ch)
        if s in seed.initial:
            initial_trans.add((MAIN, a, offset + t))
        add_rel((offset + s, a, offset + t))
    for f in seed.finals:
        add_rel((offset + f, bottom, fin))
        if f in seed.initial:
            initial_trans.add((MAIN, bottom, fin))
    work.extend(sorted(initial_trans))
    base = len(rel)

    rounds = 0
    while work:
        t = work.popleft()
        if t in rel:
            continue
        rounds += 1
        add_rel(t)
        p, a, q = t
        if a != EPS:
            for p2 in rules.pops.get((p, a), ()):
                work.append((p2, EPS, q))
            for p2, a1 in rules.pushes.get(p, ()):
                mid = push_state.get((p2, a1))
                if mid is None:
                    mid = push_state[(p2, a1)] = n_states
                    n_states += 1
                work.append((p2, a1, mid))
                if add_rel((mid, a, q)):
                    for p3 in list(eps_into.get(mid, ())):
                        work.append((p3, a, q))
        else:
            for a2, q2 in list(out.get(q, ())):
                work.append((p, a2, q2))

    # Back to an ordinary NFA read from MAIN.  Only control states carry
    # epsilon moves and no transition enters a control state, so epsilon
    # moves can only be taken first.
    symbols = P.alphabet.symbols
    initial = {MAIN} | {q for (s, a, q) in rel if s == MAIN and a == EPS}
    finals = {s for (s, a, q) in rel if a == bottom}
    trans = []
    for s, a, q in rel:
        if a == EPS or a == bottom:
            continue
        if s != MAIN and s < nc:
            continue
        trans.append((s, symbols[a], q))
    nfa = FiniteAutomaton(P.alphabet, n_states, initial, finals, trans).trim()
    return ClosureResult(nfa, rounds, len(rel) - base)


def class_automaton(P: Presentation, w: Word) -> FiniteAutomaton:
    """Automaton accepting exactly the rho-class of ``w``."""
    P.alphabet.check(w)
    return _class_automaton(P, w)


@lru_cache(maxsize=4096)
def _class_automaton(P: Presentation, w: Word) -> FiniteAutomaton:
    return closure_automaton(P, FiniteAutomaton.word(P.alphabet, w)).automaton


def ideal_closure(P: Presentation, x: Word) -> FiniteAutomaton:
    """All words whose rho-class meets ``x`` followed by anything."""
    P.alphabet.check(x)
    return _ideal_closure(P, x)


@lru_cache(maxsize=1024)
def _ideal_closure(P: Presentation, x: Word) -> FiniteAutomaton:
    return closure_automaton(P, FiniteAutomaton.prefix_language(P.alphabet, x)).automaton


def member(P: Presentation, u: Word, v: Word) -> bool:
    P.alphabet.check(u, v)
    if u == v:
        return True
    return _class_automaton(P, u).accepts(v)


def intersect_right_ideal(P: Presentation, A: FiniteAutomaton, x: Word) -> bool:
    """True iff L(A) contains a word beginning with ``x``."""
    if A.alphabet != P.alphabet:
        raise AlphabetError(f"automaton alphabet {A.alphabet!r} differs from {P.alphabet!r}")
    P.alphabet.check(x)
    return A.has_word_with_prefix(x)


def one_step_rewrites(P: Presentation, w: Word) -> list[Word]:
    """Every ``d t`` with ``w = c t`` and ``(c, d)`` a pair of ``P``."""
    out = []
    for c, d in P.sorted_pairs():
        if w.startswith(c):
            out.append(d + w[len(c):])
    return out
