"""Finite generating sets witnessing right coherence of a free monoid.

For a finitely generated right congruence rho and words ``a``, ``b``:

* the annihilator ``r(a rho) = {(u, v) : a u rho a v}`` is generated by its
  pairs with ``|u| + |v| <= 3N`` (see :func:`compute_bounds`);
* the subact ``(a rho)S ∩ (b rho)S`` is generated by those of the classes of
  ``a``, ``b`` and the presentation words that lie in it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal

from .automata import FiniteAutomaton
from .closure import class_automaton, ideal_closure, intersect_right_ideal, member
from .presentation import Presentation, pair_count
from .sequences import find_sequence
from .words import Word, shortlex_key

Mode = Literal["paper", "reduced", "capped"]
MODES = ("paper", "reduced", "capped")
DEFAULT_BUDGET = 100_000


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int, limit: int):
        super().__init__(
            f"enumerating words up to length {limit} needs {required} words, budget is {budget}"
        )
        self.required = required
        self.budget = budget
        self.limit = limit


@dataclass(frozen=True)
class CoherenceBounds:
    K: int
    Kprime: int
    L: int
    N: int
    limit: int

    def to_json(self) -> dict:
        return {"K": self.K, "Kprime": self.Kprime, "L": self.L, "N": self.N, "limit": self.limit}


def compute_bounds(P: Presentation, a: Word) -> CoherenceBounds:
    kprime = max(P.K, len(a)) + 1
    L = 2 * pair_count(P) + 2
    N = kprime * L
    return CoherenceBounds(P.K, kprime, L, N, 3 * N)


@dataclass(frozen=True)
class AnnihilatorGenerators:
    a: Word
    bounds: CoherenceBounds
    pairs: tuple[tuple[Word, Word], ...]
    mode: str
    limit: int
    complete: bool
    cap: int | None = None

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "mode": self.mode,
            "cap": self.cap,
            "limit": self.limit,
            "complete": self.complete,
            "bounds": self.bounds.to_json(),
            "pairs": [list(p) for p in self.pairs],
        }


def _pair_key(pq: tuple[Word, Word]):
    u, v = pq
    return (len(u) + len(v), u, v)


def _orient(u: Word, v: Word) -> tuple[Word, Word]:
    return (u, v) if shortlex_key(u) <= shortlex_key(v) else (v, u)


def related_pairs(P: Presentation, a: Word, limit: int) -> list[tuple[Word, Word]]:
    """Non-reflexive pairs of ``r(a rho)`` with ``|u| + |v| <= limit``.

    Each unordered pair appears once, shortlex-smaller word first, sorted by
    total length then lexicographically.
    """
    groups: list[tuple[FiniteAutomaton, list[Word]]] = []
    for u in P.alphabet.words(limit):
        au = a + u
        for dfa, members in groups:
            if dfa.accepts(au):
                members.append(u)
                break
        else:
            groups.append((class_automaton(P, au).minimize(), [u]))
    out = []
    for _, members in groups:
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if len(u) + len(v) <= limit:
                    out.append(_orient(u, v))
    out.sort(key=_pair_key)
    return out


def _check_budget(P: Presentation, limit: int, budget: int) -> None:
    required = P.alphabet.count_words(limit)
    if required > budget:
        raise BudgetExceeded(required, budget, limit)


class _GeneratedCongruence:
    """Incrementally growing generating set with cached class automata."""

    def __init__(self, alphabet):
        self.alphabet = alphabet
        self.pairs: list[tuple[Word, Word]] = []
        self._P = Presentation(alphabet, ())
        self._cache: dict[Word, FiniteAutomaton] = {}

    def __contains__(self, uv: tuple[Word, Word]) -> bool:
        u, v = uv
        if u == v:
            return True
        dfa = self._cache.get(u)
        if dfa is None:
            dfa = self._cache[u] = class_automaton(self._P, u)
        return dfa.accepts(v)

    def add(self, u: Word, v: Word) -> None:
        self.pairs.append((u, v))
        self._P = Presentation(self.alphabet, self.pairs)
        self._cache.clear()


def annihilator_generators(
    P: Presentation,
    a: Word,
    mode: Mode = "reduced",
    cap: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> AnnihilatorGenerators:
    P.alphabet.check(a)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if cap is not None and cap < 0:
        raise ValueError("cap must be non-negative")
    bounds = compute_bounds(P, a)
    if mode == "capped":
        if cap is None:
            raise ValueError("capped mode needs a cap")
        limit = cap
    elif mode == "paper":
        limit = bounds.limit
    else:
        limit = bounds.limit if cap is None else min(cap, bounds.limit)
    complete = mode != "capped" and limit >= bounds.limit

    if not P.pairs:
        # rho is equality, so r(a rho) is equality too
        return AnnihilatorGenerators(a, bounds, (), mode, limit, True, cap)

    _check_budget(P, limit, budget)
    pairs = related_pairs(P, a, limit)
    if mode == "reduced":
        gen = _GeneratedCongruence(P.alphabet)
        for u, v in pairs:
            if (u, v) not in gen:
                gen.add(u, v)
        pairs = gen.pairs
    return AnnihilatorGenerators(a, bounds, tuple(pairs), mode, limit, complete, cap)


def generated_member(alphabet, G, u: Word, v: Word) -> bool:
    """Is ``(u, v)`` in the right congruence generated by the pairs ``G``?"""
    return member(_presentation_of(alphabet, frozenset(map(tuple, G))), u, v)


@lru_cache(maxsize=256)
def _presentation_of(alphabet, G: frozenset) -> Presentation:
    return Presentation(alphabet, G)


@dataclass(frozen=True)
class IntersectionGenerators:
    a: Word
    b: Word
    reps: tuple[Word, ...]
    empty: bool
    candidates: tuple[Word, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "reps": list(self.reps),
            "empty": self.empty,
            "candidates": list(self.candidates),
        }


def intersection_is_empty(P: Presentation, a: Word, b: Word) -> bool:
    """Decide ``(a rho)S ∩ (b rho)S = ∅`` from the closure of ``a`` followed by anything."""
    return not intersect_right_ideal(P, ideal_closure(P, a), b)


def in_subact(P: Presentation, w: Word, r: Word) -> bool:
    """Does the class of ``w`` lie in the subact generated by the class of ``r``?"""
    return intersect_right_ideal(P, class_automaton(P, w), r)


def intersection_generators(P: Presentation, a: Word, b: Word) -> IntersectionGenerators:
    P.alphabet.check(a, b)
    candidates = sorted({a, b, *P.left_sides()}, key=shortlex_key)
    hits = []
    for w in candidates:
        A = class_automaton(P, w)
        if intersect_right_ideal(P, A, a) and intersect_right_ideal(P, A, b):
            hits.append(w)
    reps: list[Word] = []
    for w in hits:
        if any(in_subact(P, w, r) for r in reps):
            continue
        reps.append(w)
    empty = intersection_is_empty(P, a, b)
    if empty != (not reps):
        raise AssertionError(
            f"emptiness certificate ({empty}) disagrees with generators {reps} for a={a!r}, b={b!r}"
        )
    return IntersectionGenerators(a, b, tuple(reps), empty, tuple(hits))


def oracle_confirms(P: Presentation, u: Word, v: Word, slack: int = 6) -> bool:
    """Breadth-first confirmation of ``u rho v`` with a length cap a little above the endpoints."""
    cap = max(len(u), len(v)) + max(P.K, 1) + slack
    return find_sequence(P, u, v, cap) is not None


def witness_report(
    P: Presentation,
    a: Word,
    b: Word,
    cap: int,
    mode: Mode | None = None,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    """Bundle both witnesses for ``a``, ``b`` with certification checks up to ``cap``."""
    P.alphabet.check(a, b)
    bounds = compute_bounds(P, a)
    if mode is None:
        try:
            ann = annihilator_generators(P, a, "reduced", None, budget)
        except BudgetExceeded:
            ann = annihilator_generators(P, a, "reduced", cap, budget)
    else:
        ann = annihilator_generators(P, a, mode, cap, budget)
    inter = intersection_generators(P, a, b)

    failures: list[str] = []
    # (a) soundness of every generator, by both engines
    unsound = [
        [u, v]
        for u, v in ann.pairs
        if not (member(P, a + u, a + v) and oracle_confirms(P, a + u, a + v))
    ]
    if unsound:
        failures.append(f"unsound annihilator pairs: {unsound}")
    # (b) completeness up to cap
    _check_budget(P, cap, budget)
    G = [tuple(p) for p in ann.pairs]
    missing = [
        [u, v]
        for u, v in related_pairs(P, a, cap)
        if not generated_member(P.alphabet, G, u, v)
    ]
    if missing:
        failures.append(f"pairs not generated: {missing[:10]}")
    # (c) intersection reps, rechecked through the ideal closures
    Ia, Ib = ideal_closure(P, a), ideal_closure(P, b)
    bad_reps = [r for r in inter.reps if not (Ia.accepts(r) and Ib.accepts(r))]
    if bad_reps:
        failures.append(f"reps outside the intersection: {bad_reps}")
    in_both = [w for w in P.alphabet.words(cap) if Ia.accepts(w) and Ib.accepts(w)]
    uncovered = [w for w in in_both if not any(in_subact(P, w, r) for r in inter.reps)]
    if uncovered:
        failures.append(f"classes not covered by reps: {uncovered[:10]}")
    if inter.empty and in_both:
        failures.append("emptiness certificate contradicted")

    return {
        "presentation": P.to_json(),
        "a": a,
        "b": b,
        "cap": cap,
        "bounds": bounds.to_json(),
        "annihilator": ann.to_json(),
        "intersection": inter.to_json(),
        "certification": {
            "annihilator_pairs_checked": len(ann.pairs),
            "related_pairs_up_to_cap": len(related_pairs(P, a, cap)),
            "intersection_words_up_to_cap": len(in_both),
            "failures": failures,
            "passed": not failures,
        },
    }


def render_text(report: dict) -> str:
    """Aligned plain-text rendering of :func:`witness_report` output."""

    def fmt(w):
        return repr(w) if w else "ε"

    ann = report["annihilator"]
    inter = report["intersection"]
    cert = report["certification"]
    pres = report["presentation"]
    rows = [
        ("alphabet", " ".join(pres["alphabet"])),
        ("pairs", ", ".join(f"{fmt(p)}~{fmt(q)}" for p, q in pres["pairs"]) or "none"),
        ("a", fmt(report["a"])),
        ("b", fmt(report["b"])),
        ("K, K', L, N", "{K}, {Kprime}, {L}, {N}".format(**report["bounds"])),
        ("3N", str(report["bounds"]["limit"])),
        ("annihilator mode", ann["mode"]),
        ("enumerated up to", str(ann["limit"])),
        ("complete", "yes" if ann["complete"] else f"certified up to {report['cap']} only"),
        ("generators", ", ".join(f"({fmt(u)}, {fmt(v)})" for u, v in ann["pairs"]) or "none"),
        ("intersection", "empty" if inter["empty"] else ", ".join(fmt(r) for r in inter["reps"])),
        ("certification", "pass" if cert["passed"] else "FAIL"),
    ]
    width = max(len(k) for k, _ in rows)
    lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
    lines += [f"{'':{width}}  {f}" for f in cert["failures"]]
    return "\n".join(lines) + "\n"
