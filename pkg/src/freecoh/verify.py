"""Seeded randomized checks of the closure engine and the sequence machinery."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .closure import class_automaton, member, one_step_rewrites
from .presentation import Presentation
from .sequences import (
    Branch1,
    EmptyU,
    HSequence,
    InvariantViolation,
    Quadruple,
    factorize,
    find_sequence,
    is_irreducible_sequence,
    reachable_words,
    reduce_step,
    verify_sequence,
)
from .words import longest_common_suffix


def random_word(rng: random.Random, alphabet, max_len: int) -> str:
    n = rng.randint(0, max_len)
    return "".join(rng.choice(alphabet.symbols) for _ in range(n))


def random_presentation(rng: random.Random, symbols="ab", max_rules=2, max_side=2) -> Presentation:
    from .words import Alphabet

    alphabet = Alphabet(symbols)
    rules = [
        (random_word(rng, alphabet, max_side), random_word(rng, alphabet, max_side))
        for _ in range(rng.randint(0, max_rules))
    ]
    return Presentation(alphabet, rules)


def random_irreducible_sequence(
    P: Presentation, rng: random.Random, max_len: int, tries: int = 20
) -> HSequence | None:
    """Oracle search between two words of one class, split into an irreducible context."""
    for _ in range(tries):
        w = random_word(rng, P.alphabet, max_len)
        cls_words = class_automaton(P, w).words(max_len=max_len + P.K, limit=60)
        target = rng.choice(cls_words)
        s = find_sequence(P, w, target, max_word_len=max_len + 2 * max(P.K, 1) + 2)
        if s is None:
            continue
        i = rng.randint(0, len(w))
        j = rng.randint(0, len(target))
        tails_mid = [t for _, _, t in s.steps]
        if "" not in tails_mid and i != len(w) and j != len(target):
            if rng.random() < 0.5:
                i = len(w)
            else:
                j = len(target)
        q = Quadruple(w[:i], w[i:], target[:j], target[j:])
        return s.with_context(q)
    return None


def check_reduction(P: Presentation, s: HSequence) -> list[str]:
    """Violated guarantees of one reduction step (empty list when all hold)."""
    errors = []
    q = s.context
    bound = max(len(q.b), P.K)
    try:
        out = reduce_step(P, s)
    except InvariantViolation as exc:
        return [str(exc)]
    tails = s.tails()
    if isinstance(out, Branch1):
        if len(q.u) > bound:
            errors.append("branch 1: |u| exceeds bound")
        if not (q.u == "" or tails[1] == ""):
            errors.append("branch 1: neither u nor t_1 is empty")
        return errors
    i, x, tr = out.i, out.x, out.truncated
    n = len(s.steps)
    if not 1 <= i <= n:
        errors.append(f"branch 2: index {i} out of range")
        return errors
    if tails[i + 1] != "" or any(tails[j] == "" for j in range(2, i + 1)):
        errors.append("branch 2: index is not the least with t_(i+1) empty")
    if not 0 < len(x) <= bound:
        errors.append("branch 2: |x| outside bound")
    if not verify_sequence(P, tr):
        errors.append("branch 2: truncated sequence invalid")
    elif not is_irreducible_sequence(tr):
        errors.append("branch 2: truncated sequence reducible")
    if tr.context != Quadruple(q.a, q.u[: len(q.u) - len(x)], s.c(i), tails[i][: len(tails[i]) - len(x)]):
        errors.append("branch 2: truncated context wrong")
    if not member(P, q.a + q.u, s.c(i + 1)):
        errors.append("branch 2: a u not related to c_(i+1)")
    return errors


def check_factorization(P: Presentation, s: HSequence) -> list[str]:
    q = s.context
    try:
        f = factorize(P, s)
    except InvariantViolation as exc:
        return [str(exc)]
    if isinstance(f, EmptyU):
        return [] if q.u == "" else ["EmptyU for nonempty u"]
    errors = []
    n = len(s.steps)
    bound = max(len(q.b), P.K)
    if f.recompose() != q.u:
        errors.append("parts do not recompose u")
    idx = f.indices
    if any(not 1 <= l <= n + 1 for l in idx):
        errors.append("index out of [1, n+1]")
    if any(x <= y for x, y in zip(idx, idx[1:])):
        errors.append("indices not strictly decreasing")
    if any(not 0 < len(x) <= bound for x in f.parts):
        errors.append("part length outside bound")
    rest = q.a + q.u
    for x, l in zip(f.parts, idx):
        if not member(P, rest, s.c(l)):
            errors.append(f"condition (ii) fails at index {l}")
        rest = rest[: len(rest) - len(x)]
    return errors


@dataclass
class VerifyReport:
    seed: int
    cap: int
    instances: int = 0
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def bump(self, name: str, n: int = 1) -> None:
        self.checks[name] = self.checks.get(name, 0) + n

    def fail(self, name: str, detail: dict) -> None:
        self.failures.append({"check": name, **detail})

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "cap": self.cap,
            "instances": self.instances,
            "checks": dict(sorted(self.checks.items())),
            "failures": self.failures,
            "passed": not self.failures,
        }


def run_verification(
    presentations: dict[str, Presentation],
    seed: int,
    cap: int,
    samples: int = 40,
) -> VerifyReport:
    rng = random.Random(seed)
    report = VerifyReport(seed, cap)
    for name in sorted(presentations):
        P = presentations[name]
        words = list(P.alphabet.words(cap))
        oracle_cap = cap + 2 * max(P.K, 1) + 2
        for _ in range(samples if cap > 0 else 0):
            report.instances += 1
            u = rng.choice(words)
            # dual engine: oracle true must imply member true, and conversely for small words
            reach = reachable_words(P, u, oracle_cap)
            A = class_automaton(P, u)
            for v in words:
                found = v in reach
                got = member(P, u, v)
                report.bump("dual_engine")
                if found and not got:
                    report.fail("dual_engine", {"presentation": name, "u": u, "v": v})
                if got != A.accepts(v):
                    report.fail("class_consistency", {"presentation": name, "u": u, "v": v})
            # closure: every one-step rewrite of a sampled member stays in the class
            for w in A.iter_words(limit=30):
                for w2 in one_step_rewrites(P, w):
                    report.bump("closure_soundness")
                    if not A.accepts(w2):
                        report.fail("closure_soundness", {"presentation": name, "w": w, "rewrite": w2})
            # sequence machinery
            s = random_irreducible_sequence(P, rng, cap)
            if s is None:
                continue
            tails = s.tails()
            report.bump("sequences")
            if not verify_sequence(P, s):
                report.fail("oracle_sequence_valid", {"presentation": name, "sequence": s.to_json()})
                continue
            if (longest_common_suffix(tails) == "") != ("" in tails):
                report.fail("definition_1", {"presentation": name, "sequence": s.to_json()})
            for err in check_reduction(P, s):
                report.fail("reduce_step", {"presentation": name, "sequence": s.to_json(), "error": err})
            for err in check_factorization(P, s):
                report.fail("factorize", {"presentation": name, "sequence": s.to_json(), "error": err})
    return report
