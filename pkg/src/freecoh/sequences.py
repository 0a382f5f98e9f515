"""Chains of prefix rewrites connecting two words, and their reduction.

An :class:`HSequence` with context ``(a, u; b, v)`` is a list of steps
``(c_i, d_i, t_i)`` with ``(c_i, d_i)`` a presentation pair and

    a u = c_1 t_1,  d_i t_i = c_{i+1} t_{i+1},  d_n t_n = b v.

By convention ``d_0 = a``, ``t_0 = u``, ``c_{n+1} = b`` and ``t_{n+1} = v``;
the empty sequence asserts ``a u = b v``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .closure import member
from .presentation import Presentation
from .words import Word, longest_common_suffix, strip_suffix


class PreconditionError(ValueError):
    pass


class InvariantViolation(RuntimeError):
    """A guarantee of the reduction step failed; carries the offending sequence."""


@dataclass(frozen=True)
class Quadruple:
    a: Word
    u: Word
    b: Word
    v: Word

    @property
    def left(self) -> Word:
        return self.a + self.u

    @property
    def right(self) -> Word:
        return self.b + self.v


Step = tuple[Word, Word, Word]


@dataclass(frozen=True)
class HSequence:
    context: Quadruple
    steps: tuple[Step, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(tuple(s) for s in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def tails(self) -> list[Word]:
        """``t_0 = u, t_1, ..., t_n, t_{n+1} = v``."""
        return [self.context.u, *(t for _, _, t in self.steps), self.context.v]

    def c(self, i: int) -> Word:
        """``c_i`` for ``1 <= i <= n + 1`` (``c_{n+1} = b``)."""
        if i == len(self.steps) + 1:
            return self.context.b
        return self.steps[i - 1][0]

    def d(self, i: int) -> Word:
        """``d_i`` for ``0 <= i <= n`` (``d_0 = a``)."""
        if i == 0:
            return self.context.a
        return self.steps[i - 1][1]

    def t(self, i: int) -> Word:
        return self.tails()[i]

    def words(self) -> list[Word]:
        """The words visited: ``a u, d_1 t_1, ..., d_n t_n`` (the last equals ``b v``)."""
        return [self.context.left, *(d + t for _, d, t in self.steps)]

    def with_context(self, context: Quadruple) -> "HSequence":
        return HSequence(context, self.steps)

    def to_json(self) -> dict:
        q = self.context
        return {"a": q.a, "u": q.u, "b": q.b, "v": q.v, "steps": [list(s) for s in self.steps]}

    @classmethod
    def from_json(cls, data: dict) -> "HSequence":
        try:
            q = Quadruple(data["a"], data["u"], data["b"], data["v"])
            steps = data.get("steps", [])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed sequence: missing {exc}") from None
        for s in steps:
            if not isinstance(s, (list, tuple)) or len(s) != 3 or not all(isinstance(x, str) for x in s):
                raise ValueError(f"malformed step {s!r}")
        for w in (q.a, q.u, q.b, q.v):
            if not isinstance(w, str):
                raise ValueError(f"sequence words must be strings, got {w!r}")
        return cls(q, tuple(tuple(s) for s in steps))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def chain_holds(s: HSequence) -> bool:
    """The chain equalities, ignoring whether the steps use presentation pairs."""
    q = s.context
    if not s.steps:
        return q.left == q.right
    prev = q.left
    for c, d, t in s.steps:
        if prev != c + t:
            return False
        prev = d + t
    return prev == q.right


def verify_sequence(P: Presentation, s: HSequence) -> bool:
    try:
        q = s.context
        P.alphabet.check(q.a, q.u, q.b, q.v, *(w for step in s.steps for w in step))
    except ValueError:
        return False
    if any((c, d) not in P.pairs for c, d, _ in s.steps):
        return False
    return chain_holds(s)


def is_irreducible_sequence(s: HSequence) -> bool:
    """No common non-empty suffix among ``u, t_1, ..., t_n, v``."""
    if not chain_holds(s):
        raise PreconditionError("sequence does not satisfy its chain equalities")
    return longest_common_suffix(s.tails()) == ""


def is_irreducible_quadruple(P: Presentation, q: Quadruple) -> bool:
    if not member(P, q.left, q.right):
        return False
    common = longest_common_suffix([q.u, q.v])
    for k in range(1, len(common) + 1):
        if member(P, q.a + q.u[:-k], q.b + q.v[:-k]):
            return False
    return True


@dataclass(frozen=True)
class Branch1:
    """The empty sequence is irreducible with respect to ``(a, u; c_1, t_1)``."""


@dataclass(frozen=True)
class Branch2:
    i: int
    x: Word
    truncated: HSequence


def _check_reducible_input(P: Presentation, s: HSequence) -> None:
    if not verify_sequence(P, s):
        raise PreconditionError("not a valid sequence for this presentation")
    if not is_irreducible_sequence(s):
        raise PreconditionError("sequence is not irreducible with respect to its context")


def reduce_step(P: Presentation, s: HSequence) -> Branch1 | Branch2:
    _check_reducible_input(P, s)
    n = len(s.steps)
    tails = s.tails()
    bound = max(len(s.context.b), P.K)
    u, t1 = tails[0], tails[1]
    if u == "" or t1 == "":
        if len(u) > bound:
            raise InvariantViolation(f"|u| = {len(u)} exceeds max(|b|, K) = {bound}: {s.dumps()}")
        return Branch1()
    i = next(j - 1 for j in range(2, n + 2) if tails[j] == "")
    x = longest_common_suffix(tails[: i + 1])
    if not 0 < len(x) <= bound:
        raise InvariantViolation(f"|x| = {len(x)} outside (0, {bound}]: {s.dumps()}")
    cut = [strip_suffix(t, x) for t in tails[: i + 1]]
    truncated = HSequence(
        Quadruple(s.context.a, cut[0], s.c(i), cut[i]),
        tuple((c, d, cut[k + 1]) for k, (c, d, _) in enumerate(s.steps[: i - 1])),
    )
    return Branch2(i, x, truncated)


@dataclass(frozen=True)
class Factorization:
    """``u = parts[k-1] ... parts[0]`` with ``indices`` strictly decreasing."""

    parts: tuple[Word, ...]
    indices: tuple[int, ...]

    def recompose(self) -> Word:
        return "".join(reversed(self.parts))


@dataclass(frozen=True)
class EmptyU:
    pass


def factorize(P: Presentation, s: HSequence) -> Factorization | EmptyU:
    _check_reducible_input(P, s)
    if s.context.u == "":
        return EmptyU()
    parts: list[Word] = []
    indices: list[int] = []
    cur = s
    while cur.context.u:
        outcome = reduce_step(P, cur)
        if isinstance(outcome, Branch1):
            # u nonempty, so t_1 is empty and a u = c_1
            parts.append(cur.context.u)
            indices.append(1)
            break
        parts.append(outcome.x)
        indices.append(outcome.i + 1)
        cur = outcome.truncated
    return Factorization(tuple(parts), tuple(indices))


def find_sequence(
    P: Presentation,
    u: Word,
    v: Word,
    max_word_len: int,
    max_steps: int | None = None,
    context: Quadruple | None = None,
) -> HSequence | None:
    """Breadth-first search for a shortest chain of rewrites from ``u`` to ``v``.

    Only words of length at most ``max_word_len`` are visited.  ``None`` means
    no chain exists within the caps; with ``max_steps=None`` the search is
    exhaustive for the length cap.
    """
    if context is None:
        context = Quadruple("", u, "", v)
    elif context.left != u or context.right != v:
        raise ValueError("context does not match the endpoints")
    if u == v:
        return HSequence(context, ())
    if len(u) > max_word_len or len(v) > max_word_len:
        return None
    pairs = P.sorted_pairs()
    parent: dict[Word, tuple[Word, Step] | None] = {u: None}
    frontier = deque([(u, 0)])
    while frontier:
        w, depth = frontier.popleft()
        if max_steps is not None and depth >= max_steps:
            continue
        for c, d in pairs:
            if not w.startswith(c):
                continue
            t = w[len(c):]
            w2 = d + t
            if len(w2) > max_word_len or w2 in parent:
                continue
            parent[w2] = (w, (c, d, t))
            if w2 == v:
                steps = []
                cur = w2
                while parent[cur] is not None:
                    prev, step = parent[cur]
                    steps.append(step)
                    cur = prev
                return HSequence(context, tuple(reversed(steps)))
            frontier.append((w2, depth + 1))
    return None


def reachable_words(P: Presentation, u: Word, max_word_len: int) -> set[Word]:
    """All words connected to ``u`` through words of length at most ``max_word_len``."""
    if len(u) > max_word_len:
        return {u}
    pairs = P.sorted_pairs()
    seen = {u}
    todo = [u]
    while todo:
        w = todo.pop()
        for c, d in pairs:
            if w.startswith(c):
                w2 = d + w[len(c):]
                if len(w2) <= max_word_len and w2 not in seen:
                    seen.add(w2)
                    todo.append(w2)
    return seen
