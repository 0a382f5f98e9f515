"""Nondeterministic finite automata over a word alphabet.

States are the integers ``0 .. n_states - 1``.  There are no epsilon
transitions.  Automata are immutable; every operation returns a new one.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .words import Alphabet, AlphabetError, Word


class FiniteAutomaton:
    __slots__ = ("alphabet", "n_states", "initial", "finals", "transitions", "_delta", "_coreach")

    def __init__(
        self,
        alphabet: Alphabet,
        n_states: int,
        initial: Iterable[int],
        finals: Iterable[int],
        transitions: Iterable[tuple[int, str, int]],
    ):
        self.alphabet = alphabet
        self.n_states = n_states
        self.initial = frozenset(initial)
        self.finals = frozenset(finals)
        self.transitions = frozenset(transitions)
        for s in self.initial | self.finals:
            if not 0 <= s < n_states:
                raise ValueError(f"state {s} out of range")
        delta: dict[int, dict[str, set[int]]] = {}
        for s, a, t in self.transitions:
            if not (0 <= s < n_states and 0 <= t < n_states):
                raise ValueError(f"transition {(s, a, t)} references a missing state")
            if a not in alphabet:
                raise AlphabetError(f"transition symbol {a!r} not in alphabet")
            delta.setdefault(s, {}).setdefault(a, set()).add(t)
        self._delta = delta
        self._coreach: frozenset[int] | None = None

    # constructors

    @classmethod
    def from_words(cls, alphabet: Alphabet, words: Iterable[Word]) -> "FiniteAutomaton":
        """A trie accepting exactly ``words``."""
        trans = []
        finals = set()
        children: dict[tuple[int, str], int] = {}
        n = 1
        for w in words:
            alphabet.check(w)
            s = 0
            for ch in w:
                nxt = children.get((s, ch))
                if nxt is None:
                    nxt = children[(s, ch)] = n
                    trans.append((s, ch, n))
                    n += 1
                s = nxt
            finals.add(s)
        return cls(alphabet, n, {0}, finals, trans)

    @classmethod
    def word(cls, alphabet: Alphabet, w: Word) -> "FiniteAutomaton":
        return cls.from_words(alphabet, [w])

    @classmethod
    def prefix_language(cls, alphabet: Alphabet, x: Word) -> "FiniteAutomaton":
        """Accepts ``x`` followed by any word."""
        alphabet.check(x)
        n = len(x)
        trans = [(i, ch, i + 1) for i, ch in enumerate(x)]
        trans += [(n, ch, n) for ch in alphabet]
        return cls(alphabet, n + 1, {0}, {n}, trans)

    # queries

    def successors(self, states: Iterable[int], symbol: str) -> frozenset[int]:
        out: set[int] = set()
        for s in states:
            out.update(self._delta.get(s, {}).get(symbol, ()))
        return frozenset(out)

    def run(self, w: Word) -> frozenset[int]:
        states = self.initial
        for ch in w:
            if not states:
                break
            states = self.successors(states, ch)
        return states

    def accepts(self, w: Word) -> bool:
        return not self.run(w).isdisjoint(self.finals)

    __contains__ = accepts

    def coreachable(self) -> frozenset[int]:
        """States from which some final state is reachable."""
        if self._coreach is None:
            back: dict[int, set[int]] = {}
            for s, _, t in self.transitions:
                back.setdefault(t, set()).add(s)
            seen = set(self.finals)
            todo = list(seen)
            while todo:
                t = todo.pop()
                for s in back.get(t, ()):
                    if s not in seen:
                        seen.add(s)
                        todo.append(s)
            self._coreach = frozenset(seen)
        return self._coreach

    def reachable(self) -> frozenset[int]:
        seen = set(self.initial)
        todo = list(seen)
        while todo:
            s = todo.pop()
            for targets in self._delta.get(s, {}).values():
                for t in targets:
                    if t not in seen:
                        seen.add(t)
                        todo.append(t)
        return frozenset(seen)

    def is_empty(self) -> bool:
        return self.initial.isdisjoint(self.coreachable())

    def has_word_with_prefix(self, x: Word) -> bool:
        return not self.run(x).isdisjoint(self.coreachable())

    def iter_words(self, max_len: int | None = None, limit: int | None = None) -> Iterator[Word]:
        """Accepted words in shortlex order (alphabet order within a length)."""
        live = self.coreachable()
        start = self.initial & live
        if not start:
            return
        count = 0
        layer = [("", start)]
        length = 0
        while layer:
            for w, states in layer:
                if not states.isdisjoint(self.finals):
                    yield w
                    count += 1
                    if limit is not None and count >= limit:
                        return
            if max_len is not None and length >= max_len:
                return
            nxt = []
            for w, states in layer:
                for ch in self.alphabet:
                    targets = self.successors(states, ch) & live
                    if targets:
                        nxt.append((w + ch, targets))
            layer = nxt
            length += 1

    def words(self, max_len: int | None = None, limit: int | None = None) -> list[Word]:
        return list(self.iter_words(max_len, limit))

    def is_finite(self) -> bool:
        """True iff the language is finite (no live cycle)."""
        useful = self.coreachable() & self.reachable()
        color: dict[int, int] = {}
        for root in useful:
            if root in color:
                continue
            stack = [(root, iter(self._succ_all(root, useful)))]
            color[root] = 1
            while stack:
                s, it = stack[-1]
                for t in it:
                    c = color.get(t)
                    if c == 1:
                        return False
                    if c is None:
                        color[t] = 1
                        stack.append((t, iter(self._succ_all(t, useful))))
                        break
                else:
                    color[s] = 2
                    stack.pop()
        return True

    def _succ_all(self, s: int, allowed: frozenset[int]) -> list[int]:
        return sorted({t for ts in self._delta.get(s, {}).values() for t in ts if t in allowed})

    # transformations

    def trim(self) -> "FiniteAutomaton":
        useful = sorted(self.reachable() & self.coreachable())
        if not useful:
            return FiniteAutomaton(self.alphabet, 1, {0}, (), ())
        renum = {s: i for i, s in enumerate(useful)}
        trans = [
            (renum[s], a, renum[t])
            for s, a, t in self.transitions
            if s in renum and t in renum
        ]
        return FiniteAutomaton(
            self.alphabet,
            len(useful),
            (renum[s] for s in self.initial if s in renum),
            (renum[s] for s in self.finals if s in renum),
            trans,
        )

    def determinize(self) -> "FiniteAutomaton":
        """Subset construction restricted to live subsets; partial DFA."""
        live = self.coreachable()
        start = self.initial & live
        index = {start: 0}
        order = [start]
        trans = []
        i = 0
        while i < len(order):
            cur = order[i]
            for ch in self.alphabet:
                nxt = self.successors(cur, ch) & live
                if not nxt:
                    continue
                j = index.get(nxt)
                if j is None:
                    j = index[nxt] = len(order)
                    order.append(nxt)
                trans.append((i, ch, j))
            i += 1
        finals = [k for k, sub in enumerate(order) if not sub.isdisjoint(self.finals)]
        return FiniteAutomaton(self.alphabet, len(order), {0}, finals, trans)

    def minimize(self) -> "FiniteAutomaton":
        """Canonical minimal partial DFA (no dead state).

        States are numbered in breadth-first order following alphabet order,
        so two automata accept the same language iff their minimized forms
        compare equal.
        """
        dfa = self.determinize()
        n = dfa.n_states
        symbols = dfa.alphabet.symbols
        sink = n
        table = [[sink] * len(symbols) for _ in range(n + 1)]
        for s, a, t in dfa.transitions:
            table[s][dfa.alphabet.index(a)] = t
        # Moore refinement on the completed DFA
        block = [1 if s in dfa.finals else 0 for s in range(n + 1)]
        while True:
            sig = {}
            new_block = []
            for s in range(n + 1):
                key = (block[s], tuple(block[t] for t in table[s]))
                new_block.append(sig.setdefault(key, len(sig)))
            if len(sig) == len(set(block)):
                break
            block = new_block
        block = new_block
        dead = block[sink]
        if dfa.is_empty():
            return FiniteAutomaton(self.alphabet, 1, {0}, (), ())
        # canonical BFS numbering over blocks
        rep = {}
        for s in range(n + 1):
            rep.setdefault(block[s], s)
        number = {block[0]: 0}
        order = [block[0]]
        trans = []
        i = 0
        while i < len(order):
            b = order[i]
            s = rep[b]
            for k, ch in enumerate(symbols):
                tb = block[table[s][k]]
                if tb == dead:
                    continue
                if tb not in number:
                    number[tb] = len(order)
                    order.append(tb)
                trans.append((i, ch, number[tb]))
            i += 1
        finals = [number[block[s]] for s in dfa.finals if block[s] in number]
        return FiniteAutomaton(self.alphabet, len(order), {0}, finals, trans)

    def same_language(self, other: "FiniteAutomaton") -> bool:
        return self.minimize() == other.minimize()

    # equality / serialization

    def _key(self):
        return (self.alphabet, self.n_states, self.initial, self.finals, self.transitions)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteAutomaton) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"FiniteAutomaton(states={self.n_states}, initial={sorted(self.initial)}, "
            f"finals={sorted(self.finals)}, transitions={len(self.transitions)})"
        )

    def sorted_transitions(self) -> list[tuple[int, str, int]]:
        return sorted(self.transitions, key=lambda t: (t[0], self.alphabet.index(t[1]), t[2]))

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet.symbols),
            "states": list(range(self.n_states)),
            "initial": sorted(self.initial),
            "finals": sorted(self.finals),
            "transitions": [list(t) for t in self.sorted_transitions()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteAutomaton":
        states = list(data["states"])
        renum = {s: i for i, s in enumerate(states)}
        return cls(
            Alphabet(data["alphabet"]),
            len(states),
            (renum[s] for s in data["initial"]),
            (renum[s] for s in data["finals"]),
            ((renum[s], a, renum[t]) for s, a, t in data["transitions"]),
        )

    def to_dot(self, name: str = "A") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  node [shape=circle];']
        for s in range(self.n_states):
            shape = "doublecircle" if s in self.finals else "circle"
            lines.append(f"  q{s} [shape={shape}];")
        for k, s in enumerate(sorted(self.initial)):
            lines.append(f'  start{k} [shape=point]; start{k} -> q{s};')
        for s, a, t in self.sorted_transitions():
            lines.append(f'  q{s} -> q{t} [label="{a}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
