"""Finite generating sets for right congruences on a free monoid."""

from __future__ import annotations

import json
from collections.abc import Iterable
from pathlib import Path

from .words import Alphabet, Word


class Presentation:
    """A symmetric finite set ``pairs`` of word pairs over ``alphabet``.

    The right congruence it generates is written rho below.  Reflexive pairs
    are dropped and the reverse of every pair is added on construction.
    """

    __slots__ = ("alphabet", "pairs", "K")

    def __init__(self, alphabet: Alphabet | Iterable[str], raw_pairs: Iterable[tuple[Word, Word]] = ()):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        pairs = set()
        for p, q in raw_pairs:
            alphabet.check(p, q)
            if p != q:
                pairs.add((p, q))
                pairs.add((q, p))
        self.alphabet = alphabet
        self.pairs: frozenset[tuple[Word, Word]] = frozenset(pairs)
        self.K = max((len(p) for p, _ in pairs), default=0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Presentation)
            and self.alphabet == other.alphabet
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.pairs))

    def __repr__(self) -> str:
        return f"Presentation({self.alphabet!r}, {self.unordered_pairs()!r})"

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list[tuple[Word, Word]]:
        return sorted(self.pairs, key=lambda pq: (len(pq[0]), pq[0], len(pq[1]), pq[1]))

    def unordered_pairs(self) -> list[tuple[Word, Word]]:
        """One orientation per pair, shortlex-smaller word first."""
        return [(p, q) for p, q in self.sorted_pairs() if (len(p), p) < (len(q), q)]

    def left_sides(self) -> list[Word]:
        return sorted({p for p, _ in self.pairs}, key=lambda w: (len(w), w))

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet.symbols),
            "pairs": [list(pq) for pq in self.unordered_pairs()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        try:
            alphabet = data["alphabet"]
            pairs = data.get("pairs", [])
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed presentation: {exc}") from None
        raw = []
        for item in pairs:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise ValueError(f"malformed pair {item!r}")
            p, q = item
            if not isinstance(p, str) or not isinstance(q, str):
                raise ValueError(f"pair entries must be strings, got {item!r}")
            raw.append((p, q))
        return cls(alphabet, raw)

    @classmethod
    def load(cls, path: str | Path) -> "Presentation":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def make_presentation(alphabet, raw_pairs) -> Presentation:
    return Presentation(alphabet, raw_pairs)


def pair_count(P: Presentation) -> int:
    return len(P.pairs)


BUNDLED: dict[str, list[tuple[Word, Word]]] = {
    "empty": [],
    "swap-letter": [("a", "b")],
    "commute": [("ab", "ba")],
    "a-bb": [("a", "bb")],
    "commute-bab": [("ab", "ba"), ("bab", "bb")],
}


def bundled(name: str | None = None):
    """A bundled presentation over ``{a, b}``, or all of them keyed by name."""
    if name is None:
        return {k: Presentation("ab", v) for k, v in BUNDLED.items()}
    return Presentation("ab", BUNDLED[name])
