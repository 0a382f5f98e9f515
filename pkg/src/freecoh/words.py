"""Words over a finite alphabet.

Words are plain ``str`` values whose characters are the symbols; the empty
string is the empty word.  An :class:`Alphabet` is only needed to validate
words at the boundaries (presentations, automata, CLI input).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import product

Word = str

EMPTY: Word = ""


class AlphabetError(ValueError):
    pass


class Alphabet:
    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        if not symbols:
            raise AlphabetError("alphabet must contain at least one symbol")
        for s in symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise AlphabetError(
                    f"symbol {s!r} is not a single character; "
                    "multi-character symbols are not supported"
                )
        if len(set(symbols)) != len(symbols):
            raise AlphabetError(f"duplicate symbols in {symbols!r}")
        self.symbols = symbols
        self._index = {s: i for i, s in enumerate(symbols)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.symbols)!r})"

    def index(self, symbol: str) -> int:
        return self._index[symbol]

    def check(self, *words: Word) -> None:
        for w in words:
            for ch in w:
                if ch not in self._index:
                    raise AlphabetError(
                        f"symbol {ch!r} in word {w!r} is not in alphabet "
                        f"{''.join(self.symbols)!r}"
                    )

    def words(self, max_len: int, min_len: int = 0) -> Iterator[Word]:
        """All words with ``min_len <= |w| <= max_len`` in shortlex order."""
        for n in range(min_len, max_len + 1):
            for letters in product(self.symbols, repeat=n):
                yield "".join(letters)

    def count_words(self, max_len: int) -> int:
        k = len(self.symbols)
        return sum(k**n for n in range(max_len + 1))


def shortlex_key(w: Word) -> tuple[int, str]:
    return (len(w), w)


def concat(x: Word, y: Word, alphabet: Alphabet | None = None) -> Word:
    if alphabet is not None:
        alphabet.check(x, y)
    return x + y


def strip_suffix(y: Word, x: Word) -> Word | None:
    """Return ``z`` with ``z + x == y``, or ``None`` if ``x`` is not a suffix of ``y``."""
    if not x:
        return y
    if y.endswith(x):
        return y[: len(y) - len(x)]
    return None


def longest_common_suffix(ws: Sequence[Word]) -> Word:
    if not ws:
        raise ValueError("longest_common_suffix of an empty list")
    n = min(len(w) for w in ws)
    k = 0
    while k < n:
        ch = ws[0][-1 - k]
        if any(w[-1 - k] != ch for w in ws):
            break
        k += 1
    return ws[0][len(ws[0]) - k :]
