"""Finite-word combinatorics over a small interned alphabet.

Words are represented as tuples of integer letter codes.  The code of a
letter is its position in the declared alphabet order, which also fixes the
lexicographic order used everywhere else in the package.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

WordLike = Union[str, Sequence[int]]


class Alphabet:
    """Ordered finite alphabet mapping symbols to small integer codes."""

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet symbols must be distinct")
        for s in symbols:
            if not isinstance(s, str) or not s:
                raise ValueError("alphabet symbols must be nonempty strings")
        self._symbols = symbols
        self._codes = {s: i for i, s in enumerate(symbols)}
        self._single_char = all(len(s) == 1 for s in symbols)

    @property
    def symbols(self) -> tuple[str, ...]:
        return self._symbols

    @property
    def size(self) -> int:
        return len(self._symbols)

    def code(self, symbol: str) -> int:
        try:
            return self._codes[symbol]
        except KeyError:
            raise KeyError(f"unknown letter {symbol!r}") from None

    def symbol(self, code: int) -> str:
        return self._symbols[code]

    def encode(self, word: WordLike) -> tuple[int, ...]:
        """Intern a word given as a string of symbols (single-character
        alphabets), a sequence of symbols, or a sequence of codes."""
        if isinstance(word, str):
            if self._single_char:
                return tuple(self.code(c) for c in word)
            if word in self._codes:  # a lone multi-character symbol
                return (self.code(word),)
            raise ValueError(
                "string words are only supported for single-character alphabets"
            )
        out = []
        for x in word:
            if isinstance(x, str):
                out.append(self.code(x))
            else:
                x = int(x)
                if not 0 <= x < self.size:
                    raise KeyError(f"letter code {x} out of range")
                out.append(x)
        return tuple(out)

    def decode(self, codes: Sequence[int], sep: str | None = None) -> str:
        if sep is None:
            sep = "" if self._single_char else " "
        return sep.join(self._symbols[c] for c in codes)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self._symbols == other._symbols

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __repr__(self) -> str:
        return f"Alphabet({list(self._symbols)!r})"


def count_occurrences(u: Sequence, v: Sequence) -> int:
    """Number of (possibly overlapping) occurrences of v as a subword of u.

    Returns 0 when v is longer than u.
    """
    lu, lv = len(u), len(v)
    if lv == 0:
        raise ValueError("pattern word must be nonempty")
    v = tuple(v)
    return sum(1 for i in range(lu - lv + 1) if tuple(u[i : i + lv]) == v)


def abelianise(u: Sequence[int], size: int) -> tuple[int, ...]:
    """Letter-count vector of u, indexed by letter code; components sum to |u|."""
    if len(u) == 0:
        raise ValueError("cannot abelianise the empty word")
    counts = [0] * size
    for c in u:
        counts[c] += 1
    return tuple(counts)
