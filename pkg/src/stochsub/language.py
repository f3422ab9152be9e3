"""Enumeration of the legal words of a random substitution.

The language is a purely combinatorial object: it depends only on the image
supports, never on the probabilities.  Legal words of a fixed length are
found as a set fixed point of the multi-valued substitution, where words are
inflated through a sliding-window automaton so that realisations sharing a
suffix are never expanded twice.
"""

from __future__ import annotations

from typing import Sequence

from .substitution import SubstitutionRule, Word
from .words import WordLike


def collar(u: Sequence, ell: int) -> tuple:
    """The sequence of sliding windows of length ell of u."""
    if ell < 1:
        raise ValueError("window length must be >= 1")
    if len(u) < ell:
        raise ValueError(f"word of length {len(u)} has no windows of length {ell}")
    u = tuple(u)
    return tuple(u[k : k + ell] for k in range(len(u) - ell + 1))


def _inflation_pieces(
    supports: Sequence[Sequence[Word]], word: Word, ell: int
) -> set[Word]:
    """All length-ell subwords of all realisations of the one-step inflation
    of `word`, together with any full realisations shorter than ell.

    Runs a window automaton over the letters of `word`: a state is the last
    ell-1 letters emitted so far, so realisations sharing a suffix are
    processed once.  For short realisations the state is the whole prefix.
    """
    out: set[Word] = set()
    tail = ell - 1
    # state: (last min(tail, emitted) letters, min(emitted, ell))
    frontier: set[tuple[Word, int]] = {((), 0)}
    for letter in word:
        nxt: set[tuple[Word, int]] = set()
        for buf, emitted in frontier:
            for img in supports[letter]:
                b, e = buf, emitted
                for c in img:
                    if len(b) == tail:
                        out.add(b + (c,))
                    b = (b + (c,))[-tail:] if tail else ()
                    e = min(e + 1, ell)
                nxt.add((b, e))
        frontier = nxt
    # realisations that never reached length ell survive whole in the buffer
    for buf, emitted in frontier:
        if emitted < ell:
            out.add(buf)
    return out


def legal_words(rule: SubstitutionRule, ell: int) -> tuple[Word, ...]:
    """The legal words of length ell, in lexicographic order of letter codes.

    Iterates the multi-valued substitution on set states until a state
    repeats (the state space is finite), then unions every state seen:
    plain stabilisation could miss late-appearing words under non-monotone
    iteration.
    """
    if ell < 1:
        raise ValueError("word length must be >= 1")
    primitive, _ = rule.is_primitive()
    if not primitive:
        raise ValueError("legal-word enumeration requires a primitive rule")
    supports = rule.supports()
    state: frozenset[Word] = frozenset((c,) for c in range(rule.alphabet.size))
    seen: set[frozenset[Word]] = {state}
    union: set[Word] = set(state)
    while True:
        pieces: set[Word] = set()
        for w in state:
            pieces |= _inflation_pieces(supports, w, ell)
        state = frozenset(pieces)
        union |= pieces
        if state in seen:
            break
        seen.add(state)
    return tuple(sorted(w for w in union if len(w) == ell))


class LanguageTable:
    """Per-length cache of legal words and their positions."""

    def __init__(self, rule: SubstitutionRule):
        self.rule = rule
        self._table: dict[int, tuple[Word, ...]] = {}
        self._index: dict[int, dict[Word, int]] = {}

    def words_of_length(self, ell: int) -> tuple[Word, ...]:
        if ell not in self._table:
            ws = legal_words(self.rule, ell)
            self._table[ell] = ws
            self._index[ell] = {w: i for i, w in enumerate(ws)}
        return self._table[ell]

    def index(self, ell: int) -> dict[Word, int]:
        self.words_of_length(ell)
        return self._index[ell]

    def is_legal(self, word: WordLike) -> bool:
        w = self.rule.encode(word)
        if len(w) == 0:
            return True  # empty specification: the full shift space
        return w in self.index(len(w))
