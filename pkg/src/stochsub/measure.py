"""The ergodic frequency measure on cylinder sets.

The measure of a cylinder over a legal word v is the v-component of the
L1-normalised right PF eigenvector of the induced mean matrix for windows
of length |v|; it does not depend on the cylinder's position.  Words outside
the language carry measure zero (flagged with a warning, not an error).
"""

from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .induced import induced_mean_matrix
from .language import LanguageTable
from .spectral import pf_eigenpair
from .substitution import SubstitutionRule, Word
from .words import WordLike


class IllegalWordWarning(UserWarning):
    """A cylinder was requested for a word outside the language."""


class FrequencyMeasure:
    """Cylinder-set measure backed by cached per-length frequency vectors.

    Cache population is serialised by a lock; reads of populated entries are
    plain dict lookups, so results are identical to a single-threaded build.
    """

    def __init__(self, rule: SubstitutionRule):
        primitive, _ = rule.is_primitive()
        if not primitive:
            raise ValueError("frequency measures require a primitive rule")
        self.rule = rule
        self.table = LanguageTable(rule)
        self._cache: dict[int, tuple[tuple[Word, ...], np.ndarray]] = {}
        self._lock = threading.Lock()

    def frequency_vector(self, ell: int) -> tuple[tuple[Word, ...], np.ndarray]:
        """Legal ell-words with their limiting frequencies (sums to 1)."""
        if ell in self._cache:
            return self._cache[ell]
        with self._lock:
            if ell not in self._cache:
                matrix = induced_mean_matrix(self.rule, ell, table=self.table)
                pair = pf_eigenpair(matrix)
                vec = pair.right
                total = vec.sum()
                if abs(total - 1.0) > 1e-9:
                    raise RuntimeError(
                        f"frequency vector for length {ell} sums to {total}"
                    )
                self._cache[ell] = (matrix.labels, vec)
        return self._cache[ell]

    def cylinder_measure(self, v: WordLike) -> float:
        """Measure of the cylinder set of v at any fixed position.

        The empty specification denotes the whole space (measure 1); illegal
        words get measure 0 with an IllegalWordWarning.
        """
        w = self.rule.encode(v)
        if len(w) == 0:
            return 1.0
        words, vec = self.frequency_vector(len(w))
        idx = self.table.index(len(w))
        pos = idx.get(w)
        if pos is None:
            warnings.warn(
                f"word {self.rule.alphabet.decode(w)!r} is not legal; measure 0",
                IllegalWordWarning,
                stacklevel=2,
            )
            return 0.0
        return float(vec[pos])

    def consistency_residual(self, ell0: int, ell: int) -> float:
        """Worst absolute defect of the refinement identity: the measure of a
        length-ell0 cylinder must equal the summed measures of its length-ell
        extensions at every anchoring position."""
        if not 1 <= ell0 <= ell:
            raise ValueError("need 1 <= ell0 <= ell")
        base_words, base_vec = self.frequency_vector(ell0)
        ext_words, ext_vec = self.frequency_vector(ell)
        worst = 0.0
        for k in range(ell - ell0 + 1):
            sums = {w: 0.0 for w in base_words}
            for u, value in zip(ext_words, ext_vec):
                mid = u[k : k + ell0]
                if mid in sums:
                    sums[mid] += value
            for w, value in zip(base_words, base_vec):
                worst = max(worst, abs(float(value) - sums[w]))
        return worst


@dataclass(frozen=True)
class ErgodicityProbe:
    """Finite-length sensitivity verdict; never a proof of unique ergodicity."""

    sensitive: bool
    max_difference: float
    ell: int

    @property
    def verdict(self) -> str:
        return "sensitive" if self.sensitive else "insensitive-up-to-ell"


def unique_ergodicity_probe(
    rule: SubstitutionRule,
    ell: int,
    variants: Sequence[SubstitutionRule],
    tolerance: float = 1e-6,
) -> ErgodicityProbe:
    """Compare frequency vectors of probability-perturbed rules.

    Every variant must share the image supports of the base rule (the
    subshift, hence the language, depends only on supports).  The verdict is
    'sensitive' if any frequency component for any window length j <= ell
    moves by more than the tolerance.
    """
    base_supports = rule.supports()
    for variant in variants:
        if variant.alphabet != rule.alphabet or variant.supports() != base_supports:
            raise ValueError("perturbation changes the image supports")
    base = FrequencyMeasure(rule)
    worst = 0.0
    for variant in variants:
        fm = FrequencyMeasure(variant)
        for j in range(1, ell + 1):
            words_a, vec_a = base.frequency_vector(j)
            words_b, vec_b = fm.frequency_vector(j)
            if words_a != words_b:
                raise RuntimeError("variant language differs from base language")
            worst = max(worst, float(np.abs(vec_a - vec_b).max()))
    return ErgodicityProbe(sensitive=worst > tolerance, max_difference=worst, ell=ell)
