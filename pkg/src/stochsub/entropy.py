"""Entropy partial sums and the constant-length maximal-entropy criterion.

Both entropies are computed as finite-n partial quantities over the legal
words of length n; natural logarithms throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .language import LanguageTable
from .measure import FrequencyMeasure
from .substitution import SubstitutionRule
from .words import abelianise


def metric_entropy_partial(fm: FrequencyMeasure, n: int) -> float:
    """-(1/n) * sum over legal n-words of mu([w]) log mu([w])."""
    if n < 1:
        raise ValueError("need n >= 1")
    _, vec = fm.frequency_vector(n)
    total = 0.0
    for x in vec:
        if x > 0:
            total += float(x) * math.log(float(x))
    return -total / n


def topological_entropy_partial(rule: SubstitutionRule, n: int) -> float:
    """log(number of legal n-words) / n."""
    if n < 1:
        raise ValueError("need n >= 1")
    table = LanguageTable(rule)
    return math.log(len(table.words_of_length(n))) / n


@dataclass(frozen=True)
class MaxEntropyReport:
    """Outcome of the shared-image constant-length criterion.

    A rule qualifies when every letter has the same set of image words, all
    of one common length with pairwise equal letter counts, and the rule is
    primitive.  With uniform probabilities the metric entropy is then
    (1/N) log(number of images); the report carries that prediction together
    with partial sums at the deepest affordable n.
    """

    qualifies: bool
    reason: str
    image_length: int | None = None      # common image length N
    image_count: int | None = None       # number of image words per letter
    uniform: bool | None = None
    predicted_entropy: float | None = None
    checked_n: int | None = None
    metric_partial: float | None = None
    topological_partial: float | None = None


def max_entropy_class_check(rule: SubstitutionRule, max_n: int = 8) -> MaxEntropyReport:
    supports = rule.supports()
    base = set(supports[0])
    for letter in range(1, rule.alphabet.size):
        if set(supports[letter]) != base:
            return MaxEntropyReport(False, "image word sets differ between letters")
    lengths = {len(w) for w in base}
    if len(lengths) != 1:
        return MaxEntropyReport(False, "image words have unequal lengths")
    big_n = lengths.pop()
    if big_n < 2:
        return MaxEntropyReport(False, "rule is not expanding")
    size = rule.alphabet.size
    abel = {abelianise(w, size) for w in base}
    if len(abel) != 1:
        return MaxEntropyReport(False, "image words have unequal letter counts")
    primitive, _ = rule.is_primitive()
    if not primitive:
        return MaxEntropyReport(False, "rule is not primitive")

    count = len(base)
    uniform = all(
        all(p == entries[0][1] for _, p in entries) for entries in rule.images
    )
    report = MaxEntropyReport(
        qualifies=True,
        reason="shared images of common length and letter counts, primitive",
        image_length=big_n,
        image_count=count,
        uniform=uniform,
    )
    if not uniform:
        return report
    predicted = math.log(count) / big_n
    # deepest multiple of the image length we can afford
    n = max(big_n, (max_n // big_n) * big_n)
    fm = FrequencyMeasure(rule)
    return MaxEntropyReport(
        qualifies=True,
        reason=report.reason,
        image_length=big_n,
        image_count=count,
        uniform=True,
        predicted_entropy=predicted,
        checked_n=n,
        metric_partial=metric_entropy_partial(fm, n),
        topological_partial=topological_entropy_partial(rule, n),
    )
