"""Shared fixtures: the example rules, both from the packaged configs and as
parameterised builders with symbolic-friendly rational probabilities."""

from fractions import Fraction
from importlib import resources

import pytest

from stochsub import Alphabet, SubstitutionRule

CONFIG_DIR = resources.files("stochsub") / "configs"

AB = Alphabet(["a", "b"])


def make_fibonacci(p1=Fraction(1, 2), p2=None) -> SubstitutionRule:
    """a -> ab | ba, b -> a."""
    if p2 is None:
        p2 = 1 - p1
    return SubstitutionRule(AB, [
        [(AB.encode("ab"), Fraction(p1)), (AB.encode("ba"), Fraction(p2))],
        [(AB.encode("a"), Fraction(1))],
    ])


def make_period_doubling(p=Fraction(1, 2)) -> SubstitutionRule:
    """a -> ab | ba, b -> aa."""
    p = Fraction(p)
    return SubstitutionRule(AB, [
        [(AB.encode("ab"), p), (AB.encode("ba"), 1 - p)],
        [(AB.encode("aa"), Fraction(1))],
    ])


def make_zeta(p=Fraction(1, 2)) -> SubstitutionRule:
    """a, b -> ab | ba with the same probabilities."""
    p = Fraction(p)
    images = [(AB.encode("ab"), p), (AB.encode("ba"), 1 - p)]
    return SubstitutionRule(AB, [list(images), list(images)])


def make_non_expanding(p1=Fraction(1, 2)) -> SubstitutionRule:
    """a, b -> a | b: primitive but every image is a single letter."""
    p1 = Fraction(p1)
    images = [(AB.encode("a"), p1), (AB.encode("b"), 1 - p1)]
    return SubstitutionRule(AB, [list(images), list(images)])


def make_deterministic_fibonacci() -> SubstitutionRule:
    return SubstitutionRule(AB, [
        [(AB.encode("ab"), Fraction(1))],
        [(AB.encode("a"), Fraction(1))],
    ])


@pytest.fixture(scope="session")
def fibonacci():
    return SubstitutionRule.from_file(CONFIG_DIR / "fibonacci.json")


@pytest.fixture(scope="session")
def period_doubling():
    return SubstitutionRule.from_file(CONFIG_DIR / "period_doubling.json")


@pytest.fixture(scope="session")
def zeta():
    return SubstitutionRule.from_file(CONFIG_DIR / "zeta.json")


@pytest.fixture(scope="session")
def dyck():
    return SubstitutionRule.from_file(CONFIG_DIR / "dyck.json")


@pytest.fixture(scope="session")
def non_expanding():
    return SubstitutionRule.from_file(CONFIG_DIR / "non_expanding.json")


@pytest.fixture(scope="session")
def det_fibonacci():
    return SubstitutionRule.from_file(CONFIG_DIR / "deterministic_fibonacci.json")
