import pytest

from stochsub import LanguageTable, collar, legal_words

from conftest import make_non_expanding


def brute_force_language(rule, ell):
    """Oracle: grow the set of short legal words to a fixed point.

    Keeps every subword of length <= ell + 2 of every realisation of the
    inflation of every word collected so far; the set is finite and only
    grows, so the iteration stabilises.  Deliberately wasteful (full
    realisation enumeration, longer windows than needed) to stay independent
    of the library's automaton.
    """
    supports = rule.supports()
    cap = ell + 2

    def inflations(word):
        reals = [()]
        for c in word:
            reals = [r + img for r in reals for img in supports[c]]
        return reals

    words = {(c,) for c in range(rule.alphabet.size)}
    while True:
        new = set(words)
        for w in words:
            for r in inflations(w):
                for k in range(1, cap + 1):
                    for i in range(len(r) - k + 1):
                        new.add(r[i:i + k])
        if new == words:
            break
        words = new
    return tuple(sorted(w for w in words if len(w) == ell))


class TestCollar:
    def test_windows(self):
        assert collar((0, 1, 1, 0), 2) == ((0, 1), (1, 1), (1, 0))
        assert collar((0, 1, 0), 3) == ((0, 1, 0),)
        assert collar((0, 1, 0), 1) == ((0,), (1,), (0,))

    def test_short_word_rejected(self):
        with pytest.raises(ValueError):
            collar((0,), 2)


class TestLegalWords:
    def test_single_letters(self, fibonacci):
        assert legal_words(fibonacci, 1) == ((0,), (1,))

    def test_period_doubling_pairs(self, period_doubling):
        words = legal_words(period_doubling, 2)
        assert [period_doubling.alphabet.decode(w) for w in words] == \
            ["aa", "ab", "ba", "bb"]

    def test_fibonacci_pairs_include_bb(self, fibonacci):
        # bb arises inside the realisation abba of the image of aa
        words = [fibonacci.alphabet.decode(w) for w in legal_words(fibonacci, 2)]
        assert words == ["aa", "ab", "ba", "bb"]

    def test_zeta_counts(self, zeta):
        # card of the even-length language is 2^n + 2^(n+1) - 2
        for n in (1, 2, 3):
            assert len(legal_words(zeta, 2 * n)) == 2**n + 2**(n + 1) - 2

    def test_sturmian_complexity(self, det_fibonacci):
        for ell in range(1, 9):
            assert len(legal_words(det_fibonacci, ell)) == ell + 1

    @pytest.mark.parametrize("ell", [1, 2, 3, 4])
    def test_matches_brute_force(self, ell, fibonacci, period_doubling, zeta):
        for rule in (fibonacci, period_doubling, zeta):
            assert legal_words(rule, ell) == brute_force_language(rule, ell)

    def test_non_expanding_brute_force(self, non_expanding):
        assert legal_words(non_expanding, 1) == ((0,), (1,))
        rule = make_non_expanding()
        # the only realisations are single letters; no longer word is legal
        assert legal_words(rule, 2) == ()

    def test_closure_under_restriction(self, period_doubling, dyck):
        for rule in (period_doubling, dyck):
            table = LanguageTable(rule)
            for ell in (2, 3, 4):
                shorter = set(table.words_of_length(ell - 1))
                for w in table.words_of_length(ell):
                    assert w[:-1] in shorter and w[1:] in shorter

    def test_substitution_invariance(self, period_doubling):
        ell = 3
        legal = set(legal_words(period_doubling, ell))
        supports = period_doubling.supports()
        for u in legal:
            reals = [()]
            for c in u:
                reals = [r + img for r in reals for img in supports[c]]
            for r in reals:
                for i in range(len(r) - ell + 1):
                    assert r[i:i + ell] in legal

    def test_requires_primitive(self):
        from fractions import Fraction
        from stochsub import Alphabet, SubstitutionRule
        ab = Alphabet(["a", "b"])
        rule = SubstitutionRule(ab, [[(ab.encode("aa"), Fraction(1))],
                                     [(ab.encode("bb"), Fraction(1))]])
        with pytest.raises(ValueError, match="primitive"):
            legal_words(rule, 2)


class TestLanguageTable:
    def test_index_agrees_with_order(self, zeta):
        table = LanguageTable(zeta)
        words = table.words_of_length(3)
        assert all(table.index(3)[w] == i for i, w in enumerate(words))

    def test_is_legal(self, period_doubling):
        table = LanguageTable(period_doubling)
        assert table.is_legal("bb")
        assert not table.is_legal("bbb")
        assert table.is_legal("")
