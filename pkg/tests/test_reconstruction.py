import pytest

from antidict import (
    Alphabet,
    CircularWord,
    MfwSet,
    ReconstructionError,
    mfw_circular,
    mfw_linear,
    reconstruct_circular,
    reconstruct_word,
)

from .helpers import all_words

AB = Alphabet("ab")


class TestReconstructWord:
    def test_running_example(self):
        mfws = MfwSet.build(["aaa", "aba", "bbb", "baa", "babba"], AB)
        assert reconstruct_word(mfws) == "aabbabb"

    def test_single_letter(self):
        assert reconstruct_word(MfwSet.build(["b", "aa"], AB)) == "a"

    def test_whole_alphabet_gives_empty_word(self):
        assert reconstruct_word(MfwSet.build(["a", "b"], AB)) == ""

    def test_infinite_language_rejected(self):
        with pytest.raises(ReconstructionError, match="infinite"):
            reconstruct_word(MfwSet.build(["aa", "ba"], AB))

    def test_ambiguous_longest_word_rejected(self):
        # avoiding {aa, ab, ba, bb} leaves {eps, a, b}: two longest words
        with pytest.raises(ReconstructionError, match="not unique"):
            reconstruct_word(MfwSet.build(["aa", "ab", "ba", "bb"], AB))

    def test_non_antifactorial_rejected(self):
        with pytest.raises(ReconstructionError):
            reconstruct_word(MfwSet.build(["a", "ab"], AB))

    def test_round_trip(self):
        for w in all_words("ab", 9):
            assert reconstruct_word(mfw_linear(w, AB)) == w, w
        for w in all_words("abc", 5):
            assert reconstruct_word(mfw_linear(w)) == w, w


class TestReconstructCircular:
    def test_quoted_set(self):
        mfws = MfwSet.build(["aaa", "aba", "bbb", "aabbaa", "babbab"], AB, "circular")
        assert reconstruct_circular(mfws) == CircularWord("aabbabb")

    def test_fifth_fibonacci(self):
        mfws = MfwSet.build(["bb", "aaa", "aabaa", "babab"], AB, "circular")
        assert reconstruct_circular(mfws) == CircularWord("abaab")

    def test_two_letter_cycle(self):
        assert reconstruct_circular(MfwSet.build(["aa", "bb"], AB)) == CircularWord("ab")

    def test_cycle_length_matches_word_length(self):
        for w in ("ab", "aab", "aabab", "aabbabb"):
            cw = reconstruct_circular(mfw_circular(w))
            assert cw.length == len(w)

    def test_acyclic_rejected(self):
        # the antidictionary of a finite word leaves no cycle to read
        with pytest.raises(ReconstructionError, match="acyclic"):
            reconstruct_circular(mfw_linear("aabbabb", AB))

    def test_verification_catches_wrong_cycles(self):
        # avoiding {aba, bab} is cyclic (a* among others) but is not the
        # factor language of any single circular word
        with pytest.raises(ReconstructionError, match="verification failed"):
            reconstruct_circular(MfwSet.build(["aba", "bab"], AB))

    def test_round_trip(self):
        seen = set()
        for w in all_words("ab", 9):
            cw = CircularWord(w, AB)
            if cw.reduced or cw in seen:
                continue
            seen.add(cw)
            assert reconstruct_circular(mfw_circular(cw, AB)) == cw, w
