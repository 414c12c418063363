"""Alphabets, words and circular words, plus the brute-force language oracles.

Words are plain Python strings.  An :class:`Alphabet` fixes the set of legal
symbols and, crucially, their order: the order drives every lexicographic
comparison in the package (least rotations, sorted antidictionaries).  The
enumeration oracles in this module are deliberately naive; they exist so that
the automaton-based algorithms elsewhere can be checked against something
that is obviously correct, and they refuse inputs large enough to hang.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

# Largest word accepted by the quadratic all-substrings enumerations.
FACTOR_ENUMERATION_LIMIT = 1024
# Largest word accepted by the O(n^2) sliding-window balance scan.
BALANCE_SCAN_LIMIT = 1 << 15
# Largest word accepted by the cubic-ish brute-force antidictionary search.
BRUTE_FORCE_WORD_LIMIT = 64


class LimitExceeded(ValueError):
    """Input too large for a deliberately bounded brute-force routine."""


class Alphabet:
    """Nonempty ordered set of single-character symbols.

    The declaration order is the total order used for lexicographic
    comparisons, so ``Alphabet("ba")`` sorts ``b`` before ``a`` on purpose.
    """

    __slots__ = ("symbols", "_rank")

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not syms:
            raise ValueError("alphabet must contain at least one symbol")
        seen = set()
        for s in syms:
            if not isinstance(s, str) or len(s) != 1:
                raise ValueError(f"alphabet symbols must be single characters, got {s!r}")
            if s in seen:
                raise ValueError(f"duplicate alphabet symbol {s!r}")
            seen.add(s)
        self.symbols = syms
        self._rank = {s: i for i, s in enumerate(syms)}

    @classmethod
    def of_word(cls, word: str) -> "Alphabet":
        """Default alphabet of a word: its distinct letters, sorted."""
        if not word:
            raise ValueError("an explicit alphabet is required for the empty word")
        return cls(sorted(set(word)))

    def rank(self, symbol: str) -> int:
        try:
            return self._rank[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} is not in alphabet {self}") from None

    def sort_key(self, word: str) -> tuple[int, ...]:
        """Key for lexicographic comparison under this alphabet's order."""
        return tuple(self._rank[c] for c in word)

    def check_word(self, word: str) -> None:
        for c in word:
            if c not in self._rank:
                raise ValueError(f"symbol {c!r} of {word!r} is not in alphabet {self}")

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._rank

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.symbols)!r})"


def reversal(word: str) -> str:
    """The word read from right to left."""
    return word[::-1]


def count_occurrences(symbol: str, word: str, alphabet: Alphabet | None = None) -> int:
    """Number of positions of ``word`` holding ``symbol``."""
    if len(symbol) != 1:
        raise ValueError(f"expected a single symbol, got {symbol!r}")
    if alphabet is not None and symbol not in alphabet:
        raise ValueError(f"symbol {symbol!r} is not in alphabet {alphabet}")
    return word.count(symbol)


def factor_set(word: str, max_len: int | None = None) -> set[str]:
    """All distinct factors of ``word`` up to ``max_len``, including the empty word."""
    if max_len is None:
        max_len = len(word)
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if len(word) > FACTOR_ENUMERATION_LIMIT:
        raise LimitExceeded(
            f"factor enumeration is limited to words of length {FACTOR_ENUMERATION_LIMIT}"
        )
    factors = {""}
    n = len(word)
    for i in range(n):
        top = min(n, i + max_len)
        for j in range(i + 1, top + 1):
            factors.add(word[i:j])
    return factors


def primitive_root(word: str) -> str:
    """Shortest ``v`` such that the word is a power of ``v``."""
    if not word:
        raise ValueError("the empty word has no primitive root")
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    raise AssertionError("unreachable: every word is a power of itself")


def is_primitive(word: str) -> bool:
    """True when the word is not a proper power."""
    return primitive_root(word) == word


def rotations(word: str) -> list[str]:
    """All rotations of the word, starting with the word itself."""
    return [word[i:] + word[:i] for i in range(len(word))]


def canonical_rotation(word: str, alphabet: Alphabet | None = None) -> str:
    """Lexicographically least rotation under the alphabet order.

    Booth-style two-pointer scan, linear time; the result is the canonical
    representative used for circular-word equality.
    """
    if not word:
        raise ValueError("the empty word has no rotations")
    if alphabet is None:
        alphabet = Alphabet.of_word(word)
    alphabet.check_word(word)
    rank = alphabet._rank
    coded = [rank[c] for c in word]
    coded += coded
    n = len(word)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a, b = coded[i + k], coded[j + k]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    start = min(i, j)
    return word[start:] + word[:start]


class CircularWord:
    """Conjugacy class of a primitive word, keyed by its least rotation.

    A non-primitive input is reduced to its primitive root (the factors of
    arbitrary powers do not change under that reduction); ``reduced`` records
    that it happened.  Two circular words are equal exactly when their
    canonical linearizations are equal.
    """

    __slots__ = ("linearization", "alphabet", "reduced")

    def __init__(self, word: str, alphabet: Alphabet | None = None):
        if not word:
            raise ValueError("a circular word must be nonempty")
        if alphabet is None:
            alphabet = Alphabet.of_word(word)
        alphabet.check_word(word)
        root = primitive_root(word)
        self.reduced = root != word
        self.linearization = canonical_rotation(root, alphabet)
        self.alphabet = alphabet

    @property
    def length(self) -> int:
        return len(self.linearization)

    def rotations(self) -> list[str]:
        return rotations(self.linearization)

    def __len__(self) -> int:
        return len(self.linearization)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CircularWord) and self.linearization == other.linearization

    def __hash__(self) -> int:
        return hash(("CircularWord", self.linearization))

    def __str__(self) -> str:
        return self.linearization

    def __repr__(self) -> str:
        return f"CircularWord({self.linearization!r})"


def circular_factor_membership(cw: CircularWord, x: str) -> bool:
    """True when ``x`` occurs as a factor of some power of the circular word.

    An occurrence of ``x`` in any power already fits inside
    ``ceil(|x|/|w|) + 1`` consecutive copies, so that single power decides.
    """
    if not x:
        return True
    w = cw.linearization
    k = -(-len(x) // len(w)) + 1
    return x in w * k


def circular_factor_set(cw: CircularWord, max_len: int) -> set[str]:
    """All factors of the circular word of length at most ``max_len``."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    w = cw.linearization
    k = -(-max_len // len(w)) + 1 if max_len else 1
    power = w * k
    if len(power) > FACTOR_ENUMERATION_LIMIT:
        raise LimitExceeded(
            f"circular factor enumeration would scan a power of length {len(power)}"
        )
    return factor_set(power, max_len)


def is_balanced(word: str, alphabet: Alphabet | None = None) -> bool:
    """Whether equal-length factors never differ by more than 1 in letter counts.

    Defined over a binary alphabet; degenerate one-letter words are balanced.
    The scan slides a window of every length over a prefix-sum array, so it
    is quadratic and guarded accordingly.
    """
    symbols = alphabet.symbols if alphabet is not None else tuple(sorted(set(word)))
    if len(symbols) > 2:
        raise ValueError("balance is defined over a binary alphabet")
    if alphabet is not None:
        alphabet.check_word(word)
    if len(word) <= 2:
        return True
    if len(word) > BALANCE_SCAN_LIMIT:
        raise LimitExceeded(f"balance scan is limited to length {BALANCE_SCAN_LIMIT}")
    marks = np.frombuffer(word.encode("ascii"), dtype=np.uint8) == ord(symbols[0])
    prefix = np.concatenate(([0], np.cumsum(marks, dtype=np.int64)))
    n = len(word)
    for width in range(2, n):
        counts = prefix[width:] - prefix[:-width]
        if counts.max() - counts.min() > 1:
            return False
    return True


def bispecial_factors(word: str, alphabet: Alphabet | None = None) -> set[str]:
    """Factors extendable on both sides by both letters of a binary alphabet.

    With fewer than two letters in play no factor can be bispecial and the
    result is empty; more than two letters is an error.
    """
    symbols = alphabet.symbols if alphabet is not None else tuple(sorted(set(word)))
    if len(symbols) > 2:
        raise ValueError("bispecial factors are defined over a binary alphabet")
    if len(symbols) < 2:
        return set()
    x, y = symbols
    factors = factor_set(word)
    return {
        v
        for v in factors
        if x + v in factors and y + v in factors and v + x in factors and v + y in factors
    }
