"""Minimal forbidden factors (minimal absent words) of linear and circular
words, with an independent brute-force route for each.

A word ``aub`` is minimal forbidden for a factorial language when it is
absent but ``au`` and ``ub`` are present; the length-1 members are the
alphabet letters that never occur.  The fast linear route reads the set off
a suffix automaton: a state's shortest word ``x`` extended by a letter ``b``
is minimal forbidden exactly when ``b`` is undefined at the state but
defined at its suffix link (the tail of ``x`` lands on the suffix link
precisely because ``x`` is shortest).  The circular set is the set of the
doubled word filtered to length at most ``|w|``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .factor_automaton import _VECTOR_THRESHOLD, _encode, _suffix_automaton
from .words import (
    Alphabet,
    BRUTE_FORCE_WORD_LIMIT,
    CircularWord,
    LimitExceeded,
    circular_factor_set,
    factor_set,
)


@dataclass(frozen=True)
class MfwSet:
    """An antidictionary: the sorted set of minimal forbidden factors.

    ``kind`` records which pipeline produced it (``"linear"`` or
    ``"circular"``) and ``source`` the word it was computed from; both are
    informative only.  Words are ordered by length, then lexicographically
    under the alphabet order.
    """

    words: tuple[str, ...]
    alphabet: Alphabet
    kind: str = "linear"
    source: str | None = None

    @classmethod
    def build(
        cls,
        words,
        alphabet: Alphabet,
        kind: str = "linear",
        source: str | None = None,
    ) -> "MfwSet":
        unique = list(set(words))
        symbols = alphabet.symbols
        if symbols == tuple(sorted(symbols)):
            unique.sort()
        else:
            table = str.maketrans({s: chr(i) for i, s in enumerate(symbols)})
            unique.sort(key=lambda w: w.translate(table))
        unique.sort(key=len)  # stable: keeps the lexicographic order per length
        return cls(tuple(unique), alphabet, kind, source)

    def as_set(self) -> frozenset[str]:
        return frozenset(self.words)

    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def check_antifactorial(self) -> None:
        """Raise unless no member is a proper factor of another."""
        for m in self.words:
            for other in self.words:
                if m != other and m in other:
                    raise ValueError(
                        f"not antifactorial: {m!r} is a proper factor of {other!r}"
                    )

    def to_json(self) -> dict:
        return {
            "word": self.source,
            "alphabet": "".join(self.alphabet.symbols),
            "circular": self.kind == "circular",
            "mfw": list(self.words),
        }

    @classmethod
    def from_json(cls, data) -> "MfwSet":
        alphabet = Alphabet(data["alphabet"])
        kind = "circular" if data.get("circular") else "linear"
        return cls.build(data["mfw"], alphabet, kind, data.get("word"))

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.words


def _forbidden_words(word, cols, link, length, endpos, size, symbols) -> list[str]:
    """Read the minimal forbidden factors off a suffix automaton.

    A site is a (state, letter) pair with the letter undefined at the state
    but defined at its suffix link; the emitted word is the state's shortest
    word extended by the letter.  The shortest word has an occurrence ending
    at the state's recorded text position, so it is sliced straight out of
    the input instead of being rebuilt from parent edges.  Large automata
    locate the sites with vectorized masks first.
    """
    sigma = len(symbols)
    out = [symbols[i] for i in range(sigma) if cols[i][0] < 0]
    if size < _VECTOR_THRESHOLD:
        for s in range(1, size):
            fail = link[s]
            start = endpos[s] - length[fail]
            stop = endpos[s] + 1
            shortest = None
            for i in range(sigma):
                col = cols[i]
                if col[s] < 0 and col[fail] >= 0:
                    if shortest is None:
                        shortest = word[start:stop]
                    out.append(shortest + symbols[i])
        return out
    link_np = np.asarray(link[:size], dtype=np.int64)
    length_np = np.asarray(length[:size], dtype=np.int64)
    endpos_np = np.asarray(endpos[:size], dtype=np.int64)
    inner_links = link_np[1:]
    starts_all = endpos_np - length_np[link_np]
    stops_all = endpos_np + 1
    for i in range(sigma):
        col = np.asarray(cols[i][:size], dtype=np.int64)
        sites = np.flatnonzero((col[1:] < 0) & (col[inner_links] >= 0)) + 1
        sym = symbols[i]
        for s, start, stop in zip(
            sites.tolist(), starts_all[sites].tolist(), stops_all[sites].tolist()
        ):
            out.append(word[start:stop] + sym)
    return out


def mfw_linear(word: str, alphabet: Alphabet | None = None) -> MfwSet:
    """Minimal forbidden factors of a linear word, via its factor automaton.

    Builds the suffix automaton (an acceptor of the factor language whose
    suffix links are the failure function) and emits one forbidden word per
    (state, letter) pair where the letter is undefined at the state but
    defined at its suffix link; at the initial state the undefined letters
    are the alphabet letters missing from the word.
    """
    if alphabet is None:
        alphabet = Alphabet.of_word(word)
    alphabet.check_word(word)
    symbols = alphabet.symbols
    if not word:
        return MfwSet.build(symbols, alphabet, "linear", word)
    cols, link, length, endpos, size = _suffix_automaton(_encode(word, alphabet), len(alphabet))
    forbidden = _forbidden_words(word, cols, link, length, endpos, size, symbols)
    return MfwSet.build(forbidden, alphabet, "linear", word)


def mfw_linear_bruteforce(word: str, alphabet: Alphabet | None = None) -> MfwSet:
    """Minimal forbidden factors straight from the definition.

    Enumerates every candidate ``a + u + b`` over the factors ``u`` of the
    word and keeps those absent with both maximal proper factors present.
    Guarded brute force; this is the oracle the fast route is validated
    against.
    """
    if len(word) > BRUTE_FORCE_WORD_LIMIT:
        raise LimitExceeded(
            f"brute-force antidictionary limited to words of length {BRUTE_FORCE_WORD_LIMIT}"
        )
    if alphabet is None:
        alphabet = Alphabet.of_word(word)
    alphabet.check_word(word)
    factors = factor_set(word)
    out = [a for a in alphabet.symbols if a not in factors]
    for u in factors:
        for a in alphabet.symbols:
            if a + u not in factors:
                continue
            for b in alphabet.symbols:
                if u + b in factors and a + u + b not in factors:
                    out.append(a + u + b)
    return MfwSet.build(out, alphabet, "linear", word)


def _as_circular(word, alphabet: Alphabet | None) -> CircularWord:
    if isinstance(word, CircularWord):
        return word
    return CircularWord(word, alphabet)


def mfw_circular(cw: CircularWord | str, alphabet: Alphabet | None = None) -> MfwSet:
    """Minimal forbidden factors of a circular word.

    Equal to the forbidden factors of the doubled linearization that are no
    longer than the word itself; any linearization gives the same set, and
    the canonical one is used.
    """
    cw = _as_circular(cw, alphabet)
    if alphabet is None:
        alphabet = cw.alphabet
    w = cw.linearization
    alphabet.check_word(w)
    doubled = mfw_linear(w + w, alphabet)
    keep = [v for v in doubled.words if len(v) <= len(w)]
    return MfwSet.build(keep, alphabet, "circular", w)


def mfw_circular_bruteforce(
    cw: CircularWord | str, alphabet: Alphabet | None = None, *, slack: int = 2
) -> MfwSet:
    """Circular minimal forbidden factors from the definition.

    Applies the absent-with-present-sides test against the factors of powers
    of the word, scanning candidates up to ``|w| + slack`` so the test would
    also notice members longer than the word (there are none).
    """
    cw = _as_circular(cw, alphabet)
    if alphabet is None:
        alphabet = cw.alphabet
    w = cw.linearization
    alphabet.check_word(w)
    horizon = len(w) + slack
    present = circular_factor_set(cw, horizon)
    out = [a for a in alphabet.symbols if a not in present]
    for u in present:
        if len(u) > horizon - 2:
            continue
        for a in alphabet.symbols:
            if a + u not in present:
                continue
            for b in alphabet.symbols:
                if u + b in present and a + u + b not in present:
                    out.append(a + u + b)
    return MfwSet.build(out, alphabet, "circular", w)


@dataclass(frozen=True)
class CardinalityReport:
    """Size of a circular antidictionary against its provable bounds."""

    word: str
    length: int
    alphabet_size: int
    occurring_letters: int
    count: int

    @property
    def lower(self) -> int:
        return self.alphabet_size - 1

    @property
    def upper(self) -> int:
        return self.alphabet_size + (self.length - 1) * self.occurring_letters - self.length

    @property
    def lower_ok(self) -> bool:
        return self.lower <= self.count

    @property
    def upper_ok(self) -> bool:
        return self.count <= self.upper

    @property
    def passed(self) -> bool:
        return self.lower_ok and self.upper_ok


def check_cardinality_bounds(
    cw: CircularWord | str, alphabet: Alphabet | None = None
) -> CardinalityReport:
    """Count the circular antidictionary and compare with its bounds.

    For a circular word of length ``n`` over ``A`` with ``A(w)`` occurring
    letters, the count lies in ``[|A| - 1, |A| + (n - 1)|A(w)| - n]``.  The
    report is computed on the primitive reduction the type enforces.
    """
    cw = _as_circular(cw, alphabet)
    if alphabet is None:
        alphabet = cw.alphabet
    mfws = mfw_circular(cw, alphabet)
    return CardinalityReport(
        word=cw.linearization,
        length=cw.length,
        alphabet_size=len(alphabet),
        occurring_letters=len(set(cw.linearization)),
        count=len(mfws),
    )
