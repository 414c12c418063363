"""Independent oracles and small-corpus utilities shared by the tests.

Everything here is deliberately naive (nested loops, direct scans) so that
the automaton-based implementations are checked against code with no shared
machinery.
"""

import itertools

from antidict import Alphabet, Dfa


def all_words(symbols: str, max_len: int, min_len: int = 1):
    """Every word over ``symbols`` with length in [min_len, max_len]."""
    for length in range(min_len, max_len + 1):
        for tup in itertools.product(symbols, repeat=length):
            yield "".join(tup)


def substrings(word: str) -> set[str]:
    """All factors of a word, the obvious way."""
    out = {""}
    for i in range(len(word)):
        for j in range(i + 1, len(word) + 1):
            out.add(word[i:j])
    return out


def prefix_acceptor(language: set[str], alphabet: Alphabet) -> Dfa:
    """All-final prefix-tree DFA of a prefix-closed finite language.

    Independent route to the minimal factor acceptor: feed it to
    ``minimize`` and compare.
    """
    assert "" in language, "a prefix-closed language contains the empty word"
    words = sorted(language)
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for sym in alphabet.symbols:
            if w + sym in index:
                edges.append((index[w], sym, index[w + sym]))
    return Dfa.from_edges(alphabet, len(words), index[""], range(len(words)), edges)


def words_avoiding(forbidden, symbols: str, max_len: int) -> set[str]:
    """All words up to ``max_len`` containing no forbidden word, by scanning."""
    bad = list(forbidden)
    out = set()
    for length in range(max_len + 1):
        for tup in itertools.product(symbols, repeat=length):
            w = "".join(tup)
            if not any(b in w for b in bad):
                out.add(w)
    return out


def longest_paths_from_initial(dfa: Dfa) -> list[int]:
    """Longest-path length from the initial state to each state (DAG only)."""
    indegree = [0] * dfa.n_states
    for _, _, t in dfa.transitions():
        indegree[t] += 1
    ready = [s for s in range(dfa.n_states) if indegree[s] == 0]
    order = []
    while ready:
        s = ready.pop()
        order.append(s)
        for _, t in dfa.out_edges(s):
            indegree[t] -= 1
            if indegree[t] == 0:
                ready.append(t)
    assert len(order) == dfa.n_states, "cycle: longest paths undefined"
    depth = [-1] * dfa.n_states
    depth[dfa.initial] = 0
    for s in order:
        if depth[s] < 0:
            continue
        for _, t in dfa.out_edges(s):
            depth[t] = max(depth[t], depth[s] + 1)
    return depth


def check_failure_semantics(dfa: Dfa, max_len: int, all_representatives: bool = True) -> None:
    """Assert failure links obey the longest-different-suffix definition.

    Harvests every word of length <= max_len that the automaton can read and
    checks that the state of a word's longest proper suffix reaching a
    *different* state is the recorded failure target.  With
    ``all_representatives`` every word reaching a state must give the same
    answer (true for factor automata); otherwise only each state's shortest
    (BFS) word is checked, which is the definition an avoidance automaton
    built from a trie satisfies.
    """
    assert dfa.failure is not None
    state_of = {"": dfa.initial}
    label_of = {dfa.initial: ""}
    frontier = [("", dfa.initial)]
    for _ in range(max_len):
        nxt = []
        for word, state in frontier:
            for sym, target in dfa.out_edges(state):
                grown = word + sym
                if grown not in state_of:
                    state_of[grown] = target
                    label_of.setdefault(target, grown)
                    nxt.append((grown, target))
        frontier = nxt
    if all_representatives:
        pairs = [(w, s) for w, s in state_of.items() if w]
    else:
        pairs = [(w, s) for s, w in label_of.items() if w]
    for word, state in pairs:
        if state == dfa.initial:
            continue
        expected = None
        for cut in range(1, len(word) + 1):
            suffix = word[cut:]
            if suffix in state_of and state_of[suffix] != state:
                expected = state_of[suffix]
                break
        assert expected is not None, (word, state)
        assert dfa.failure[state] == expected, (word, state, dfa.failure[state], expected)
