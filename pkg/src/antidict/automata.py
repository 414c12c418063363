"""Tries and DFAs with the generic machinery: minimization, equivalence,
language enumeration, sink removal and DOT/JSON export.

Transition functions are partial everywhere; completion with a dead state
happens only inside :func:`minimize` and :func:`equivalent`.  A :class:`Dfa`
keeps its transitions in one flat list indexed by ``state * sigma + rank``
with ``-1`` marking a missing edge, which keeps million-state factor automata
cheap without changing the desk-scale API.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .words import Alphabet, LimitExceeded

# Cap on the number of words one language enumeration may touch.
ENUMERATION_LIMIT = 1_000_000


class Trie:
    """Tree-shaped acceptor of a finite language; members end at sink states.

    State 0 is the root; ``transitions[s]`` maps a symbol to the child state.
    Sinks carry no outgoing edges, so no accepted word may be a proper prefix
    of another -- :func:`build_trie` enforces that.
    """

    __slots__ = ("alphabet", "transitions", "sinks")

    def __init__(self, alphabet: Alphabet, transitions: list[dict[str, int]], sinks: set[int]):
        self.alphabet = alphabet
        self.transitions = transitions
        self.sinks = sinks

    @property
    def root(self) -> int:
        return 0

    @property
    def n_states(self) -> int:
        return len(self.transitions)

    def words(self) -> list[str]:
        """The accepted language, read off root-to-sink paths."""
        out: list[str] = []
        stack: list[tuple[int, str]] = [(0, "")]
        while stack:
            state, prefix = stack.pop()
            if state in self.sinks:
                out.append(prefix)
                continue
            for sym in reversed(self.alphabet.symbols):
                child = self.transitions[state].get(sym)
                if child is not None:
                    stack.append((child, prefix + sym))
        return out

    def is_antifactorial(self) -> bool:
        words = self.words()
        return not any(m != other and m in other for m in words for other in words)

    def to_json(self) -> dict:
        edges = []
        for state, row in enumerate(self.transitions):
            for sym in self.alphabet.symbols:
                if sym in row:
                    edges.append([state, sym, row[sym]])
        return {
            "alphabet": "".join(self.alphabet.symbols),
            "states": self.n_states,
            "initial": 0,
            "finals": sorted(self.sinks),
            "transitions": edges,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Trie":
        alphabet = Alphabet(data["alphabet"])
        transitions: list[dict[str, int]] = [{} for _ in range(int(data["states"]))]
        for src, sym, dst in data["transitions"]:
            transitions[int(src)][sym] = int(dst)
        return cls(alphabet, transitions, set(int(s) for s in data["finals"]))


def build_trie(
    words: Iterable[str], alphabet: Alphabet, *, antifactorial: bool = False
) -> Trie:
    """Trie of a finite set of nonempty words.

    Raises if one word is a proper prefix of another (the sink-state shape
    cannot represent that) and, when ``antifactorial`` is set, if any word is
    a proper factor of another -- the signature of an invalid antidictionary.
    """
    unique = sorted(set(words), key=alphabet.sort_key)
    transitions: list[dict[str, int]] = [{}]
    sinks: set[int] = set()
    for word in unique:
        if not word:
            raise ValueError("the empty word cannot be a trie member")
        alphabet.check_word(word)
        state = 0
        for sym in word:
            if state in sinks:
                raise ValueError(
                    f"{word!r} extends another member: the set is not prefix-free"
                )
            nxt = transitions[state].get(sym)
            if nxt is None:
                nxt = len(transitions)
                transitions.append({})
                transitions[state][sym] = nxt
            state = nxt
        if transitions[state]:
            raise ValueError(f"{word!r} is a proper prefix of another member")
        sinks.add(state)
    if antifactorial:
        for m in unique:
            for other in unique:
                if m != other and m in other:
                    raise ValueError(
                        f"set is not antifactorial: {m!r} occurs inside {other!r}"
                    )
    return Trie(alphabet, transitions, sinks)


class Dfa:
    """Deterministic finite automaton over dense integer states.

    ``flat[state * sigma + rank]`` holds the target state or ``-1``.
    ``failure``, when present, is the per-state suffix link (``-1`` at the
    initial state).  Instances are treated as immutable after construction.
    """

    __slots__ = ("alphabet", "n_states", "initial", "finals", "flat", "failure")

    def __init__(
        self,
        alphabet: Alphabet,
        n_states: int,
        initial: int,
        finals: Iterable[int],
        flat: list[int],
        failure: list[int] | None = None,
    ):
        sigma = len(alphabet)
        if len(flat) != n_states * sigma:
            raise ValueError("flat transition table has the wrong size")
        if failure is not None and len(failure) != n_states:
            raise ValueError("failure table has the wrong size")
        self.alphabet = alphabet
        self.n_states = n_states
        self.initial = initial
        self.finals = frozenset(finals)
        self.flat = flat
        self.failure = failure

    @classmethod
    def from_edges(
        cls,
        alphabet: Alphabet,
        n_states: int,
        initial: int,
        finals: Iterable[int],
        edges: Iterable[tuple[int, str, int]],
        failure: Mapping[int, int] | None = None,
    ) -> "Dfa":
        sigma = len(alphabet)
        flat = [-1] * (n_states * sigma)
        for src, sym, dst in edges:
            slot = src * sigma + alphabet.rank(sym)
            if flat[slot] not in (-1, dst):
                raise ValueError(f"conflicting transitions from state {src} on {sym!r}")
            flat[slot] = dst
        fail = None
        if failure is not None:
            fail = [-1] * n_states
            for src, dst in failure.items():
                fail[src] = dst
        return cls(alphabet, n_states, initial, finals, flat, fail)

    def step(self, state: int, symbol: str) -> int | None:
        target = self.flat[state * len(self.alphabet) + self.alphabet.rank(symbol)]
        return None if target < 0 else target

    def accepts(self, word: str) -> bool:
        """Run the word from the initial state; a missing transition rejects."""
        state = self.initial
        sigma = len(self.alphabet)
        for sym in word:
            state = self.flat[state * sigma + self.alphabet.rank(sym)]
            if state < 0:
                return False
        return state in self.finals

    def out_edges(self, state: int) -> list[tuple[str, int]]:
        base = state * len(self.alphabet)
        return [
            (sym, self.flat[base + i])
            for i, sym in enumerate(self.alphabet.symbols)
            if self.flat[base + i] >= 0
        ]

    def transitions(self) -> Iterator[tuple[int, str, int]]:
        sigma = len(self.alphabet)
        for state in range(self.n_states):
            base = state * sigma
            for i, sym in enumerate(self.alphabet.symbols):
                if self.flat[base + i] >= 0:
                    yield state, sym, self.flat[base + i]

    def reachable(self) -> list[int]:
        """States reachable from the initial state, in BFS order."""
        seen = bytearray(self.n_states)
        seen[self.initial] = 1
        order = [self.initial]
        sigma = len(self.alphabet)
        head = 0
        while head < len(order):
            base = order[head] * sigma
            head += 1
            for i in range(sigma):
                t = self.flat[base + i]
                if t >= 0 and not seen[t]:
                    seen[t] = 1
                    order.append(t)
        return order

    def enumerate_language(self, max_len: int, *, limit: int = ENUMERATION_LIMIT) -> set[str]:
        """All accepted words of length at most ``max_len``, breadth first."""
        out: set[str] = set()
        if self.initial in self.finals:
            out.add("")
        frontier: list[tuple[int, str]] = [(self.initial, "")]
        sigma = len(self.alphabet)
        explored = 0
        for _ in range(max_len):
            nxt: list[tuple[int, str]] = []
            for state, word in frontier:
                base = state * sigma
                for i, sym in enumerate(self.alphabet.symbols):
                    t = self.flat[base + i]
                    if t < 0:
                        continue
                    explored += 1
                    if explored > limit:
                        raise LimitExceeded(
                            f"language enumeration exceeded {limit} words"
                        )
                    grown = word + sym
                    if t in self.finals:
                        out.add(grown)
                    nxt.append((t, grown))
            frontier = nxt
        return out

    def to_json(self) -> dict:
        data = {
            "alphabet": "".join(self.alphabet.symbols),
            "states": self.n_states,
            "initial": self.initial,
            "finals": sorted(self.finals),
            "transitions": [[int(p), sym, int(q)] for p, sym, q in self.transitions()],
        }
        if self.failure is not None:
            data["failure"] = [
                [int(state), int(target)]
                for state, target in enumerate(self.failure)
                if target >= 0
            ]
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "Dfa":
        alphabet = Alphabet(data["alphabet"])
        failure = None
        if "failure" in data:
            failure = {int(p): int(q) for p, q in data["failure"]}
        return cls.from_edges(
            alphabet,
            int(data["states"]),
            int(data["initial"]),
            (int(s) for s in data["finals"]),
            ((int(p), sym, int(q)) for p, sym, q in data["transitions"]),
            failure,
        )

    def __repr__(self) -> str:
        return (
            f"Dfa(states={self.n_states}, finals={len(self.finals)}, "
            f"alphabet={''.join(self.alphabet.symbols)!r})"
        )


def minimize(dfa: Dfa) -> Dfa:
    """The unique minimal DFA of the same language.

    Moore partition refinement over the completed automaton (one added dead
    state), then the dead class and unreachable states are dropped again.
    Failure links do not survive minimization.
    """
    sigma = len(dfa.alphabet)
    reach = dfa.reachable()
    index = {s: i for i, s in enumerate(reach)}
    n = len(reach)
    dead = n
    table: list[list[int]] = []
    for s in reach:
        base = s * sigma
        table.append(
            [index[dfa.flat[base + i]] if dfa.flat[base + i] >= 0 else dead for i in range(sigma)]
        )
    table.append([dead] * sigma)
    is_final = [s in dfa.finals for s in reach] + [False]

    cls_ids = [1 if f else 0 for f in is_final]
    n_classes = len(set(cls_ids))
    while True:
        sigs: dict[tuple, int] = {}
        new_ids = [0] * (n + 1)
        for s in range(n + 1):
            key = (cls_ids[s], tuple(cls_ids[t] for t in table[s]))
            found = sigs.get(key)
            if found is None:
                found = len(sigs)
                sigs[key] = found
            new_ids[s] = found
        cls_ids = new_ids
        if len(sigs) == n_classes:
            break
        n_classes = len(sigs)

    dead_cls = cls_ids[dead]
    init_cls = cls_ids[0]
    if init_cls == dead_cls:
        return Dfa(dfa.alphabet, 1, 0, set(), [-1] * sigma)

    rep: dict[int, int] = {}
    for s in range(n + 1):
        rep.setdefault(cls_ids[s], s)
    # canonical BFS numbering of the surviving classes
    renum = {init_cls: 0}
    order = [init_cls]
    head = 0
    while head < len(order):
        c = order[head]
        head += 1
        for i in range(sigma):
            t = cls_ids[table[rep[c]][i]]
            if t != dead_cls and t not in renum:
                renum[t] = len(renum)
                order.append(t)
    flat = [-1] * (len(order) * sigma)
    finals = set()
    for c in order:
        new_id = renum[c]
        if is_final[rep[c]]:
            finals.add(new_id)
        for i in range(sigma):
            t = cls_ids[table[rep[c]][i]]
            if t != dead_cls:
                flat[new_id * sigma + i] = renum[t]
    return Dfa(dfa.alphabet, len(order), 0, finals, flat)


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Whether two automata accept the same language (product walk)."""
    if set(a.alphabet.symbols) != set(b.alphabet.symbols):
        raise ValueError("cannot compare automata over different alphabets")
    dead = -1
    start = (a.initial, b.initial)
    seen = {start}
    stack = [start]
    while stack:
        p, q = stack.pop()
        fp = p in a.finals if p != dead else False
        fq = q in b.finals if q != dead else False
        if fp != fq:
            return False
        for sym in a.alphabet.symbols:
            tp = a.step(p, sym) if p != dead else None
            tq = b.step(q, sym) if q != dead else None
            pair = (dead if tp is None else tp, dead if tq is None else tq)
            if pair == (dead, dead):
                continue
            if pair not in seen:
                seen.add(pair)
                stack.append(pair)
    return True


def _canonical_form(dfa: Dfa) -> tuple:
    """BFS renumbering (alphabet order) of the reachable part, as a tuple."""
    sigma = len(dfa.alphabet)
    renum = {dfa.initial: 0}
    order = [dfa.initial]
    head = 0
    while head < len(order):
        base = order[head] * sigma
        head += 1
        for i in range(sigma):
            t = dfa.flat[base + i]
            if t >= 0 and t not in renum:
                renum[t] = len(renum)
                order.append(t)
    edges = []
    finals = []
    for s in order:
        finals.append(s in dfa.finals)
        base = s * sigma
        edges.append(
            tuple(renum[dfa.flat[base + i]] if dfa.flat[base + i] >= 0 else -1 for i in range(sigma))
        )
    return len(order), tuple(finals), tuple(edges)


def isomorphic(a: Dfa, b: Dfa) -> bool:
    """Structural equality up to renaming of states (reachable parts)."""
    if a.alphabet.symbols != b.alphabet.symbols:
        return False
    return _canonical_form(a) == _canonical_form(b)


def strip_sinks(dfa: Dfa) -> Dfa:
    """Remove non-final states whose every outgoing edge loops back on itself.

    These are the absorbing sinks a complete avoidance automaton parks
    forbidden continuations in; removing them leaves the natural partial
    automaton.  The initial state is never removed.  Failure links into a
    removed state (none arise for antifactorial inputs) are dropped.
    """
    sigma = len(dfa.alphabet)
    doomed = set()
    for s in range(dfa.n_states):
        if s == dfa.initial or s in dfa.finals:
            continue
        base = s * sigma
        if all(dfa.flat[base + i] in (-1, s) for i in range(sigma)):
            doomed.add(s)
    if not doomed:
        return dfa
    keep = [s for s in range(dfa.n_states) if s not in doomed]
    renum = {s: i for i, s in enumerate(keep)}
    flat = [-1] * (len(keep) * sigma)
    for new_id, s in enumerate(keep):
        base = s * sigma
        for i in range(sigma):
            t = dfa.flat[base + i]
            if t >= 0 and t not in doomed:
                flat[new_id * sigma + i] = renum[t]
    failure = None
    if dfa.failure is not None:
        failure = [
            renum[dfa.failure[s]] if dfa.failure[s] >= 0 and dfa.failure[s] not in doomed else -1
            for s in keep
        ]
    finals = {renum[s] for s in dfa.finals if s not in doomed}
    return Dfa(dfa.alphabet, len(keep), renum[dfa.initial], finals, flat, failure)


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(automaton: Trie | Dfa) -> str:
    """DOT rendering: double circles for finals, dashed edges for failure links.

    States are labelled by BFS discovery order so output is stable across runs.
    """
    if isinstance(automaton, Trie):
        alphabet = automaton.alphabet
        initial = automaton.root
        finals = automaton.sinks
        n_states = automaton.n_states
        out_edges = lambda s: sorted(
            automaton.transitions[s].items(), key=lambda kv: alphabet.rank(kv[0])
        )
        failure = None
    else:
        alphabet = automaton.alphabet
        initial = automaton.initial
        finals = automaton.finals
        n_states = automaton.n_states
        out_edges = automaton.out_edges
        failure = automaton.failure

    renum = {initial: 0}
    order = [initial]
    head = 0
    while head < len(order):
        state = order[head]
        head += 1
        for _, target in out_edges(state):
            if target not in renum:
                renum[target] = len(renum)
                order.append(target)
    for state in range(n_states):  # unreachable states, if any, come last
        if state not in renum:
            renum[state] = len(renum)
            order.append(state)

    lines = ["digraph automaton {", "  rankdir=LR;", '  __start [shape=point, label=""];']
    lines.append(f"  __start -> q{renum[initial]};")
    for state in order:
        shape = "doublecircle" if state in finals else "circle"
        lines.append(f"  q{renum[state]} [shape={shape}, label={_dot_quote(str(renum[state]))}];")
    for state in order:
        for sym, target in out_edges(state):
            lines.append(f"  q{renum[state]} -> q{renum[target]} [label={_dot_quote(sym)}];")
    if failure is not None:
        for state in order:
            target = failure[state]
            if target >= 0:
                lines.append(
                    f"  q{renum[state]} -> q{renum[target]} "
                    "[style=dashed, constraint=false];"
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
