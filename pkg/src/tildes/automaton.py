"""Nondeterministic automata over arbitrary hashable states.

The container never looks inside a state; the derived-term construction
uses expressions, the Glushkov construction positions, determinization
frozensets.  State order is the order given at construction and is used
for every listing, which keeps all output reproducible.
"""

from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Tuple

from .errors import UnknownSymbol
from .expr import LangSample


class _Sink:
    """Dead state added when completing a DFA."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "SINK"

    __str__ = __repr__


SINK = _Sink()


class Nfa:
    """Automaton ``(alphabet, states, initial, finals, delta)``.

    ``delta`` maps ``(symbol, state)`` to an iterable of targets; missing
    entries mean no transition.  Targets are stored in state order.
    """

    def __init__(self, alphabet, states, initial, finals, delta):
        self.alphabet: Tuple[Hashable, ...] = tuple(dict.fromkeys(alphabet))
        self.states: Tuple[Hashable, ...] = tuple(dict.fromkeys(states))
        self._index = {s: k for k, s in enumerate(self.states)}
        self.initial = frozenset(initial)
        self.finals = frozenset(finals)
        for group, name in ((self.initial, "initial"), (self.finals, "final")):
            stray = [s for s in group if s not in self._index]
            if stray:
                raise ValueError(f"{name} states not in the state set: {stray!r}")
        alpha = set(self.alphabet)
        self._delta: Dict[Tuple[Hashable, Hashable], Tuple[Hashable, ...]] = {}
        for (a, src), targets in dict(delta).items():
            if a not in alpha:
                raise ValueError(f"transition on symbol {a!r} outside the alphabet")
            if src not in self._index:
                raise ValueError(f"transition from unknown state {src!r}")
            targets = set(targets)
            stray = [t for t in targets if t not in self._index]
            if stray:
                raise ValueError(f"transition to unknown states {stray!r}")
            if targets:
                self._delta[(a, src)] = tuple(sorted(targets, key=self._index.__getitem__))

    def successors(self, state, a) -> Tuple[Hashable, ...]:
        return self._delta.get((a, state), ())

    def step(self, states: Iterable[Hashable], a) -> frozenset:
        out = set()
        for s in states:
            out.update(self._delta.get((a, s), ()))
        return frozenset(out)

    def transitions(self) -> Iterator[Tuple[Hashable, Hashable, Hashable]]:
        """``(source, symbol, target)`` triples in state then alphabet order."""
        for s in self.states:
            for a in self.alphabet:
                for t in self._delta.get((a, s), ()):
                    yield s, a, t

    @property
    def num_transitions(self) -> int:
        return sum(len(t) for t in self._delta.values())

    def ordered(self, states: Iterable[Hashable]) -> List[Hashable]:
        return sorted(states, key=self._index.__getitem__)

    def is_deterministic(self) -> bool:
        return len(self.initial) == 1 and all(len(t) <= 1 for t in self._delta.values())

    def __len__(self):
        return len(self.states)

    def __repr__(self):
        return (
            f"Nfa(states={len(self.states)}, finals={len(self.finals)}, "
            f"transitions={self.num_transitions}, alphabet={self.alphabet!r})"
        )


def accepts(automaton: Nfa, word: Iterable[Hashable]) -> bool:
    current = automaton.initial
    alphabet = set(automaton.alphabet)
    for a in word:
        if a not in alphabet:
            raise UnknownSymbol(f"symbol {a!r} not in alphabet {automaton.alphabet!r}")
        current = automaton.step(current, a)
        if not current:
            return False
    return bool(current & automaton.finals)


def enumerate_upto(automaton: Nfa, bound: int) -> LangSample:
    """Accepted words of length at most ``bound``, breadth first."""
    accepted = set()
    frontier = {(): automaton.initial} if automaton.initial else {}
    for length in range(bound + 1):
        for word, current in frontier.items():
            if current & automaton.finals:
                accepted.add(word)
        if length == bound:
            break
        nxt = {}
        for word, current in frontier.items():
            for a in automaton.alphabet:
                target = automaton.step(current, a)
                if target:
                    nxt[word + (a,)] = target
        frontier = nxt
        if not frontier:
            break
    return LangSample(bound, frozenset(accepted))


def determinize(automaton: Nfa, alphabet: Optional[Iterable[Hashable]] = None) -> Nfa:
    """Accessible subset construction; states are frozensets of source states."""
    alphabet = tuple(alphabet) if alphabet is not None else automaton.alphabet
    start = frozenset(automaton.initial)
    seen = {start: None}
    queue = [start]
    delta = {}
    head = 0
    while head < len(queue):
        subset = queue[head]
        head += 1
        for a in alphabet:
            target = automaton.step(subset, a)
            if not target:
                continue
            delta[(a, subset)] = (target,)
            if target not in seen:
                seen[target] = None
                queue.append(target)
    finals = [s for s in queue if s & automaton.finals]
    return Nfa(alphabet, queue, [start], finals, delta)


def complete(dfa: Nfa) -> Nfa:
    """Add a sink so every state has exactly one successor per symbol."""
    missing = any(not dfa.successors(s, a) for s in dfa.states for a in dfa.alphabet)
    if not missing:
        return dfa
    states = list(dfa.states) + [SINK]
    delta = {}
    for s in states:
        for a in dfa.alphabet:
            delta[(a, s)] = dfa.successors(s, a) if s is not SINK else ()
            if not delta[(a, s)]:
                delta[(a, s)] = (SINK,)
    return Nfa(dfa.alphabet, states, dfa.initial, dfa.finals, delta)


def minimize(dfa: Nfa) -> Nfa:
    """Moore partition refinement on the completed DFA.

    Each result state is the frozenset of merged input states (possibly
    including :data:`SINK`).
    """
    if not dfa.is_deterministic():
        raise ValueError("minimize expects a deterministic automaton")
    full = complete(dfa)
    block = {s: int(s in full.finals) for s in full.states}
    count = len(set(block.values()))
    while True:
        signatures = {}
        renumbered = {}
        for s in full.states:
            sig = (block[s],) + tuple(block[full.successors(s, a)[0]] for a in full.alphabet)
            renumbered[s] = signatures.setdefault(sig, len(signatures))
        block = renumbered
        if len(signatures) == count:
            break
        count = len(signatures)
    members: Dict[int, list] = {}
    for s in full.states:
        members.setdefault(block[s], []).append(s)
    as_set = {b: frozenset(m) for b, m in members.items()}
    states = [as_set[block[s]] for s in full.states]
    (start,) = full.initial
    delta = {}
    for b, group in members.items():
        rep = group[0]
        for a in full.alphabet:
            delta[(a, as_set[b])] = (as_set[block[full.successors(rep, a)[0]]],)
    finals = [as_set[block[s]] for s in full.finals]
    return Nfa(full.alphabet, states, [as_set[block[start]]], finals, delta)


def _min_complete(automaton: Nfa, alphabet) -> Nfa:
    return minimize(determinize(automaton, alphabet))


def equivalent(left: Nfa, right: Nfa) -> bool:
    """Exact language equality by exploring the product of the minimal DFAs."""
    return find_difference(left, right) is None


def find_difference(left: Nfa, right: Nfa) -> Optional[Tuple[Hashable, ...]]:
    """A shortest word accepted by exactly one automaton, or ``None``."""
    alphabet = tuple(dict.fromkeys(left.alphabet + right.alphabet))
    p, q = _min_complete(left, alphabet), _min_complete(right, alphabet)
    (p0,), (q0,) = p.initial, q.initial
    seen = {(p0, q0): ()}
    queue = [(p0, q0)]
    head = 0
    while head < len(queue):
        s, t = queue[head]
        head += 1
        word = seen[(s, t)]
        if (s in p.finals) != (t in q.finals):
            return word
        for a in alphabet:
            pair = (p.successors(s, a)[0], q.successors(t, a)[0])
            if pair not in seen:
                seen[pair] = word + (a,)
                queue.append(pair)
    return None


def _quote(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def to_dot(automaton: Nfa, labeler: Callable[[Hashable], str] = str, name: str = "automaton") -> str:
    """Graphviz text: state ``k`` is node ``q<k>``, a comment legend maps ids to labels.

    Initial states get an incoming arrow from an invisible ``start_q<k>``
    point; those helper nodes are not states.
    """
    ident = {s: f"q{k}" for k, s in enumerate(automaton.states)}
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for s in automaton.states:
        lines.append(f"  // {ident[s]}: {labeler(s)}")
    for s in automaton.states:
        shape = "doublecircle" if s in automaton.finals else "circle"
        lines.append(f"  {ident[s]} [label={_quote(labeler(s))}, shape={shape}];")
    for s in automaton.ordered(automaton.initial):
        lines.append(f"  start_{ident[s]} [shape=point, label=\"\"];")
        lines.append(f"  start_{ident[s]} -> {ident[s]};")
    for s, a, t in automaton.transitions():
        lines.append(f"  {ident[s]} -> {ident[t]} [label={_quote(a)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
