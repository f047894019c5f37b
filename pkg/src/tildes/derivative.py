"""Antimirov partial derivatives for extended expressions.

The tilde clause peels the first operand: a symbol can be read either
from the first operand (kept in front of the remaining tilde), from the
remaining tilde when the first operand is nullable, or from the remaining
tilde once the first slot has been erased.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Hashable, Iterable, Iterator, Optional, Sequence, Tuple

from . import expr as ex
from .automaton import Nfa
from .errors import StateCapExceeded

DEFAULT_STATE_CAP = 10_000


class DerivSet:
    """Duplicate-free terms kept in first-derivation order.

    A term equal to the empty expression denotes nothing and is dropped,
    so ``{0}`` and ``{}`` are the same set.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[ex.ExtExpr] = ()):
        self.terms: Tuple[ex.ExtExpr, ...] = tuple(
            t for t in dict.fromkeys(terms) if not isinstance(t, ex.Empty)
        )

    def __iter__(self) -> Iterator[ex.ExtExpr]:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __contains__(self, term) -> bool:
        return term in self.terms

    def __eq__(self, other):
        if isinstance(other, DerivSet):
            return set(self.terms) == set(other.terms)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __or__(self, other: "DerivSet") -> "DerivSet":
        return DerivSet(self.terms + other.terms)

    def __repr__(self):
        return "{" + ", ".join(ex.to_text(t) for t in self.terms) + "}"

    def then(self, tail: ex.ExtExpr) -> "DerivSet":
        """Catenate ``tail`` after every term."""
        return DerivSet(ex.smart_concat(t, tail) for t in self.terms)


EMPTY_SET = DerivSet()


@lru_cache(maxsize=None)
def derive_symbol(e: ex.ExtExpr, a: Hashable) -> DerivSet:
    if isinstance(e, ex.Sym):
        return DerivSet([ex.EPS]) if e.symbol == a else EMPTY_SET
    if isinstance(e, (ex.Epsilon, ex.Empty)):
        return EMPTY_SET
    if isinstance(e, ex.Sum):
        return derive_symbol(e.lhs, a) | derive_symbol(e.rhs, a)
    if isinstance(e, ex.Concat):
        out = derive_symbol(e.lhs, a).then(e.rhs)
        if ex.nullable(e.lhs):
            out = out | derive_symbol(e.rhs, a)
        return out
    if isinstance(e, ex.Star):
        return derive_symbol(e.child, a).then(e)
    if isinstance(e, ex.Tilde):
        if not e.operands:
            return EMPTY_SET
        first = e.operands[0]
        kept, erased = ex.head_split(e.phi, e.operands)
        out = derive_symbol(first, a).then(kept)
        if ex.nullable(first):
            out = out | derive_symbol(kept, a)
        return out | derive_symbol(erased, a)
    raise TypeError(f"not an expression: {e!r}")


def derive_word(e: ex.ExtExpr, word: Sequence[Hashable]) -> DerivSet:
    current = DerivSet([e])
    for a in word:
        nxt = []
        for term in current:
            nxt.extend(derive_symbol(term, a))
        current = DerivSet(nxt)
        if not current.terms:
            break
    return current


def member(e: ex.ExtExpr, word: Sequence[Hashable]) -> bool:
    return any(ex.nullable(t) for t in derive_word(e, word))


def derived_term_automaton(
    e: ex.ExtExpr,
    alphabet: Optional[Iterable[Hashable]] = None,
    cap: int = DEFAULT_STATE_CAP,
) -> Nfa:
    """Automaton whose states are the derived terms of ``e``.

    States are listed in discovery order (breadth first, symbols in
    alphabet order).  ``alphabet`` defaults to the sorted symbols of ``e``.
    """
    if alphabet is None:
        alphabet = sorted(ex.symbols(e))
    alphabet = tuple(alphabet)
    states = {e: None}
    queue = [e]
    delta = {}
    head = 0
    while head < len(queue):
        state = queue[head]
        head += 1
        for a in alphabet:
            targets = derive_symbol(state, a).terms
            delta[(a, state)] = targets
            for t in targets:
                if t not in states:
                    if len(states) >= cap:
                        raise StateCapExceeded(f"more than {cap} derived terms")
                    states[t] = None
                    queue.append(t)
    finals = [s for s in queue if ex.nullable(s)]
    return Nfa(alphabet, queue, [e], finals, delta)
