"""Extended regular expressions with constrained tildes.

The node types are plain frozen dataclasses; ``Sym`` may carry any
hashable, ordered symbol (single characters at the surface, positions
inside the Glushkov construction).  The ``smart_*`` constructors apply the
small set of identities used when deriving terms; everything else is kept
as built.

:func:`language_upto` is the brute-force reference semantics.  It works
directly from the set-level definition of each operator and deliberately
shares nothing with the derivative and position-automaton code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, Hashable, Iterable, Sequence, Tuple, Union

from . import formula as fm
from .errors import AtomOutOfRange

Word = Tuple[Hashable, ...]


class _Node:
    __slots__ = ()

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True, eq=True)
class Sym(_Node):
    symbol: Hashable


@dataclass(frozen=True)
class Epsilon(_Node):
    pass


@dataclass(frozen=True)
class Empty(_Node):
    pass


@dataclass(frozen=True)
class Sum(_Node):
    lhs: "ExtExpr"
    rhs: "ExtExpr"


@dataclass(frozen=True)
class Concat(_Node):
    lhs: "ExtExpr"
    rhs: "ExtExpr"


@dataclass(frozen=True)
class Star(_Node):
    child: "ExtExpr"


@dataclass(frozen=True)
class Tilde(_Node):
    phi: fm.Formula
    operands: Tuple["ExtExpr", ...] = ()

    @property
    def arity(self) -> int:
        return len(self.operands)


ExtExpr = Union[Sym, Epsilon, Empty, Sum, Concat, Star, Tilde]

EPS = Epsilon()
EMPTY = Empty()


def plus(e: ExtExpr) -> ExtExpr:
    """``e+`` spelled out as ``e . e*``."""
    return smart_concat(e, Star(e))


def smart_concat(lhs: ExtExpr, rhs: ExtExpr) -> ExtExpr:
    if isinstance(lhs, Empty) or isinstance(rhs, Empty):
        return EMPTY
    if isinstance(lhs, Epsilon):
        return rhs
    if isinstance(rhs, Epsilon):
        return lhs
    return Concat(lhs, rhs)


def smart_sum(lhs: ExtExpr, rhs: ExtExpr) -> ExtExpr:
    if isinstance(lhs, Empty):
        return rhs
    if isinstance(rhs, Empty):
        return lhs
    return Sum(lhs, rhs)


def smart_tilde(phi: fm.Formula, operands: Sequence[ExtExpr]) -> ExtExpr:
    """Tilde node with a reduced formula; contradictions collapse to the empty set."""
    operands = tuple(operands)
    if fm.max_atom(phi) > len(operands):
        raise AtomOutOfRange(
            f"formula mentions atom {fm.max_atom(phi)} but the tilde has "
            f"{len(operands)} operands"
        )
    phi = fm.reduce(phi)
    if not fm.is_satisfiable(phi):
        return EMPTY
    if not operands and phi == fm.TRUE:
        return EPS
    return Tilde(phi, operands)


def head_split(phi: fm.Formula, operands: Sequence[ExtExpr]):
    """The two tildes left once the first operand is peeled off.

    Returns ``(kept, erased)``: the first operand's slot set to false (so
    it is catenated in front) or to true (so it is replaced by the empty
    word), both over ``operands[1:]``.
    """
    n = len(operands)
    rest = tuple(operands[1:])
    kept = smart_tilde(fm.shift_head(phi, False, n), rest)
    erased = smart_tilde(fm.shift_head(phi, True, n), rest)
    return kept, erased


@lru_cache(maxsize=None)
def nullable(e: ExtExpr) -> bool:
    if isinstance(e, (Sym, Empty)):
        return False
    if isinstance(e, (Epsilon, Star)):
        return True
    if isinstance(e, Sum):
        return nullable(e.lhs) or nullable(e.rhs)
    if isinstance(e, Concat):
        return nullable(e.lhs) and nullable(e.rhs)
    if isinstance(e, Tilde):
        if not e.operands:
            return fm.reduce(e.phi) == fm.TRUE
        kept, erased = head_split(e.phi, e.operands)
        return (nullable(e.operands[0]) and nullable(kept)) or nullable(erased)
    raise TypeError(f"not an expression: {e!r}")


def symbols(e: ExtExpr) -> FrozenSet[Hashable]:
    """Symbols occurring in ``e``."""
    if isinstance(e, Sym):
        return frozenset((e.symbol,))
    if isinstance(e, (Epsilon, Empty)):
        return frozenset()
    if isinstance(e, (Sum, Concat)):
        return symbols(e.lhs) | symbols(e.rhs)
    if isinstance(e, Star):
        return symbols(e.child)
    if isinstance(e, Tilde):
        return frozenset().union(*(symbols(o) for o in e.operands))
    raise TypeError(f"not an expression: {e!r}")


def size(e: ExtExpr) -> int:
    """Number of nodes."""
    if isinstance(e, (Sum, Concat)):
        return 1 + size(e.lhs) + size(e.rhs)
    if isinstance(e, Star):
        return 1 + size(e.child)
    if isinstance(e, Tilde):
        return 1 + sum(size(o) for o in e.operands)
    return 1


# ---------------------------------------------------------------------------
# Reference semantics over a finite length window
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LangSample:
    """All words of a language whose length is at most ``bound``.

    Words are tuples of symbols; ``strings()`` joins single-character
    symbols for readable comparisons.
    """

    bound: int
    words: FrozenSet[Word] = field(default_factory=frozenset)

    def __post_init__(self):
        if any(len(w) > self.bound for w in self.words):
            raise ValueError("word longer than the sample bound")

    def __contains__(self, word) -> bool:
        return tuple(word) in self.words

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words, key=lambda w: (len(w), [str(s) for s in w])))

    def strings(self) -> FrozenSet[str]:
        return frozenset("".join(map(str, w)) for w in self.words)

    def map_symbols(self, h) -> "LangSample":
        return LangSample(self.bound, frozenset(tuple(h(s) for s in w) for w in self.words))


def _catenate(left: FrozenSet[Word], right: FrozenSet[Word], bound: int) -> FrozenSet[Word]:
    return frozenset(u + v for u in left for v in right if len(u) + len(v) <= bound)


def _star(base: FrozenSet[Word], bound: int) -> FrozenSet[Word]:
    # A word of length <= bound splits into at most `bound` non-empty factors.
    nonempty = frozenset(w for w in base if w)
    result = frozenset([()])
    layer = result
    for _ in range(bound):
        layer = _catenate(layer, nonempty, bound) - result
        if not layer:
            break
        result |= layer
    return result


def _words(e: ExtExpr, bound: int, memo: dict) -> FrozenSet[Word]:
    key = (e, bound)
    if key in memo:
        return memo[key]
    if isinstance(e, Sym):
        out = frozenset([(e.symbol,)]) if bound >= 1 else frozenset()
    elif isinstance(e, Epsilon):
        out = frozenset([()])
    elif isinstance(e, Empty):
        out = frozenset()
    elif isinstance(e, Sum):
        out = _words(e.lhs, bound, memo) | _words(e.rhs, bound, memo)
    elif isinstance(e, Concat):
        out = _catenate(_words(e.lhs, bound, memo), _words(e.rhs, bound, memo), bound)
    elif isinstance(e, Star):
        out = _star(_words(e.child, bound, memo), bound)
    elif isinstance(e, Tilde):
        langs = [_words(o, bound, memo) for o in e.operands]
        just_eps = frozenset([()])
        acc = set()
        for interp in fm.satisfying_interpretations(e.phi, len(langs)):
            product = just_eps
            for k, lang in enumerate(langs, start=1):
                product = _catenate(product, just_eps if interp(k) else lang, bound)
                if not product:
                    break
            acc |= product
        out = frozenset(acc)
    else:
        raise TypeError(f"not an expression: {e!r}")
    memo[key] = out
    return out


def language_upto(e: ExtExpr, bound: int) -> LangSample:
    """Every word of L(e) of length at most ``bound``, by direct set computation."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return LangSample(bound, _words(e, bound, {}))


def quotient_upto(e: ExtExpr, a: Hashable, bound: int) -> LangSample:
    """``{w : a.w in L(e), |w| <= bound}``, read off the oracle language."""
    words = language_upto(e, bound + 1).words
    return LangSample(bound, frozenset(w[1:] for w in words if w and w[0] == a))


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

_SUM, _CAT, _POST = range(3)


def _level(e: ExtExpr) -> int:
    if isinstance(e, Sum):
        return _SUM
    if isinstance(e, Concat) and not _is_plus(e):
        return _CAT
    return _POST


def _is_plus(e: ExtExpr) -> bool:
    return isinstance(e, Concat) and isinstance(e.rhs, Star) and e.rhs.child == e.lhs


def _symbol_text(symbol) -> str:
    return str(symbol)


def _wrap(e: ExtExpr, minimum: int) -> str:
    text = to_text(e)
    return text if _level(e) >= minimum else f"({text})"


def to_text(e: ExtExpr) -> str:
    """Surface syntax; ``parse(to_text(e)) == e`` for smart-constructed ``e``."""
    if isinstance(e, Sym):
        return _symbol_text(e.symbol)
    if isinstance(e, Epsilon):
        return "1"
    if isinstance(e, Empty):
        return "0"
    if isinstance(e, Sum):
        return f"{_wrap(e.lhs, _SUM)} + {_wrap(e.rhs, _CAT)}"
    if isinstance(e, Concat):
        if _is_plus(e):
            return _wrap(e.lhs, _POST) + "+"
        left, right = _wrap(e.lhs, _CAT), _wrap(e.rhs, _POST)
        # A trailing postfix '+' directly followed by an operand would read as a sum.
        sep = "." if left.endswith("+") else ""
        return left + sep + right
    if isinstance(e, Star):
        return _wrap(e.child, _POST) + "*"
    if isinstance(e, Tilde):
        ops = ", ".join(to_text(o) for o in e.operands)
        return f"T[{fm.format_formula(e.phi)}]({ops})"
    raise TypeError(f"not an expression: {e!r}")
