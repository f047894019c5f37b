"""Position (Glushkov) automaton for extended expressions.

Linearity alone is not enough once tildes are involved: the same symbol
occurrence may be followed by different positions, or be final or not,
depending on which satisfying interpretation of the enclosing formula is
in play.  Each tilde is therefore developed into a sum with one catenation
per satisfying interpretation, and every position under it records the
interpretation number in its context list.  The development happens on
demand while computing the position functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from . import expr as ex
from . import formula as fm
from .automaton import Nfa
from .errors import PositionCapExceeded

DEFAULT_POSITION_CAP = 5_000


@dataclass(frozen=True, order=True)
class Position:
    """An occurrence of ``base``: its linear ``index`` plus interpretation ``context``.

    The context lists interpretation numbers innermost first, outermost last.
    """

    base: Hashable
    index: int
    context: Tuple[int, ...] = ()

    def __str__(self):
        ctx = ",".join(map(str, self.context))
        return f"{self.base}({self.index},[{ctx}])"


def h(symbol):
    """Delinearization: forget index and context."""
    return symbol.base if isinstance(symbol, Position) else symbol


def linearize(e: ex.ExtExpr, start: int = 1) -> ex.ExtExpr:
    """Number symbol occurrences left to right from ``start``, empty contexts."""
    counter = [start]

    def walk(node):
        if isinstance(node, ex.Sym):
            pos = Position(node.symbol, counter[0], ())
            counter[0] += 1
            return ex.Sym(pos)
        if isinstance(node, (ex.Epsilon, ex.Empty)):
            return node
        if isinstance(node, ex.Sum):
            lhs = walk(node.lhs)
            return ex.Sum(lhs, walk(node.rhs))
        if isinstance(node, ex.Concat):
            lhs = walk(node.lhs)
            return ex.Concat(lhs, walk(node.rhs))
        if isinstance(node, ex.Star):
            return ex.Star(walk(node.child))
        if isinstance(node, ex.Tilde):
            return ex.Tilde(node.phi, tuple(walk(o) for o in node.operands))
        raise TypeError(f"not an expression: {node!r}")

    if start < 1:
        raise ValueError("linearization starts at index 1 or above")
    return walk(e)


def tag(e: ex.ExtExpr, j: int) -> ex.ExtExpr:
    """Prepend interpretation number ``j`` to the context of every position in ``e``."""
    if isinstance(e, ex.Sym):
        p = e.symbol
        return ex.Sym(Position(p.base, p.index, (j,) + p.context))
    if isinstance(e, (ex.Epsilon, ex.Empty)):
        return e
    if isinstance(e, ex.Sum):
        return ex.Sum(tag(e.lhs, j), tag(e.rhs, j))
    if isinstance(e, ex.Concat):
        return ex.Concat(tag(e.lhs, j), tag(e.rhs, j))
    if isinstance(e, ex.Star):
        return ex.Star(tag(e.child, j))
    if isinstance(e, ex.Tilde):
        return ex.Tilde(e.phi, tuple(tag(o, j) for o in e.operands))
    raise TypeError(f"not an expression: {e!r}")


def dev_phi(phi: fm.Formula, operands: Sequence[ex.ExtExpr]) -> ex.ExtExpr:
    """One-level development of a tilde over linear operands.

    Satisfying interpretations are numbered from 1 in canonical order.
    Interpretation ``j`` contributes the catenation of the operands it
    leaves in place (slot false), each tagged with ``j``; erased slots
    contribute nothing.  No expression identities are applied, so an empty
    product is ``1`` and an empty sum is ``0``.
    """
    operands = tuple(operands)
    total: Optional[ex.ExtExpr] = None
    for j, interp in enumerate(fm.satisfying_interpretations(phi, len(operands)), start=1):
        product: Optional[ex.ExtExpr] = None
        for m, operand in enumerate(operands, start=1):
            if interp(m):
                continue
            piece = tag(operand, j)
            product = piece if product is None else ex.Concat(product, piece)
        if product is None:
            product = ex.EPS
        total = product if total is None else ex.Sum(total, product)
    return ex.EMPTY if total is None else total


@dataclass(frozen=True)
class PositionFunctions:
    pos: FrozenSet[Position]
    first: FrozenSet[Position]
    last: FrozenSet[Position]
    follow: FrozenSet[Tuple[Position, Position]]
    null: bool


_NOTHING = frozenset()


def position_functions(e: ex.ExtExpr, cap: int = DEFAULT_POSITION_CAP) -> PositionFunctions:
    """Pos, First, Last, Follow and Null of a linear expression."""
    result = _functions(e, {}, cap)
    if len(result.pos) > cap:
        raise PositionCapExceeded(f"{len(result.pos)} positions exceed the cap of {cap}")
    return result


def _functions(e: ex.ExtExpr, memo: dict, cap: int) -> PositionFunctions:
    if e in memo:
        return memo[e]
    if isinstance(e, ex.Sym):
        single = frozenset((e.symbol,))
        out = PositionFunctions(single, single, single, _NOTHING, False)
    elif isinstance(e, ex.Epsilon):
        out = PositionFunctions(_NOTHING, _NOTHING, _NOTHING, _NOTHING, True)
    elif isinstance(e, ex.Empty):
        out = PositionFunctions(_NOTHING, _NOTHING, _NOTHING, _NOTHING, False)
    elif isinstance(e, ex.Sum):
        f, g = _functions(e.lhs, memo, cap), _functions(e.rhs, memo, cap)
        out = PositionFunctions(
            f.pos | g.pos, f.first | g.first, f.last | g.last, f.follow | g.follow, f.null or g.null
        )
    elif isinstance(e, ex.Concat):
        f, g = _functions(e.lhs, memo, cap), _functions(e.rhs, memo, cap)
        out = PositionFunctions(
            f.pos | g.pos,
            f.first | g.first if f.null else f.first,
            f.last | g.last if g.null else g.last,
            f.follow | g.follow | frozenset((p, q) for p in f.last for q in g.first),
            f.null and g.null,
        )
    elif isinstance(e, ex.Star):
        f = _functions(e.child, memo, cap)
        out = PositionFunctions(
            f.pos,
            f.first,
            f.last,
            f.follow | frozenset((p, q) for p in f.last for q in f.first),
            True,
        )
    elif isinstance(e, ex.Tilde):
        d = _functions(dev_phi(e.phi, e.operands), memo, cap)
        if len(d.pos) > cap:
            raise PositionCapExceeded(f"{len(d.pos)} positions exceed the cap of {cap}")
        out = PositionFunctions(d.pos, d.first, d.last, d.follow, ex.nullable(e))
    else:
        raise TypeError(f"not an expression: {e!r}")
    memo[e] = out
    return out


def surlinearize(e: ex.ExtExpr) -> ex.ExtExpr:
    """Expand every tilde, innermost structure included, into a classical linear expression."""
    if isinstance(e, (ex.Sym, ex.Epsilon, ex.Empty)):
        return e
    if isinstance(e, ex.Sum):
        return ex.Sum(surlinearize(e.lhs), surlinearize(e.rhs))
    if isinstance(e, ex.Concat):
        return ex.Concat(surlinearize(e.lhs), surlinearize(e.rhs))
    if isinstance(e, ex.Star):
        return ex.Star(surlinearize(e.child))
    if isinstance(e, ex.Tilde):
        return surlinearize(dev_phi(e.phi, e.operands))
    raise TypeError(f"not an expression: {e!r}")


INITIAL = 0


def glushkov_automaton(
    e: ex.ExtExpr,
    alphabet: Optional[Iterable[Hashable]] = None,
    cap: int = DEFAULT_POSITION_CAP,
) -> Nfa:
    """Position automaton of ``e`` with transitions labelled by base symbols.

    States are ``0`` followed by the positions in sorted order.
    """
    if alphabet is None:
        alphabet = sorted(ex.symbols(e))
    alphabet = tuple(alphabet)
    funcs = position_functions(linearize(e), cap)
    positions = sorted(funcs.pos)
    delta = {}
    for q in sorted(funcs.first):
        delta.setdefault((q.base, INITIAL), []).append(q)
    for p, q in sorted(funcs.follow):
        delta.setdefault((q.base, p), []).append(q)
    finals = list(funcs.last) + ([INITIAL] if funcs.null else [])
    extra = sorted({q.base for q in positions} - set(alphabet), key=str)
    return Nfa(alphabet + tuple(extra), [INITIAL] + positions, [INITIAL], finals, delta)
