"""Boolean formulae over integer atoms ``1..n``.

Formulae are immutable trees.  Besides evaluation and substitution the
module provides the constant-propagating :func:`reduce`, a splitting
satisfiability check, truth-table equivalence and the two head/tail
transforms used by tilde nullability, derivation and quotients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from .errors import AtomOutOfRange, WidthTooLarge

DEFAULT_WIDTH_CAP = 20


@dataclass(frozen=True)
class Atom:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise AtomOutOfRange(f"atom indices start at 1, got {self.index}")

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Const:
    value: bool

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Not:
    child: "Formula"

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class And:
    children: Tuple["Formula", ...] = ()

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Or:
    children: Tuple["Formula", ...] = ()

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Implies:
    lhs: "Formula"
    rhs: "Formula"

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Iff:
    lhs: "Formula"
    rhs: "Formula"

    def __str__(self):
        return format_formula(self)


Formula = Union[Atom, Const, Not, And, Or, Implies, Iff]

TRUE = Const(True)
FALSE = Const(False)


def conj(*children: Formula) -> And:
    return And(tuple(children))


def disj(*children: Formula) -> Or:
    return Or(tuple(children))


@dataclass(frozen=True)
class Interpretation:
    """Total assignment of the atoms ``1..width``; ``bits[k-1]`` is atom k."""

    bits: Tuple[bool, ...]

    @property
    def width(self) -> int:
        return len(self.bits)

    def __call__(self, atom: int) -> bool:
        if not 1 <= atom <= len(self.bits):
            raise AtomOutOfRange(f"atom {atom} outside 1..{len(self.bits)}")
        return self.bits[atom - 1]

    @classmethod
    def from_string(cls, text: str) -> "Interpretation":
        return cls(tuple(c == "1" for c in text))

    def __str__(self):
        return "".join("1" if b else "0" for b in self.bits)


def atoms(phi: Formula) -> frozenset:
    """Set of atom indices occurring in ``phi``."""
    if isinstance(phi, Atom):
        return frozenset((phi.index,))
    if isinstance(phi, Const):
        return frozenset()
    return frozenset().union(*(atoms(c) for c in _children(phi)))


def max_atom(phi: Formula) -> int:
    found = atoms(phi)
    return max(found) if found else 0


def _children(phi: Formula) -> Tuple[Formula, ...]:
    if isinstance(phi, Not):
        return (phi.child,)
    if isinstance(phi, (And, Or)):
        return phi.children
    if isinstance(phi, (Implies, Iff)):
        return (phi.lhs, phi.rhs)
    return ()


def _check_width(phi: Formula, n: int) -> None:
    top = max_atom(phi)
    if top > n:
        raise AtomOutOfRange(f"atom {top} outside 1..{n}")


def evaluate(phi: Formula, i: Interpretation) -> bool:
    if isinstance(phi, Atom):
        return i(phi.index)
    if isinstance(phi, Const):
        return phi.value
    if isinstance(phi, Not):
        return not evaluate(phi.child, i)
    if isinstance(phi, And):
        return all(evaluate(c, i) for c in phi.children)
    if isinstance(phi, Or):
        return any(evaluate(c, i) for c in phi.children)
    if isinstance(phi, Implies):
        return (not evaluate(phi.lhs, i)) or evaluate(phi.rhs, i)
    if isinstance(phi, Iff):
        return evaluate(phi.lhs, i) == evaluate(phi.rhs, i)
    raise TypeError(f"not a formula: {phi!r}")


def mirror(n: int) -> Formula:
    """Expanded ``Mirror_n`` over atoms ``1..2n``: atom k agrees with atom 2n-k+1."""
    if n < 0:
        raise ValueError("mirror arity must be non-negative")
    if n == 0:
        return TRUE
    terms = []
    for k in range(1, n + 1):
        left, right = Atom(k), Atom(2 * n - k + 1)
        terms.append(disj(conj(left, right), conj(Not(left), Not(right))))
    return terms[0] if n == 1 else And(tuple(terms))


def substitute(phi: Formula, assignments: Mapping[int, Formula]) -> Formula:
    """Simultaneous replacement of atoms; substituted subtrees are not revisited."""
    if isinstance(phi, Atom):
        return assignments.get(phi.index, phi)
    if isinstance(phi, Const):
        return phi
    if isinstance(phi, Not):
        return Not(substitute(phi.child, assignments))
    if isinstance(phi, And):
        return And(tuple(substitute(c, assignments) for c in phi.children))
    if isinstance(phi, Or):
        return Or(tuple(substitute(c, assignments) for c in phi.children))
    if isinstance(phi, Implies):
        return Implies(substitute(phi.lhs, assignments), substitute(phi.rhs, assignments))
    if isinstance(phi, Iff):
        return Iff(substitute(phi.lhs, assignments), substitute(phi.rhs, assignments))
    raise TypeError(f"not a formula: {phi!r}")


def _negate(phi: Formula) -> Formula:
    if isinstance(phi, Const):
        return Const(not phi.value)
    return Not(phi)


def reduce(phi: Formula) -> Formula:
    """Bottom-up constant propagation.

    Every connective with a constant operand is simplified away, so a
    formula without atoms always comes back as a :class:`Const`.  Nothing
    else is normalized: operand order and nesting are kept.
    """
    if isinstance(phi, (Atom, Const)):
        return phi
    if isinstance(phi, Not):
        return _negate(reduce(phi.child))
    if isinstance(phi, (And, Or)):
        absorbing = isinstance(phi, Or)
        kept = []
        for child in phi.children:
            child = reduce(child)
            if isinstance(child, Const):
                if child.value == absorbing:
                    return Const(absorbing)
                continue
            kept.append(child)
        if not kept:
            return Const(not absorbing)
        if len(kept) == 1:
            return kept[0]
        return type(phi)(tuple(kept))
    if isinstance(phi, Implies):
        lhs, rhs = reduce(phi.lhs), reduce(phi.rhs)
        if isinstance(lhs, Const):
            return rhs if lhs.value else TRUE
        if isinstance(rhs, Const):
            return TRUE if rhs.value else _negate(lhs)
        return Implies(lhs, rhs)
    if isinstance(phi, Iff):
        lhs, rhs = reduce(phi.lhs), reduce(phi.rhs)
        if isinstance(lhs, Const):
            return rhs if lhs.value else _negate(rhs)
        if isinstance(rhs, Const):
            return lhs if rhs.value else _negate(lhs)
        return Iff(lhs, rhs)
    raise TypeError(f"not a formula: {phi!r}")


def shift_head(phi: Formula, head: bool, n: int) -> Formula:
    """``phi`` with atom 1 set to ``head`` and atoms 2..n renumbered to 1..n-1."""
    _check_width(phi, n)
    mapping: Dict[int, Formula] = {1: Const(head)}
    for k in range(2, n + 1):
        mapping[k] = Atom(k - 1)
    return reduce(substitute(phi, mapping))


def assign_last(phi: Formula, last: bool, n: int) -> Formula:
    """``phi`` with atom n set to ``last``; other atoms keep their numbers."""
    _check_width(phi, n)
    if n < 1:
        return reduce(phi)
    return reduce(substitute(phi, {n: Const(last)}))


def is_satisfiable(phi: Formula, trace: Optional[List] = None) -> bool:
    """Splitting procedure: reduce, then branch on the smallest atom, false first.

    If ``trace`` is a list, one ``(atom, value, reduced_formula)`` entry is
    appended per branch taken, in visiting order.
    """
    phi = reduce(phi)
    if isinstance(phi, Const):
        return phi.value
    atom = min(atoms(phi))
    for value in (False, True):
        branch = reduce(substitute(phi, {atom: Const(value)}))
        if trace is not None:
            trace.append((atom, value, branch))
        if is_satisfiable(branch, trace):
            return True
    return False


def is_contradiction(phi: Formula) -> bool:
    return not is_satisfiable(phi)


def is_tautology(phi: Formula) -> bool:
    return is_contradiction(Not(phi))


def interpretations(n: int, cap: int = DEFAULT_WIDTH_CAP) -> Iterator[Interpretation]:
    """All width-``n`` interpretations; atom 1 is the most significant bit."""
    if n > cap:
        raise WidthTooLarge(f"width {n} exceeds cap {cap}")
    for bits in itertools.product((False, True), repeat=n):
        yield Interpretation(bits)


def satisfying_interpretations(
    phi: Formula, n: int, cap: int = DEFAULT_WIDTH_CAP
) -> List[Interpretation]:
    _check_width(phi, n)
    return [i for i in interpretations(n, cap) if evaluate(phi, i)]


def equivalent(phi1: Formula, phi2: Formula, n: int, cap: int = DEFAULT_WIDTH_CAP) -> bool:
    _check_width(phi1, n)
    _check_width(phi2, n)
    return all(evaluate(phi1, i) == evaluate(phi2, i) for i in interpretations(n, cap))


# Printing.  Binding strength, loosest first: <->, ->, |, &, !.
_IFF, _IMPLIES, _OR, _AND, _NOT = range(5)


def _prec(phi: Formula) -> int:
    if isinstance(phi, Iff):
        return _IFF
    if isinstance(phi, Implies):
        return _IMPLIES
    if isinstance(phi, Or):
        return _OR
    if isinstance(phi, And):
        return _AND
    return _NOT


def format_formula(phi: Formula) -> str:
    """Text form accepted back by :func:`tildes.syntax.parse_formula`."""
    if isinstance(phi, Atom):
        return str(phi.index)
    if isinstance(phi, Const):
        return "true" if phi.value else "false"
    if isinstance(phi, Not):
        inner = format_formula(phi.child)
        return "!" + (inner if _prec(phi.child) == _NOT else f"({inner})")
    if isinstance(phi, (And, Or)):
        # Empty and unary connectives never survive reduce(); they print
        # as their meaning and do not round-trip structurally.
        if not phi.children:
            return "true" if isinstance(phi, And) else "false"
        if len(phi.children) == 1:
            return format_formula(phi.children[0])
        level = _prec(phi)
        sep = " & " if level == _AND else " | "
        parts = []
        for child in phi.children:
            text = format_formula(child)
            parts.append(text if _prec(child) > level else f"({text})")
        return sep.join(parts)
    if isinstance(phi, Implies):
        lhs, rhs = format_formula(phi.lhs), format_formula(phi.rhs)
        if _prec(phi.lhs) <= _IMPLIES:
            lhs = f"({lhs})"
        if _prec(phi.rhs) < _IMPLIES:
            rhs = f"({rhs})"
        return f"{lhs} -> {rhs}"
    if isinstance(phi, Iff):
        lhs, rhs = format_formula(phi.lhs), format_formula(phi.rhs)
        if _prec(phi.rhs) <= _IFF:
            rhs = f"({rhs})"
        return f"{lhs} <-> {rhs}"
    raise TypeError(f"not a formula: {phi!r}")
