"""The mirror family: short expressions whose automata must be exponential.

``mirror_expr(n)`` has 2n symbols, yet its language needs at least 2^n
NFA states.  The bound is certified with a fooling set (prefix/suffix
pairs that each recombine into the language only with their own
partner), checked word by word with the derivative-based membership test.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import asdict, dataclass
from typing import Hashable, List, Optional, Sequence, Tuple

from . import expr as ex
from . import formula as fm
from .automaton import determinize, minimize
from .derivative import derived_term_automaton, member
from .errors import AlphabetTooSmall, VerificationFailed
from .glushkov import glushkov_automaton

DEFAULT_CAP = 8


def letters(count: int) -> List[str]:
    """``a``..``z``, then ``a1``..``z1``, ``a2``.. for larger counts."""
    base = string.ascii_lowercase
    return [base[k % 26] + (str(k // 26) if k >= 26 else "") for k in range(count)]


def mirror_expr(n: int, alphabet: Optional[Sequence[Hashable]] = None) -> ex.ExtExpr:
    if n < 1:
        raise ValueError("mirror_expr needs n >= 1")
    alphabet = letters(2 * n) if alphabet is None else list(alphabet)
    if len(set(alphabet)) < 2 * n:
        raise AlphabetTooSmall(f"need {2 * n} distinct symbols, got {len(set(alphabet))}")
    return ex.smart_tilde(fm.mirror(n), [ex.Sym(s) for s in alphabet[: 2 * n]])


@dataclass(frozen=True)
class FoolingPair:
    prefix: Tuple[Hashable, ...]
    suffix: Tuple[Hashable, ...]
    tag: Tuple[bool, ...]


def fooling_pairs(n: int, alphabet: Optional[Sequence[Hashable]] = None) -> List[FoolingPair]:
    """One pair per Boolean vector ``bs``; true entries erase a letter.

    The prefix keeps ``a_k`` for each false ``b_k``; the suffix is built the
    same way over ``a_{n+1}..a_{2n}`` from the reversed vector.
    """
    alphabet = letters(2 * n) if alphabet is None else list(alphabet)
    if len(set(alphabet)) < 2 * n:
        raise AlphabetTooSmall(f"need {2 * n} distinct symbols, got {len(set(alphabet))}")
    pairs = []
    for bs in itertools.product((False, True), repeat=n):
        rev = bs[::-1]
        prefix = tuple(alphabet[k] for k in range(n) if not bs[k])
        suffix = tuple(alphabet[n + k] for k in range(n) if not rev[k])
        pairs.append(FoolingPair(prefix, suffix, tuple(bs)))
    return pairs


def fooling_set(
    n: int, cap: int = DEFAULT_CAP, alphabet: Optional[Sequence[Hashable]] = None
) -> List[FoolingPair]:
    """The 2^n pairs, after checking every accept and every cross-reject case."""
    if n > cap:
        raise ValueError(f"n={n} exceeds the cap of {cap}")
    e = mirror_expr(n, alphabet)
    pairs = fooling_pairs(n, alphabet)
    for i, x in enumerate(pairs):
        for j, w in enumerate(pairs):
            inside = member(e, x.prefix + w.suffix)
            if inside != (i == j):
                raise VerificationFailed(
                    f"prefix {x.prefix!r} with suffix {w.suffix!r}: "
                    f"member={inside}, expected {i == j}"
                )
    return pairs


@dataclass(frozen=True)
class SizeReport:
    n: int
    symbols: int
    dta_states: int
    glushkov_states: int
    min_dfa_states: int
    fooling_bound: int

    def lines(self) -> List[str]:
        return [f"{k}={v}" for k, v in asdict(self).items()]


def size_report(n: int, cap: int = DEFAULT_CAP) -> SizeReport:
    if n > cap:
        raise ValueError(f"n={n} exceeds the cap of {cap}")
    e = mirror_expr(n)
    dta = derived_term_automaton(e)
    glu = glushkov_automaton(e)
    min_dfa = minimize(determinize(dta))
    bound = len(fooling_set(n, cap))
    if bound != 2**n or len(min_dfa) < 2**n:
        raise VerificationFailed(
            f"n={n}: fooling bound {bound}, minimal DFA {len(min_dfa)} states, expected >= {2**n}"
        )
    return SizeReport(n, len(ex.symbols(e)), len(dta), len(glu), len(min_dfa), bound)
