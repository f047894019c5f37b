"""Regular expressions with constrained multi-tildes.

A tilde ``T[phi](E1, ..., En)`` catenates its operands, and each
interpretation satisfying ``phi`` may replace the operands whose atoms it
makes true by the empty word.  Three independent backends compute the
language: a bounded brute-force semantics, the derived-term automaton,
and the position automaton.
"""

from .automaton import Nfa, accepts, determinize, enumerate_upto, equivalent, minimize, to_dot
from .derivative import DerivSet, derive_symbol, derive_word, derived_term_automaton, member
from .expr import (
    EMPTY,
    EPS,
    Concat,
    Empty,
    Epsilon,
    LangSample,
    Star,
    Sum,
    Sym,
    Tilde,
    language_upto,
    nullable,
    quotient_upto,
    smart_concat,
    smart_sum,
    smart_tilde,
    to_text,
)
from .glushkov import Position, glushkov_automaton, linearize, position_functions, surlinearize
from .syntax import parse, parse_formula

__version__ = "0.1.0"
