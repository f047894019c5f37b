import random

import pytest
from hypothesis import given, settings

from tildes import formula as fm
from tildes.automaton import accepts, enumerate_upto
from tildes.derivative import DerivSet, derive_symbol, derive_word, derived_term_automaton, member
from tildes.errors import StateCapExceeded
from tildes.expr import EMPTY, EPS, Concat, Star, Sum, Sym, Tilde, language_upto, quotient_upto
from tildes.syntax import parse

from strategies import all_words, expressions, random_expr

MIRROR_PLUS = "T[mirror(2)](a+, b+, a+, b+)"


def same_shape(x, y):
    """Structural equality, except tilde formulas are compared by truth table."""
    if type(x) is not type(y):
        return False
    if isinstance(x, Tilde):
        return (
            x.arity == y.arity
            and fm.equivalent(x.phi, y.phi, x.arity)
            and all(same_shape(p, q) for p, q in zip(x.operands, y.operands))
        )
    if isinstance(x, (Sum, Concat)):
        return same_shape(x.lhs, y.lhs) and same_shape(x.rhs, y.rhs)
    if isinstance(x, Star):
        return same_shape(x.child, y.child)
    return x == y


def same_terms(got, expected):
    got = list(got)
    return len(got) == len(expected) and all(
        any(same_shape(g, e) for g in got) for e in expected
    )


def displayed(text):
    return parse(text)


# Expected terms, derived by hand with the formulas written out.
DELTA_A = [displayed("a*T[(1 <-> 2) & !3](b+, a+, b+)")]
DELTA_B = [displayed("b*T[!1 & 2](a+, b+)")]
DELTA_AB = [displayed("b*T[!1 & !2](a+, b+)"), displayed("b*")]


@pytest.mark.parametrize(
    "word, expected",
    [("a", DELTA_A), ("b", DELTA_B), ("aa", DELTA_A), ("ab", DELTA_AB)],
)
def test_mirror_plus_derivatives(word, expected):
    assert same_terms(derive_word(parse(MIRROR_PLUS), word), expected)


def test_classical_derivatives():
    e = parse("(a+b)*a(a+b)")
    assert derive_symbol(e, "b") == DerivSet([e])
    assert len(derive_symbol(e, "a")) == 2
    assert derive_symbol(Sym("a"), "a") == DerivSet([EPS])
    assert derive_symbol(EPS, "a") == DerivSet()
    assert derive_symbol(EMPTY, "a") == DerivSet()


def test_derivset_drops_empty_and_duplicates():
    s = DerivSet([Sym("a"), EMPTY, Sym("a"), EPS])
    assert s.terms == (Sym("a"), EPS)
    assert DerivSet([EMPTY]) == DerivSet()


def test_nullary_tilde_has_no_derivative():
    assert derive_symbol(Tilde(fm.TRUE, ()), "a") == DerivSet()


@pytest.mark.parametrize(
    "word, expected",
    [("", True), ("ab", True), ("ba", True), ("abab", True), ("aabb", True), ("aab", True), ("aba", False), ("bb", False)],
)
def test_member_mirror(word, expected):
    e = parse(MIRROR_PLUS)
    assert member(e, word) == expected
    assert (tuple(word) in language_upto(e, 4)) == expected


def test_member_nested():
    e = parse("T[1<->3](a, T[1->2](b,c), d)")
    accepted = {w for w in all_words("abcd", 4) if member(e, w)}
    assert {"".join(w) for w in accepted} == {"", "b", "bc", "ad", "abd", "abcd"}


def test_mirror_plus_automaton_shape():
    dta = derived_term_automaton(parse(MIRROR_PLUS))
    assert len(dta) == 7
    assert len(dta.finals) == 3
    assert dta.num_transitions == 13
    assert dta.states[0] == parse(MIRROR_PLUS)


def test_mirror_plus_automaton_language():
    e = parse(MIRROR_PLUS)
    assert enumerate_upto(derived_term_automaton(e), 8) == language_upto(e, 8)


def test_dta_is_deterministic_across_runs():
    e = parse(MIRROR_PLUS)
    first = derived_term_automaton(e)
    second = derived_term_automaton(e)
    assert first.states == second.states
    assert list(first.transitions()) == list(second.transitions())


def test_dta_state_cap():
    with pytest.raises(StateCapExceeded):
        derived_term_automaton(parse(MIRROR_PLUS), cap=3)


def test_quotient_matches_derivative_union():
    rng = random.Random(21)
    for _ in range(200):
        e = random_expr(rng, 4, "ab")
        for a in "ab":
            union = set()
            for term in derive_symbol(e, a):
                union |= language_upto(term, 5).words
            assert union == quotient_upto(e, a, 5).words


@settings(max_examples=100)
@given(expressions(alphabet="ab", max_leaves=6))
def test_member_agrees_with_oracle_and_dta(e):
    sample = language_upto(e, 4)
    dta = derived_term_automaton(e, alphabet="ab")
    for w in all_words("ab", 4):
        inside = w in sample
        assert member(e, w) == inside
        assert accepts(dta, w) == inside
