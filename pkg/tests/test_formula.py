import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tildes import formula as fm
from tildes.errors import AtomOutOfRange, WidthTooLarge
from tildes.formula import FALSE, TRUE, And, Atom, Const, Iff, Implies, Interpretation, Not, Or

from strategies import formulas, formulas_with_width

a, b, c = Atom(1), Atom(2), Atom(3)


def truth_table(phi, n):
    return [fm.evaluate(phi, Interpretation(bits)) for bits in itertools.product((False, True), repeat=n)]


def brute_sat(phi, n):
    return any(truth_table(phi, n))


# -- eval ----------------------------------------------------------------------


def test_eval_satisfying_branch():
    phi = And((Not(And((a, b))), And((a, c))))
    assert fm.evaluate(phi, Interpretation((True, False, True))) is True


def test_eval_constant():
    assert fm.evaluate(TRUE, Interpretation(())) is True
    assert fm.evaluate(TRUE, Interpretation((False, True))) is True


def test_eval_mirror2_against_defining_condition():
    phi = fm.mirror(2)
    for bits in itertools.product((False, True), repeat=4):
        expected = (bits[0], bits[1]) == (bits[3], bits[2])
        assert fm.evaluate(phi, Interpretation(bits)) == expected


def test_eval_implies_and_iff():
    for x, y in itertools.product((False, True), repeat=2):
        i = Interpretation((x, y))
        assert fm.evaluate(Implies(a, b), i) == ((not x) or y)
        assert fm.evaluate(Iff(a, b), i) == ((x and y) or (not x and not y))


def test_eval_atom_out_of_range():
    with pytest.raises(AtomOutOfRange):
        fm.evaluate(c, Interpretation((True, True)))


def test_atoms_start_at_one():
    with pytest.raises(AtomOutOfRange):
        Atom(0)


# -- mirror --------------------------------------------------------------------


def test_mirror_zero_is_true():
    assert fm.mirror(0) == TRUE


def test_mirror_one_is_iff():
    assert fm.equivalent(fm.mirror(1), Iff(a, b), 2)


def test_mirror_two_has_four_models():
    assert len(fm.satisfying_interpretations(fm.mirror(2), 4)) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_mirror_models_count(n):
    assert len(fm.satisfying_interpretations(fm.mirror(n), 2 * n)) == 2**n


# -- substitute ----------------------------------------------------------------


def test_substitute_no_reduction():
    assert fm.substitute(And((a, b)), {1: FALSE}) == And((FALSE, b))


def test_substitute_is_simultaneous():
    assert fm.substitute(Or((a, b)), {1: b, 2: a}) == Or((b, a))


def test_substitute_mirror_head_false():
    phi = fm.reduce(fm.substitute(fm.mirror(2), {1: FALSE}))
    # Mirror_2(false, 2, 3, 4) ~ Mirror_1(2, 3) & !4
    expected = And((Iff(b, c), Not(Atom(4))))
    assert fm.equivalent(phi, expected, 4)


# -- shift_head / assign_last --------------------------------------------------


def test_shift_head_mirror2_false():
    phi = fm.shift_head(fm.mirror(2), False, 4)
    assert fm.max_atom(phi) <= 3
    assert fm.equivalent(phi, And((fm.mirror(1), Not(c))), 3)


def test_shift_head_constant():
    assert fm.shift_head(TRUE, True, 1) == TRUE


def test_shift_head_and_true():
    phi = fm.shift_head(And((a, b)), True, 2)
    assert truth_table(phi, 1) == [False, True]
    assert fm.equivalent(phi, a, 1)


def test_shift_head_range_check():
    with pytest.raises(AtomOutOfRange):
        fm.shift_head(c, False, 2)


def test_assign_last_examples():
    assert fm.equivalent(fm.assign_last(fm.mirror(1), False, 2), Not(a), 1)
    assert fm.assign_last(FALSE, True, 3) == FALSE
    assert fm.assign_last(Or((a, c)), True, 3) == TRUE


# -- reduce --------------------------------------------------------------------


def test_reduce_chain_to_false():
    assert fm.reduce(And((Not(FALSE), FALSE))) == FALSE


def test_reduce_atom_untouched():
    assert fm.reduce(a) == a


def test_reduce_drops_true_conjuncts():
    assert fm.reduce(And((And((TRUE, b)), And((TRUE, c))))) == And((b, c))


@pytest.mark.parametrize(
    "phi, expected",
    [
        (Not(FALSE), TRUE),
        (And((TRUE, a)), a),
        (And((a, FALSE)), FALSE),
        (Or((FALSE, a)), a),
        (Or((a, TRUE)), TRUE),
        (Implies(TRUE, a), a),
        (Implies(FALSE, a), TRUE),
        (Implies(a, TRUE), TRUE),
        (Implies(a, FALSE), Not(a)),
        (Iff(a, TRUE), a),
        (Iff(a, FALSE), Not(a)),
        (Iff(TRUE, a), a),
        (Iff(FALSE, a), Not(a)),
        (And(()), TRUE),
        (Or(()), FALSE),
    ],
)
def test_reduce_rules(phi, expected):
    assert fm.reduce(phi) == expected


@given(formulas_with_width())
def test_reduce_preserves_truth_table(case):
    phi, n = case
    assert truth_table(fm.reduce(phi), n) == truth_table(phi, n)


@given(formulas(0))
def test_reduce_closed_formula_is_constant(phi):
    assert isinstance(fm.reduce(phi), Const)


@given(formulas_with_width())
def test_reduce_idempotent(case):
    phi, _ = case
    once = fm.reduce(phi)
    assert fm.reduce(once) == once


# -- satisfiability ------------------------------------------------------------


def test_sat_small_example():
    assert fm.is_satisfiable(And((Not(And((a, b))), And((a, c)))))


def test_sat_trace_order():
    trace = []
    assert fm.is_satisfiable(And((Not(And((a, b))), And((a, c)))), trace)
    steps = [(atom, value, reduced) for atom, value, reduced in trace]
    assert steps == [
        (1, False, FALSE),
        (1, True, And((Not(b), c))),
        (2, False, c),
        (3, False, FALSE),
        (3, True, TRUE),
    ]


def test_sat_false_and_contradiction():
    assert not fm.is_satisfiable(FALSE)
    assert not fm.is_satisfiable(And((a, Not(a))))


def test_tautology_contradiction():
    assert fm.is_tautology(Or((a, Not(a))))
    assert not fm.is_contradiction(fm.mirror(1))
    assert fm.is_tautology(fm.mirror(0))


@settings(max_examples=300)
@given(formulas_with_width(max_width=10))
def test_sat_agrees_with_enumeration(case):
    phi, n = case
    assert fm.is_satisfiable(phi) == bool(fm.satisfying_interpretations(phi, n))
    assert fm.is_satisfiable(phi) == brute_sat(phi, n)


@given(formulas_with_width())
def test_tautology_matches_table(case):
    phi, n = case
    assert fm.is_tautology(phi) == all(truth_table(phi, n))


# -- equivalence ---------------------------------------------------------------


def test_equivalent_constants_width_zero():
    assert not fm.equivalent(TRUE, FALSE, 0)


def test_equivalent_mirror2_expansion():
    d = Atom(4)
    rhs = And((Or((And((a, d)), And((Not(a), Not(d))))), Or((And((b, c)), And((Not(b), Not(c)))))))
    assert fm.equivalent(fm.mirror(2), rhs, 4)


def test_equivalent_width_cap():
    with pytest.raises(WidthTooLarge):
        fm.equivalent(TRUE, TRUE, 21)
    assert fm.equivalent(TRUE, TRUE, 5, cap=5)


@given(formulas_with_width(max_width=5), st.data())
def test_shannon_expansion(case, data):
    phi, n = case
    if n == 0:
        return
    k = data.draw(st.integers(1, n))
    atom = Atom(k)
    expansion = Or(
        (
            And((Not(atom), fm.substitute(phi, {k: FALSE}))),
            And((atom, fm.substitute(phi, {k: TRUE}))),
        )
    )
    assert fm.equivalent(phi, expansion, n)


@given(formulas_with_width(max_width=5), formulas(5), st.data())
def test_substitution_semantics(case, psi, data):
    phi, n = case
    n = max(n, 5)
    k = data.draw(st.integers(1, n))
    for bits in itertools.product((False, True), repeat=n):
        i = Interpretation(bits)
        shifted = list(bits)
        shifted[k - 1] = fm.evaluate(psi, i)
        assert fm.evaluate(fm.substitute(phi, {k: psi}), i) == fm.evaluate(phi, Interpretation(tuple(shifted)))


@given(formulas_with_width(max_width=5), st.booleans())
def test_shift_head_truth_table(case, head):
    phi, n = case
    n = max(n, 1)
    shifted = fm.shift_head(phi, head, n)
    assert fm.max_atom(shifted) <= n - 1
    for bits in itertools.product((False, True), repeat=n - 1):
        full = Interpretation((head,) + bits)
        assert fm.evaluate(shifted, Interpretation(bits)) == fm.evaluate(phi, full)


@given(formulas_with_width(max_width=5), st.booleans())
def test_assign_last_truth_table(case, last):
    phi, n = case
    n = max(n, 1)
    assigned = fm.assign_last(phi, last, n)
    assert fm.max_atom(assigned) <= n - 1
    for bits in itertools.product((False, True), repeat=n - 1):
        assert fm.evaluate(assigned, Interpretation(bits)) == fm.evaluate(phi, Interpretation(bits + (last,)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_mirror_rewrite_laws(n):
    """Mirror_n(false, x..) ~ Mirror_{n-1}(x1..x_{2n-2}) & !x_{2n-1}, and dually for true."""
    width = 2 * n - 1
    rest = {k + 1: Atom(k) for k in range(1, 2 * n)}
    low = fm.substitute(fm.mirror(n - 1), {k: Atom(k) for k in range(1, 2 * n - 1)})
    head_false = fm.substitute(fm.mirror(n), {1: FALSE, **rest})
    head_true = fm.substitute(fm.mirror(n), {1: TRUE, **rest})
    assert fm.equivalent(head_false, And((low, Not(Atom(width)))), width)
    assert fm.equivalent(head_true, And((low, Atom(width))), width)


# -- satisfying interpretations ------------------------------------------------


def test_satisfying_mirror2():
    got = {str(i) for i in fm.satisfying_interpretations(fm.mirror(2), 4)}
    assert got == {"0000", "1001", "0110", "1111"}


def test_satisfying_false_is_empty():
    assert fm.satisfying_interpretations(FALSE, 3) == []


def test_satisfying_iff_width3():
    got = [str(i) for i in fm.satisfying_interpretations(Iff(a, c), 3)]
    assert got == ["000", "010", "101", "111"]


def test_canonical_order_is_ascending_binary():
    got = [str(i) for i in fm.satisfying_interpretations(TRUE, 3)]
    assert got == [format(k, "03b") for k in range(8)]


def test_interpretation_lookup_range():
    i = Interpretation.from_string("101")
    assert i(1) and not i(2) and i(3)
    with pytest.raises(AtomOutOfRange):
        i(4)
    with pytest.raises(AtomOutOfRange):
        i(0)
