"""TPTP parsing and printing: grammar corners, errors, round trips."""

import random

import pytest

from folkit.syntax import (
    And,
    App,
    Atom,
    Equal,
    Falsity,
    Forall,
    Iff,
    Implies,
    Not,
    Truth,
    Var,
    alpha_equal,
    formula_str,
)
from folkit.tptp import (
    ArityError,
    DuplicateLabelError,
    FreeVariableError,
    NamedFormula,
    ParseError,
    Problem,
    parse_tptp,
    print_tptp,
)

from oracles import random_closed_formula


def parse_one(text):
    units = parse_tptp(text).units
    assert len(units) == 1
    return units[0]


def test_parse_simple_iff():
    unit = parse_one("fof(ax12, axiom, sane(fether) <=> sane(tarr)).")
    assert unit.label == "ax12"
    assert unit.role == "axiom"
    tarr, fether = App("tarr", ()), App("fether", ())
    assert unit.formula == Iff(Atom("sane", (fether,)), Atom("sane", (tarr,)))


def test_parse_empty_text_is_empty_problem():
    assert parse_tptp("").units == []
    assert parse_tptp("% only a comment\n").units == []


def test_quantifier_body_extends_maximally():
    unit = parse_one("fof(ax8, axiom, sane(tarr) <=> ![X] : doctor(X) => sane(X)).")
    x = Var("X")
    want = Iff(
        Atom("sane", (App("tarr", ()),)),
        Forall("X", Implies(Atom("doctor", (x,)), Atom("sane", (x,)))),
    )
    assert alpha_equal(unit.formula, want)


def test_precedence_and_binds_tighter_than_implies():
    unit = parse_one("fof(a, axiom, p & q => r).")
    assert isinstance(unit.formula, Implies)
    assert isinstance(unit.formula.lhs, And)


def test_negation_binds_tightest():
    unit = parse_one("fof(a, axiom, ~p & q).")
    assert isinstance(unit.formula, And)
    assert unit.formula.lhs == Not(Atom("p", ()))


def test_equality_and_disequality():
    unit = parse_one("fof(a, axiom, ?[X] : (X = a & X != b)).")
    body = unit.formula.body
    assert isinstance(body.lhs, Equal)
    assert body.rhs == Not(Equal(Var("X"), App("b", ())))


def test_mixed_and_or_requires_parentheses():
    with pytest.raises(ParseError):
        parse_tptp("fof(a, axiom, p & q | r).")


def test_chained_implications_are_rejected():
    with pytest.raises(ParseError):
        parse_tptp("fof(a, axiom, p => q => r).")
    with pytest.raises(ParseError):
        parse_tptp("fof(a, axiom, p <=> q <=> r).")


def test_true_false_spellings():
    assert isinstance(parse_one("fof(c, conjecture, false).").formula, Falsity)
    assert isinstance(parse_one("fof(c, conjecture, $false).").formula, Falsity)
    assert isinstance(parse_one("fof(a, axiom, true).").formula, Truth)
    assert isinstance(parse_one("fof(a, axiom, $true).").formula, Truth)


def test_parse_error_reports_line_and_column():
    with pytest.raises(ParseError) as err:
        parse_tptp("fof(bad, axiom, p(.\n")
    assert "line 1" in str(err.value)
    assert "column" in str(err.value)


def test_arity_error():
    with pytest.raises(ArityError):
        parse_tptp("fof(a, axiom, p(x)). fof(b, axiom, p(x, y)).")


def test_duplicate_label_error():
    with pytest.raises(DuplicateLabelError):
        parse_tptp("fof(a, axiom, p). fof(a, axiom, q).")


def test_free_variable_rejected():
    with pytest.raises(FreeVariableError):
        parse_tptp("fof(a, axiom, p(X)).")


def test_unknown_role_rejected():
    with pytest.raises(ParseError):
        parse_tptp("fof(a, lemma, p).")


def test_two_conjectures_rejected():
    with pytest.raises(ParseError):
        parse_tptp("fof(a, conjecture, p). fof(b, conjecture, q).")


def test_comments_are_skipped():
    prob = parse_tptp("% header\nfof(a, axiom, p). % trailing\n% footer\n")
    assert [u.label for u in prob.units] == ["a"]


def test_figure_file_round_trip(figure1_text):
    prob = parse_tptp(figure1_text)
    assert [u.label for u in prob.units] == [
        "ax4", "ax5", "ax7", "ax8", "ax10", "ax12", "conc",
    ]
    again = parse_tptp(print_tptp(prob))
    for before, after in zip(prob.units, again.units):
        assert before.label == after.label
        assert before.role == after.role
        assert alpha_equal(before.formula, after.formula)


def test_print_empty_problem():
    assert print_tptp(Problem([])) == ""


def test_print_false_conjecture_round_trips():
    prob = parse_tptp("fof(c, conjecture, $false).")
    text = print_tptp(prob)
    assert "$false" in text
    assert isinstance(parse_tptp(text).units[0].formula, Falsity)


def test_random_formula_round_trips_through_printer():
    rng = random.Random(11)
    for _ in range(200):
        formula = random_closed_formula(rng)
        prob = Problem([NamedFormula("r", "axiom", formula)])
        text = print_tptp(prob)
        back = parse_tptp(text).units[0].formula
        assert alpha_equal(back, formula), text


def test_random_formula_round_trips_through_debug_printer():
    rng = random.Random(12)
    for _ in range(200):
        formula = random_closed_formula(rng)
        text = f"fof(r, axiom, {formula_str(formula)})."
        back = parse_tptp(text).units[0].formula
        assert alpha_equal(back, formula), text
