"""Formula and term basics: construction, alpha-equality, signatures."""

import pytest

from folkit.syntax import (
    And,
    App,
    Atom,
    Equal,
    Exists,
    Forall,
    Iff,
    Implies,
    Not,
    Or,
    Signature,
    SignatureError,
    Var,
    alpha_equal,
    formula_str,
    free_variables,
    is_closed,
    signature_of,
)

X, Y = Var("X"), Var("Y")
A = App("a", ())


def p(t):
    return Atom("p", (t,))


def test_terms_are_hashable_values():
    assert App("f", (X,)) == App("f", (X,))
    assert len({App("f", (X,)), App("f", (X,)), A}) == 2


def test_free_variables():
    assert free_variables(p(X)) == {"X"}
    assert free_variables(Forall("X", p(X))) == set()
    assert free_variables(Forall("X", And(p(X), p(Y)))) == {"Y"}
    assert free_variables(Exists("X", Equal(X, A))) == set()


def test_is_closed():
    assert is_closed(Forall("X", p(X)))
    assert not is_closed(p(X))


def test_alpha_equal_renames_bound_variables():
    f = Forall("X", Implies(p(X), Exists("Y", Equal(X, Y))))
    g = Forall("U", Implies(p(Var("U")), Exists("V", Equal(Var("U"), Var("V")))))
    assert alpha_equal(f, g)


def test_alpha_equal_distinguishes_structure():
    assert not alpha_equal(Forall("X", p(X)), Exists("X", p(X)))
    assert not alpha_equal(p(A), Atom("q", (A,)))
    assert not alpha_equal(And(p(A), p(A)), Or(p(A), p(A)))


def test_alpha_equal_requires_consistent_renaming():
    f = Forall("X", Forall("Y", Equal(X, Y)))
    g = Forall("X", Forall("Y", Equal(Y, Var("X"))))
    assert not alpha_equal(f, g)


def test_signature_of_collects_symbols_in_first_use_order():
    sig = signature_of([Forall("X", Iff(p(App("f", (X,))), Atom("q", (A, A))))])
    assert list(sig.predicates) == ["p", "q"]
    assert sig.predicates == {"p": 1, "q": 2}
    assert sig.functions == {"f": 1, "a": 0}


def test_signature_rejects_arity_clash():
    sig = Signature()
    sig.add_predicate("p", 1)
    with pytest.raises(SignatureError):
        sig.add_predicate("p", 2)
    with pytest.raises(SignatureError):
        sig.add_function("p", 1)


def test_signature_constants_and_copy():
    sig = Signature(functions={"bf": 1, "tarr": 0, "fether": 0})
    assert sig.constants() == ["tarr", "fether"]
    twin = sig.copy()
    twin.add_function("extra", 0)
    assert "extra" not in sig


def test_formula_str_is_reparseable_shape():
    f = Forall("X", Iff(p(X), Not(Atom("q", (X, A)))))
    text = formula_str(f)
    assert "![X]" in text and "<=>" in text and "~" in text
