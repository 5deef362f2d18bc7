"""Resolution engine: unification, inference rules, saturation, proof checking."""

import dataclasses
import itertools
import random

from folkit.syntax import App, Var
from folkit.clausal import Clause, Literal, clause_str, clausify
from folkit.saturation import (
    Clash,
    Derivation,
    Limits,
    Mgu,
    OccursCheckFailure,
    Refutation,
    ResourceOut,
    Saturated,
    check_derivation,
    factor,
    format_derivation,
    resolve,
    saturate,
    subsumes,
    unify,
)

from oracles import match_term, tt_satisfiable

X, Y, Z = Var("X"), Var("Y"), Var("Z")
a, b = App("a", ()), App("b", ())


def f(*args):
    return App("f", args)


def g(*args):
    return App("g", args)


def apply(sub, term):
    if isinstance(term, Var):
        return sub.bindings.get(term.name, term)
    return App(term.op, tuple(apply(sub, t) for t in term.args))


# -- unification ------------------------------------------------------------

def test_unify_variable_against_constant():
    result = unify(f(X), f(a))
    assert isinstance(result, Mgu)
    assert dict(result.substitution.bindings) == {"X": a}


def test_unify_binds_both_sides():
    result = unify(f(X, b), f(a, Y))
    assert isinstance(result, Mgu)
    assert apply(result.substitution, f(X, b)) == f(a, b)
    assert apply(result.substitution, f(a, Y)) == f(a, b)


def test_unify_chains_variables():
    result = unify(f(X, X), f(Y, a))
    assert isinstance(result, Mgu)
    assert apply(result.substitution, f(X, X)) == f(a, a)
    assert result.substitution.is_idempotent()


def test_unify_clash_on_symbols():
    assert isinstance(unify(a, b), Clash)
    assert isinstance(unify(f(X), g(X)), Clash)


def test_unify_occurs_check():
    assert isinstance(unify(X, f(X)), OccursCheckFailure)
    assert isinstance(unify(f(X, a), f(g(X), Y)), OccursCheckFailure)


def _abstract(rng, term, prefix, counter):
    """Replace random subterms of a ground term with fresh variables."""
    if rng.random() < 0.3:
        name = f"{prefix}{next(counter)}"
        return Var(name), {name: term}
    if isinstance(term, Var) or not term.args:
        return term, {}
    args, binding = [], {}
    for t in term.args:
        new, got = _abstract(rng, t, prefix, counter)
        args.append(new)
        binding.update(got)
    return App(term.op, tuple(args)), binding


def _ground_term(rng, depth):
    if depth == 0 or rng.random() < 0.4:
        return rng.choice([a, b])
    return App(rng.choice(["f", "g"]), (_ground_term(rng, depth - 1),
                                        _ground_term(rng, depth - 1)))


def test_unify_is_most_general_on_random_pairs():
    rng = random.Random(23)
    successes = 0
    for _ in range(200):
        ground = _ground_term(rng, 3)
        left, tau1 = _abstract(rng, ground, "L", itertools.count())
        right, tau2 = _abstract(rng, ground, "R", itertools.count())
        result = unify(left, right)
        # tau1 | tau2 is a unifier, so unification must succeed ...
        assert isinstance(result, Mgu), (left, right)
        sigma = result.substitution
        unified = apply(sigma, left)
        assert unified == apply(sigma, right)
        # ... and the known unifier must be an instance of the mgu.
        assert match_term(unified, ground, {})
        successes += 1
    assert successes == 200


# -- resolution and factoring -------------------------------------------------

def test_resolve_basic():
    c1 = Clause([Literal(True, "p", (X,)), Literal(True, "q", (X,))])
    c2 = Clause([Literal(False, "p", (a,))])
    results = resolve(c1, c2)
    assert len(results) == 1
    resolvent, positions, mgu = results[0]
    assert clause_str(resolvent) == "q(a)"
    assert positions == (0, 0)
    assert dict(mgu.bindings) == {"X": a}


def test_resolve_requires_complementary_pair():
    c1 = Clause([Literal(True, "p", (X,))])
    assert resolve(c1, Clause([Literal(True, "p", (a,))])) == []
    assert resolve(c1, Clause([Literal(False, "q", (a,))])) == []


def test_resolve_returns_every_choice():
    c1 = Clause([Literal(True, "p", (X,)), Literal(True, "p", (a,))])
    c2 = Clause([Literal(False, "p", (b,)), Literal(False, "p", (Y,))])
    pairs = {positions for _, positions, _ in resolve(c1, c2)}
    assert pairs == {(0, 0), (0, 1), (1, 1)}  # p(a) vs ~p(b) clashes


def test_resolve_merges_labels():
    c1 = Clause([Literal(True, "p", ())], labels=("ax1",))
    c2 = Clause([Literal(False, "p", ())], labels=("ax2",))
    (resolvent, _, _), = resolve(c1, c2)
    assert resolvent.labels == ("ax1", "ax2")


def test_factor_unifies_same_sign_literals():
    c = Clause([Literal(True, "p", (X,)), Literal(True, "p", (a,))])
    results = factor(c)
    assert len(results) == 1
    factored, positions, mgu = results[0]
    assert clause_str(factored) == "p(a)"
    assert positions == (0, 1)
    assert dict(mgu.bindings) == {"X": a}


def test_factor_skips_opposite_signs():
    c = Clause([Literal(True, "p", (X,)), Literal(False, "p", (a,))])
    assert factor(c) == []


def _ground_clauses(rng, num_vars, count):
    clauses = []
    while len(clauses) < count:
        width = rng.randint(1, 3)
        lits = {(rng.random() < 0.5, rng.randrange(num_vars)) for _ in range(width)}
        clauses.append(sorted(lits))
    return clauses


def _dimacs(lits):
    return [idx + 1 if sign else -(idx + 1) for sign, idx in lits]


def test_resolvents_preserve_models_of_their_parents():
    """Soundness spot check: adding resolvents never changes satisfiability."""
    rng = random.Random(41)
    for _ in range(50):
        props = _ground_clauses(rng, 4, 5)
        as_clauses = [
            Clause([Literal(sign, f"v{idx}", ()) for sign, idx in lits])
            for lits in props
        ]
        derived = []
        for c1, c2 in itertools.combinations(as_clauses, 2):
            for resolvent, _, _ in resolve(c1, c2):
                derived.append(
                    [(l.positive, int(l.pred[1:])) for l in resolvent.literals]
                )
        before = tt_satisfiable(4, [_dimacs(c) for c in props])
        after = tt_satisfiable(4, [_dimacs(c) for c in props + derived])
        assert before == after


# -- subsumption --------------------------------------------------------------

def test_subsumes_instance_and_subset():
    general = Clause([Literal(True, "p", (X,))])
    assert subsumes(general, Clause([Literal(True, "p", (a,)),
                                     Literal(True, "q", ())]))
    assert not subsumes(general, Clause([Literal(False, "p", (a,))]))


def test_subsumes_needs_consistent_match():
    c = Clause([Literal(True, "p", (X, X))])
    assert not subsumes(c, Clause([Literal(True, "p", (a, b))]))
    assert subsumes(c, Clause([Literal(True, "p", (b, b))]))


# -- saturation ---------------------------------------------------------------

def test_saturate_single_unit_terminates():
    result = saturate([Clause([Literal(True, "p", (X,))])])
    assert isinstance(result, Saturated)


def test_saturate_finds_contradiction():
    clauses = [
        Clause([Literal(True, "p", (a,))], labels=("fact",)),
        Clause([Literal(False, "p", (X,))], labels=("denial",)),
    ]
    result = saturate(clauses)
    assert isinstance(result, Refutation)
    assert result.derivation.is_refutation()
    assert check_derivation(result.derivation, clauses)


def test_saturate_empty_input_is_satisfiable():
    assert isinstance(saturate([]), Saturated)


def test_saturate_propagates_input_empty_clause():
    result = saturate([Clause([])])
    assert isinstance(result, Refutation)
    assert len(result.derivation.steps) == 1


def test_saturate_respects_clause_limit(reduced_six):
    clauses = clausify(reduced_six)
    result = saturate(clauses, Limits(max_clauses=100, max_seconds=None))
    assert isinstance(result, ResourceOut)
    assert result.reason == "clause-limit"


def test_saturate_respects_time_limit(reduced_six):
    clauses = clausify(reduced_six)
    result = saturate(clauses, Limits(max_clauses=None, max_seconds=0.0))
    assert isinstance(result, ResourceOut)
    assert result.reason == "time-limit"


def test_saturate_is_deterministic(hypotheses):
    clauses = clausify([hypotheses["ax4"], hypotheses["ax8"], hypotheses["ax12"]])
    first = saturate(list(clauses))
    second = saturate(list(clauses))
    assert type(first) is type(second)
    assert first.generated == second.generated


# -- proof checking -----------------------------------------------------------

def refutation_steps(reduced_six_clauses):
    result = saturate(reduced_six_clauses)
    assert isinstance(result, Refutation)
    return result


def test_check_derivation_accepts_real_proofs():
    clauses = [
        Clause([Literal(True, "p", (X,)), Literal(True, "p", (Y,))]),
        Clause([Literal(False, "p", (a,))]),
        Clause([Literal(False, "p", (b,))]),
    ]
    result = saturate(clauses)
    assert isinstance(result, Refutation)
    assert check_derivation(result.derivation, clauses)


def test_check_derivation_rejects_empty_proof_of_nonempty_goal():
    assert check_derivation(Derivation([]), [])  # vacuously fine
    assert not Derivation([]).is_refutation()


def test_check_derivation_rejects_foreign_input():
    clauses = [Clause([Literal(True, "p", (a,))])]
    result = saturate(clauses + [Clause([Literal(False, "p", (X,))])])
    assert isinstance(result, Refutation)
    verdict = check_derivation(result.derivation, clauses)
    assert not verdict
    assert "input" in verdict.message


def test_check_derivation_detects_tampered_clause():
    clauses = [
        Clause([Literal(True, "p", (a,)), Literal(True, "q", ())]),
        Clause([Literal(False, "p", (X,))]),
        Clause([Literal(False, "q", ())]),
    ]
    result = saturate(clauses)
    assert isinstance(result, Refutation)
    steps = result.derivation.steps
    victim = next(
        i for i, s in enumerate(steps)
        if not isinstance(s.rule, type(steps[0].rule)) or len(s.clause.literals) == 1
    )
    target = steps[victim]
    doctored = dataclasses.replace(
        target, clause=Clause(list(target.clause.literals) + [Literal(True, "r", ())])
    )
    bad = Derivation(steps[:victim] + [doctored] + steps[victim + 1:])
    verdict = check_derivation(bad, clauses)
    assert not verdict
    assert verdict.failed_step is not None


def test_check_derivation_detects_wrong_substitution():
    clauses = [
        Clause([Literal(True, "p", (X,))]),
        Clause([Literal(False, "p", (a,))]),
    ]
    result = saturate(clauses)
    assert isinstance(result, Refutation)
    steps = list(result.derivation.steps)
    last = steps[-1]
    broken_rule = dataclasses.replace(last.rule, mgu=type(last.rule.mgu)({}))
    steps[-1] = dataclasses.replace(last, rule=broken_rule)
    verdict = check_derivation(Derivation(steps), clauses)
    assert not verdict
    assert verdict.failed_step == last.id


def test_format_derivation_layout():
    clauses = [
        Clause([Literal(True, "p", (a,))], labels=("fact",)),
        Clause([Literal(False, "p", (X,))], labels=("denial",)),
    ]
    result = saturate(clauses)
    text = format_derivation(result.derivation)
    lines = text.splitlines()
    assert lines[0].endswith("[input fact]")
    assert lines[1].endswith("[input denial]")
    assert lines[-1].startswith("0. $false [resolution ")
    assert text.endswith("\n")
