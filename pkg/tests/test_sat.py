"""CDCL solver: decisions, budgets, assignments, DIMACS input and output."""

import itertools
import random

import pytest

from folkit.sat import (
    CdclSolver,
    PropClauseSet,
    PropFormatError,
    Sat,
    Unsat,
    check_assignment,
    format_dimacs,
    parse_dimacs,
    sat_solve,
)

from oracles import random_prop_instance, tt_satisfiable


def pigeonhole(pigeons: int, holes: int) -> PropClauseSet:
    """p_{i,j} means pigeon i sits in hole j; one pigeon per hole."""
    def var(i, j):
        return i * holes + j + 1

    clauses = [[var(i, j) for j in range(holes)] for i in range(pigeons)]
    for j in range(holes):
        for i1, i2 in itertools.combinations(range(pigeons), 2):
            clauses.append([-var(i1, j), -var(i2, j)])
    return PropClauseSet(pigeons * holes, clauses)


def test_empty_problem_is_satisfiable():
    result = sat_solve(PropClauseSet(0, []))
    assert isinstance(result, Sat)
    assert result.assignment == {}


def test_unit_contradiction():
    assert isinstance(sat_solve(PropClauseSet(1, [[1], [-1]])), Unsat)


def test_simple_model():
    problem = PropClauseSet(3, [[1, 2], [-1], [-2, 3]])
    result = sat_solve(problem)
    assert isinstance(result, Sat)
    assert result.assignment[1] is False
    assert result.assignment[2] is True
    assert result.assignment[3] is True


def test_empty_clause_is_unsatisfiable():
    assert isinstance(sat_solve(PropClauseSet(2, [[1], []])), Unsat)


def test_pigeonhole_three_into_two():
    assert isinstance(sat_solve(pigeonhole(3, 2)), Unsat)


def test_pigeonhole_three_into_three():
    result = sat_solve(pigeonhole(3, 3))
    assert isinstance(result, Sat)
    assert check_assignment(pigeonhole(3, 3), result.assignment)


def test_agrees_with_truth_tables_on_random_instances():
    rng = random.Random(97)
    for _ in range(300):
        num_vars, clauses = random_prop_instance(rng, 6, 14)
        expected = tt_satisfiable(num_vars, clauses)
        result = sat_solve(PropClauseSet(num_vars, clauses))
        if expected:
            assert isinstance(result, Sat)
            assert check_assignment(PropClauseSet(num_vars, clauses),
                                    result.assignment)
        else:
            assert isinstance(result, Unsat)


def test_repeated_runs_return_identical_assignments():
    rng = random.Random(3)
    for _ in range(20):
        num_vars, clauses = random_prop_instance(rng, 8, 20)
        first = sat_solve(PropClauseSet(num_vars, clauses))
        second = sat_solve(PropClauseSet(num_vars, clauses))
        assert type(first) is type(second)
        if isinstance(first, Sat):
            assert first.assignment == second.assignment


def test_solver_budget_pauses_and_resumes():
    problem = pigeonhole(5, 4)
    solver = CdclSolver(problem.n)
    for clause in problem.clauses:
        solver.add_clause(clause)
    rounds = 0
    verdict = None
    while verdict is None:
        verdict = solver.solve(max_conflicts=1)
        rounds += 1
        assert rounds < 10_000
    assert verdict is False
    assert rounds > 1  # the budget actually interrupted the search


def test_budget_resume_matches_one_shot_answer():
    rng = random.Random(55)
    for _ in range(40):
        num_vars, clauses = random_prop_instance(rng, 8, 24)
        oneshot = sat_solve(PropClauseSet(num_vars, clauses))
        solver = CdclSolver(num_vars)
        for clause in clauses:
            solver.add_clause(clause)
        verdict = None
        while verdict is None:
            verdict = solver.solve(max_conflicts=2)
        assert verdict is isinstance(oneshot, Sat)
        if verdict:
            assert check_assignment(
                PropClauseSet(num_vars, clauses), solver.assignment()
            )


def test_check_assignment_rejects_falsified_clause():
    problem = PropClauseSet(2, [[1], [-2]])
    assert check_assignment(problem, {1: True, 2: False})
    assert not check_assignment(problem, {1: True, 2: True})
    assert not check_assignment(problem, {2: False})  # missing var 1


def test_clause_set_validation():
    with pytest.raises(PropFormatError):
        PropClauseSet(-1, [])
    with pytest.raises(PropFormatError):
        PropClauseSet(2, [[1, 0]])
    with pytest.raises(PropFormatError):
        PropClauseSet(2, [[3]])


def test_dimacs_round_trip():
    problem = PropClauseSet(3, [[1, -2], [2, 3], [-1]])
    again = parse_dimacs(format_dimacs(problem))
    assert again.n == problem.n
    assert again.clauses == problem.clauses


def test_dimacs_parses_comments_and_blank_lines():
    text = "c header comment\n\np cnf 2 2\nc inline\n1 -2 0\n2 0\n"
    problem = parse_dimacs(text)
    assert problem.n == 2
    assert problem.clauses == [[1, -2], [2]]


def test_dimacs_clause_may_span_lines():
    problem = parse_dimacs("p cnf 3 1\n1 2\n3 0\n")
    assert problem.clauses == [[1, 2, 3]]


@pytest.mark.parametrize(
    "text, hint",
    [
        ("1 0\n", "header"),
        ("p cnf x 1\n1 0\n", "header"),
        ("p dnf 1 1\n1 0\n", "header"),
        ("p cnf 1 1\n1\n", "unterminated"),
        ("p cnf 1 2\n1 0\n", "declares"),
        ("p cnf 1 1\none 0\n", "token"),
        ("", "header"),
    ],
)
def test_dimacs_rejects_malformed_input(text, hint):
    with pytest.raises(PropFormatError, match=hint):
        parse_dimacs(text)
