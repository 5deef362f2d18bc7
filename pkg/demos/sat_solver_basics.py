"""The propositional core: pigeonholes, DIMACS, and budgeted solving."""

import itertools

from folkit.sat import (
    CdclSolver,
    PropClauseSet,
    Sat,
    check_assignment,
    format_dimacs,
    parse_dimacs,
    sat_solve,
)


def pigeonhole(pigeons: int, holes: int) -> PropClauseSet:
    """Variable i*holes+j+1 says pigeon i sits in hole j."""
    def var(i, j):
        return i * holes + j + 1

    clauses = [[var(i, j) for j in range(holes)] for i in range(pigeons)]
    for j in range(holes):
        for i1, i2 in itertools.combinations(range(pigeons), 2):
            clauses.append([-var(i1, j), -var(i2, j)])
    return PropClauseSet(pigeons * holes, clauses)


def main():
    print("Three pigeons into three holes is fine:")
    fits = pigeonhole(3, 3)
    result = sat_solve(fits)
    assert isinstance(result, Sat)
    seats = sorted(v for v, value in result.assignment.items() if value)
    print(f"  satisfiable, true variables: {seats}")
    print(f"  assignment verified: {check_assignment(fits, result.assignment)}")
    print()

    print("Four pigeons into three holes is not:")
    print(f"  {sat_solve(pigeonhole(4, 3))!r}")
    print()

    print("Problems round-trip through DIMACS text:")
    text = format_dimacs(pigeonhole(2, 2))
    print(text)
    again = parse_dimacs(text)
    print(f"  reparsed: {again!r}")
    print()

    print("The solver can run under a conflict budget and resume, which is")
    print("how the model finder shares time with the saturation prover:")
    solver = CdclSolver(pigeonhole(6, 5).n)
    for clause in pigeonhole(6, 5).clauses:
        solver.add_clause(clause)
    rounds = 0
    verdict = None
    while verdict is None:
        verdict = solver.solve(max_conflicts=5)
        rounds += 1
    print(f"  verdict {verdict} after {rounds} resumable rounds "
          f"({solver.conflicts} conflicts)")


if __name__ == "__main__":
    main()
