"""From TPTP text to clauses to a checked refutation, one stage at a time."""

from folkit.clausal import clausify, dump_clauses, nnf, skolemize
from folkit.saturation import Refutation, check_derivation, format_derivation, saturate
from folkit.syntax import formula_str
from folkit.tptp import parse_tptp

PROBLEM = """
fof(someone_is_liked, axiom, ?[X] : likes(pat, X)).
fof(nobody_is_liked, axiom, ![X] : ![Y] : ~likes(X, Y)).
"""


def main():
    problem = parse_tptp(PROBLEM)
    print("Two axioms that cannot both hold:")
    for unit in problem.units:
        print(f"  {unit.label}: {formula_str(unit.formula)}")
    print()

    first = problem.units[0].formula
    print("Normalization of the first axiom, stage by stage:")
    print(f"  negation normal form: {formula_str(nnf(first))}")
    print(f"  after skolemization:  {formula_str(skolemize(nnf(first)))}")
    print()

    clauses = clausify(problem.units)
    print("The clause forms of both axioms:")
    print(dump_clauses(clauses))

    print("Saturation closes the set under resolution and factoring until")
    print("the empty clause appears:")
    result = saturate(clauses)
    assert isinstance(result, Refutation)
    print(format_derivation(result.derivation))

    checked = check_derivation(result.derivation, clauses)
    print(f"Independent re-derivation of every step: ok={bool(checked)}")


if __name__ == "__main__":
    main()
