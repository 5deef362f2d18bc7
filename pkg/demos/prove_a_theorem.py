"""Conjecture proving: a doctors-are-sane theorem and an open question."""

from folkit.analysis import prove_conjecture
from folkit.asylum import TARR, asylum_hypotheses, sane
from folkit.models import format_interpretation
from folkit.saturation import format_derivation
from folkit.syntax import Atom, Forall, Implies, Var, formula_str
from folkit.tptp import NamedFormula


def main():
    hyps = asylum_hypotheses()
    X = Var("X")

    print("Suppose Doctor Tarr is sane.  Together with his own belief that")
    print("every doctor is sane (ax8), that belief must be true:")
    axioms = [
        hyps["ax8"],
        hyps["ax10"],
        hyps["ax12"],
        NamedFormula("sane_tarr", "axiom", sane(TARR)),
    ]
    conjecture = Forall("X", Implies(Atom("doctor", (X,)), Atom("sane", (X,))))
    print(f"  conjecture: {formula_str(conjecture)}")
    verdict = prove_conjecture(axioms, conjecture)
    print(f"SZS status {verdict.status}")
    print("The refutation of axioms plus negated conjecture:")
    print(format_derivation(verdict.witness))

    print("Without any axioms, Tarr's sanity is not decided either way;")
    print("the prover answers with a countermodel instead of a proof:")
    open_question = prove_conjecture([], sane(TARR))
    print(f"SZS status {open_question.status}")
    print(format_interpretation(open_question.witness))


if __name__ == "__main__":
    main()
