"""Smullyan's last asylum: the belief operator and the twelve hypotheses.

Doctors Tarr and Fether run an asylum whose inhabitants are each sane
or insane, and each a doctor or a patient.  A sane inhabitant believes
exactly the true statements and an insane one exactly the false
statements, so "x believes p" is the biconditional Sane(x) <=> p.  The
twelve hypotheses below describe the asylum; together they are
contradictory, which is the puzzle's punch line.

Symbol spellings (doctor, sane, peculiar, special, bf, tarr, fether)
follow the benchmark problem file shipped in data/, so programmatic
hypotheses and parsed file units compare alpha-equal.
"""

from __future__ import annotations

from .syntax import (
    And,
    App,
    Atom,
    Equal,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Signature,
    Term,
    Var,
)
from .tptp import NamedFormula

TARR = App("tarr", ())
FETHER = App("fether", ())

LABELS = tuple(f"ax{k}" for k in range(1, 13))


class UnknownLabel(KeyError):
    """A hypothesis label outside ax1..ax12."""


def asylum_signature() -> Signature:
    """Four unary predicates, the best-friend function, two constants."""
    return Signature(
        predicates={"doctor": 1, "sane": 1, "peculiar": 1, "special": 1},
        functions={"bf": 1, "tarr": 0, "fether": 0},
    )


def doctor(x: Term) -> Formula:
    return Atom("doctor", (x,))


def sane(x: Term) -> Formula:
    return Atom("sane", (x,))


def peculiar(x: Term) -> Formula:
    return Atom("peculiar", (x,))


def special(x: Term) -> Formula:
    return Atom("special", (x,))


def best_friend(x: Term) -> Term:
    return App("bf", (x,))


def belief(agent: Term, p: Formula) -> Formula:
    """agent believes p: true beliefs for the sane, false ones for the insane.

    Beliefs may nest, and they never distribute over connectives: an
    insane inhabitant believes p and q separately without believing
    their conjunction is two false beliefs, one believed conjunction.
    """
    return Iff(sane(agent), p)


def asylum_hypotheses() -> dict[str, NamedFormula]:
    """The twelve hypotheses, labeled ax1..ax12 in their source order."""
    x, y = Var("X"), Var("Y")
    formulas: dict[str, Formula] = {
        # Tarr and Fether are both doctors, and there is another doctor.
        "ax1": doctor(TARR),
        "ax2": doctor(FETHER),
        "ax3": Exists(
            "X",
            And(
                And(doctor(x), Not(Equal(x, TARR))),
                Not(Equal(x, FETHER)),
            ),
        ),
        # x is peculiar when x believes x is a patient.
        "ax4": Forall("X", Iff(peculiar(x), belief(x, Not(doctor(x))))),
        # x is special when exactly the patients believe x is peculiar.
        "ax5": Forall(
            "X",
            Iff(
                special(x),
                Forall("Y", Iff(Not(doctor(y)), belief(y, peculiar(x)))),
            ),
        ),
        # Someone is sane.
        "ax6": Exists("X", sane(x)),
        # Condition C: if x believes y is special, then x's best friend
        # believes y is a patient.
        "ax7": Forall(
            "X",
            Forall(
                "Y",
                Implies(
                    belief(x, special(y)),
                    belief(best_friend(x), Not(doctor(y))),
                ),
            ),
        ),
        # Tarr believes all doctors are sane and some patient is insane;
        # Fether believes all patients are insane and some doctor is sane.
        "ax8": belief(TARR, Forall("X", Implies(doctor(x), sane(x)))),
        "ax9": belief(TARR, Exists("X", And(Not(doctor(x)), Not(sane(x))))),
        "ax10": belief(FETHER, Forall("X", Implies(Not(doctor(x)), Not(sane(x))))),
        "ax11": belief(FETHER, Exists("X", And(doctor(x), sane(x)))),
        # Fether believes Tarr is sane.
        "ax12": belief(FETHER, sane(TARR)),
    }
    return {
        label: NamedFormula(label, "axiom", formulas[label]) for label in LABELS
    }


def subset(labels: list[str]) -> list[NamedFormula]:
    """Pick hypotheses by label, preserving the order given."""
    hypotheses = asylum_hypotheses()
    out = []
    for label in labels:
        if label not in hypotheses:
            raise UnknownLabel(label)
        out.append(hypotheses[label])
    return out
