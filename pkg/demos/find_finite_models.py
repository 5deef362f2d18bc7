"""Finite model search: certify satisfiability by exhibiting a structure."""

from folkit.asylum import asylum_hypotheses, asylum_signature, subset
from folkit.models import Model, NoModelUpTo, evaluate, find_model, format_interpretation


def main():
    hyps = asylum_hypotheses()

    print("Drop the best-friend condition ax7 from the reduced set and the")
    print("contradiction disappears.  A one-element world already works:")
    five = subset(["ax4", "ax5", "ax8", "ax10", "ax12"])
    result = find_model(five, max_size=4)
    assert isinstance(result, Model)
    interp = result.interpretation
    print(format_interpretation(interp, asylum_signature()))

    print("The model is checked, hypothesis by hypothesis, with evaluate:")
    for unit in five:
        print(f"  {unit.label}: {evaluate(interp, unit.formula)}")
    print()

    print("The full reduced set has no model of any size we try, which is")
    print("the expected counterpart of its refutation:")
    six = subset(["ax4", "ax5", "ax7", "ax8", "ax10", "ax12"])
    outcome = find_model(six, max_size=4)
    assert isinstance(outcome, NoModelUpTo)
    print(f"  no model of size up to {outcome.size}")


if __name__ == "__main__":
    main()
