"""Self-contained CDCL satisfiability solver for propositional clause sets.

Clauses are lists of nonzero signed variable indices.  The solver uses
two-watched-literal propagation, first-UIP clause learning, and a fixed
geometric restart schedule; all heuristics are deterministic so repeated
runs produce identical assignments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union


class PropFormatError(ValueError):
    """Raised for malformed clause sets or DIMACS text."""


class PropClauseSet:
    """A propositional CNF problem over variables 1..n."""

    __slots__ = ("n", "clauses")

    def __init__(self, n: int, clauses: Iterable[Sequence[int]]):
        if n < 0:
            raise PropFormatError("variable count must be nonnegative")
        self.n = n
        self.clauses = [list(c) for c in clauses]
        for clause in self.clauses:
            for lit in clause:
                if lit == 0:
                    raise PropFormatError("literal 0 is not allowed")
                if abs(lit) > n:
                    raise PropFormatError(
                        f"literal {lit} exceeds variable count {n}"
                    )

    def __repr__(self):
        return f"PropClauseSet(n={self.n}, clauses={len(self.clauses)})"


@dataclass(frozen=True)
class Sat:
    assignment: dict[int, bool]


@dataclass(frozen=True)
class Unsat:
    pass


SatResult = Union[Sat, Unsat]


class CdclSolver:
    """Conflict-driven clause learning over variables 1..n.

    solve() accepts an optional conflict budget and returns None when the
    budget runs out, leaving the solver state intact so the search can be
    resumed later.  Branching picks the unassigned variable of highest
    activity (ties to the lowest index) and tries polarity false first.
    Restarts follow a geometric schedule: 100 conflicts, growing by 1.5.
    """

    _RESTART_BASE = 100
    _RESTART_FACTOR = 1.5
    _ACTIVITY_DECAY = 0.95

    def __init__(self, n: int):
        self.n = n
        self.clauses: list[list[int]] = []
        # watch lists are keyed by the literal that would be falsified
        self.watches: dict[int, list[list[int]]] = {}
        self.assigns: list[int] = [0] * (n + 1)  # 0 unset, 1 true, -1 false
        self.level: list[int] = [0] * (n + 1)
        self.reason: list[list[int] | None] = [None] * (n + 1)
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.activity: list[float] = [0.0] * (n + 1)
        self.var_inc = 1.0
        self.qhead = 0
        self.conflicts = 0
        self.restart_limit = float(self._RESTART_BASE)
        self.conflicts_at_restart = 0
        self.failed = False  # top-level contradiction

    # -- assignment plumbing ------------------------------------------------

    def value(self, lit: int) -> int:
        v = self.assigns[abs(lit)]
        if v == 0:
            return 0
        return v if lit > 0 else -v

    def _enqueue(self, lit: int, reason: list[int] | None) -> None:
        var = abs(lit)
        self.assigns[var] = 1 if lit > 0 else -1
        self.level[var] = len(self.trail_lim)
        self.reason[var] = reason
        self.trail.append(lit)

    def add_clause(self, lits: Sequence[int]) -> None:
        """Add an input clause; only valid at decision level 0."""
        if self.failed:
            return
        clause = []
        for lit in lits:
            if lit not in clause:
                clause.append(lit)
        if any(-lit in clause for lit in clause):
            return  # tautology
        clause = [lit for lit in clause if self.value(lit) != -1]
        if any(self.value(lit) == 1 for lit in clause):
            return
        if not clause:
            self.failed = True
            return
        if len(clause) == 1:
            self._enqueue(clause[0], None)
            if self._propagate() is not None:
                self.failed = True
            return
        self._attach(clause)

    def _attach(self, clause: list[int]) -> None:
        self.clauses.append(clause)
        self.watches.setdefault(clause[0], []).append(clause)
        self.watches.setdefault(clause[1], []).append(clause)

    # -- search -------------------------------------------------------------

    def _propagate(self) -> list[int] | None:
        while self.qhead < len(self.trail):
            lit = self.trail[self.qhead]
            self.qhead += 1
            falsified = -lit
            watching = self.watches.get(falsified)
            if not watching:
                continue
            keep: list[list[int]] = []
            confl: list[int] | None = None
            for idx, clause in enumerate(watching):
                if clause[0] == falsified:
                    clause[0], clause[1] = clause[1], clause[0]
                other = clause[0]
                if self.value(other) == 1:
                    keep.append(clause)
                    continue
                for k in range(2, len(clause)):
                    if self.value(clause[k]) != -1:
                        clause[1], clause[k] = clause[k], clause[1]
                        self.watches.setdefault(clause[1], []).append(clause)
                        break
                else:
                    keep.append(clause)
                    if self.value(other) == -1:
                        confl = clause
                        keep.extend(watching[idx + 1 :])
                        break
                    self._enqueue(other, clause)
            self.watches[falsified] = keep
            if confl is not None:
                return confl
        return None

    def _bump(self, var: int) -> None:
        self.activity[var] += self.var_inc
        if self.activity[var] > 1e100:
            for v in range(1, self.n + 1):
                self.activity[v] *= 1e-100
            self.var_inc *= 1e-100

    def _analyze(self, confl: list[int]) -> tuple[list[int], int]:
        """First-UIP learned clause and the level to backjump to."""
        learned = [0]
        seen = [False] * (self.n + 1)
        counter = 0
        lit = 0
        index = len(self.trail)
        cur_level = len(self.trail_lim)
        reason: list[int] | None = confl
        while True:
            assert reason is not None
            for q in reason:
                var = abs(q)
                if not seen[var] and self.level[var] > 0 and q != lit:
                    seen[var] = True
                    self._bump(var)
                    if self.level[var] >= cur_level:
                        counter += 1
                    else:
                        learned.append(q)
            while True:
                index -= 1
                lit = -self.trail[index]
                if seen[abs(lit)]:
                    break
            counter -= 1
            if counter == 0:
                break
            reason = self.reason[abs(lit)]
        learned[0] = lit
        if len(learned) == 1:
            back_level = 0
        else:
            best = max(range(1, len(learned)), key=lambda i: self.level[abs(learned[i])])
            learned[1], learned[best] = learned[best], learned[1]
            back_level = self.level[abs(learned[1])]
        self.var_inc /= self._ACTIVITY_DECAY
        return learned, back_level

    def _backtrack(self, target: int) -> None:
        if len(self.trail_lim) <= target:
            return
        bound = self.trail_lim[target]
        for lit in reversed(self.trail[bound:]):
            var = abs(lit)
            self.assigns[var] = 0
            self.reason[var] = None
        del self.trail[bound:]
        del self.trail_lim[target:]
        self.qhead = min(self.qhead, len(self.trail))

    def _decide(self) -> int:
        best = 0
        best_act = -1.0
        activity = self.activity
        assigns = self.assigns
        for var in range(1, self.n + 1):
            if assigns[var] == 0 and activity[var] > best_act:
                best = var
                best_act = activity[var]
        return best

    def solve(self, max_conflicts: int | None = None) -> bool | None:
        """True = satisfiable, False = unsatisfiable, None = budget out."""
        if self.failed:
            return False
        spent = 0
        while True:
            confl = self._propagate()
            if confl is not None:
                self.conflicts += 1
                spent += 1
                if not self.trail_lim:
                    self.failed = True
                    return False
                learned, back_level = self._analyze(confl)
                self._backtrack(back_level)
                if len(learned) == 1:
                    self._enqueue(learned[0], None)
                else:
                    self._attach(learned)
                    self._enqueue(learned[0], learned)
                if self.conflicts - self.conflicts_at_restart >= self.restart_limit:
                    self.conflicts_at_restart = self.conflicts
                    self.restart_limit *= self._RESTART_FACTOR
                    self._backtrack(0)
                if max_conflicts is not None and spent >= max_conflicts:
                    self._backtrack(0)
                    return None
                continue
            var = self._decide()
            if var == 0:
                return True
            self.trail_lim.append(len(self.trail))
            self._enqueue(-var, None)  # polarity false first

    def assignment(self) -> dict[int, bool]:
        return {v: self.assigns[v] == 1 for v in range(1, self.n + 1)}


def sat_solve(problem: PropClauseSet) -> SatResult:
    """Complete satisfiability decision for a propositional clause set."""
    solver = CdclSolver(problem.n)
    for clause in problem.clauses:
        solver.add_clause(clause)
    verdict = solver.solve()
    assert verdict is not None
    if not verdict:
        return Unsat()
    return Sat(solver.assignment())


def check_assignment(problem: PropClauseSet, assignment: dict[int, bool]) -> bool:
    """Independent evaluator: does the assignment satisfy every clause?"""
    for clause in problem.clauses:
        if not any(
            assignment.get(abs(lit), False) == (lit > 0) for lit in clause
        ):
            return False
    return True


# ---------------------------------------------------------------------------
# DIMACS CNF
# ---------------------------------------------------------------------------

def parse_dimacs(text: str) -> PropClauseSet:
    """Read DIMACS CNF: a `p cnf vars clauses` header, 0-terminated clauses."""
    n = None
    declared = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for raw_line in text.splitlines():
        line = raw_line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise PropFormatError(f"bad DIMACS header: {line!r}")
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise PropFormatError(f"bad DIMACS header: {line!r}") from None
            continue
        if n is None:
            raise PropFormatError("clause before DIMACS header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise PropFormatError(f"bad DIMACS token: {token!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if current:
        raise PropFormatError("unterminated clause at end of DIMACS input")
    if n is None:
        raise PropFormatError("missing DIMACS header")
    if declared is not None and declared != len(clauses):
        raise PropFormatError(
            f"header declares {declared} clauses, found {len(clauses)}"
        )
    return PropClauseSet(n, clauses)


def format_dimacs(problem: PropClauseSet) -> str:
    lines = [f"p cnf {problem.n} {len(problem.clauses)}"]
    for clause in problem.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"
