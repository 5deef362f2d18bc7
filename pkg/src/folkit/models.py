"""Finite model finding: ground clause sets over {0..n-1} and SAT-solve.

Function symbols are encoded by their graphs: a propositional variable
per cell f(args)=value with exactly-one constraints, so nested terms
flatten linearly instead of exponentially.  Equality is identity on the
domain and is evaluated away while grounding.  evaluate() is the
independent Tarskian truth check used to verify every decoded model.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Union

from .clausal import EQ, Clause, clausify
from .sat import CdclSolver, PropClauseSet
from .saturation import Limits
from .syntax import App, Formula, Signature, Term, Var, signature_of
from .syntax import (
    And,
    Atom,
    Equal,
    Exists,
    Falsity,
    Forall,
    Iff,
    Implies,
    Not,
    Or,
    Truth,
)
from .tptp import NamedFormula


class UnknownSymbolError(KeyError):
    """A formula mentions a symbol the interpretation does not cover."""


@dataclass
class Interpretation:
    """A finite structure over domain {0..size-1}."""

    size: int
    constants: dict[str, int] = field(default_factory=dict)
    functions: dict[str, dict[tuple[int, ...], int]] = field(default_factory=dict)
    predicates: dict[str, set[tuple[int, ...]]] = field(default_factory=dict)

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("domain size must be at least 1")


def _eval_term(interp: Interpretation, t: Term, env: dict[str, int]) -> int:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise UnknownSymbolError(f"unbound variable {t.name}") from None
    assert isinstance(t, App)
    args = tuple(_eval_term(interp, a, env) for a in t.args)
    if not args:
        try:
            return interp.constants[t.op]
        except KeyError:
            raise UnknownSymbolError(f"unknown constant {t.op}") from None
    try:
        table = interp.functions[t.op]
        return table[args]
    except KeyError:
        raise UnknownSymbolError(f"unknown function cell {t.op}{args}") from None


def evaluate(interp: Interpretation, f: Formula) -> bool:
    """Tarskian truth of a closed formula; quantifiers range over the domain."""

    def rec(f: Formula, env: dict[str, int]) -> bool:
        if isinstance(f, Truth):
            return True
        if isinstance(f, Falsity):
            return False
        if isinstance(f, Atom):
            args = tuple(_eval_term(interp, a, env) for a in f.args)
            try:
                return args in interp.predicates[f.pred]
            except KeyError:
                raise UnknownSymbolError(f"unknown predicate {f.pred}") from None
        if isinstance(f, Equal):
            return _eval_term(interp, f.lhs, env) == _eval_term(interp, f.rhs, env)
        if isinstance(f, Not):
            return not rec(f.sub, env)
        if isinstance(f, And):
            return rec(f.lhs, env) and rec(f.rhs, env)
        if isinstance(f, Or):
            return rec(f.lhs, env) or rec(f.rhs, env)
        if isinstance(f, Implies):
            return (not rec(f.lhs, env)) or rec(f.rhs, env)
        if isinstance(f, Iff):
            return rec(f.lhs, env) == rec(f.rhs, env)
        if isinstance(f, (Forall, Exists)):
            shadowed = env.get(f.var)
            want = isinstance(f, Exists)
            result = not want
            for d in range(interp.size):
                env[f.var] = d
                if rec(f.body, env) == want:
                    result = want
                    break
            if shadowed is None:
                env.pop(f.var, None)
            else:
                env[f.var] = shadowed
            return result
        raise TypeError(f"not a formula: {f!r}")

    return rec(f, {})


# ---------------------------------------------------------------------------
# Grounding
# ---------------------------------------------------------------------------

@dataclass
class GroundTable:
    """Maps propositional variables back to function cells and atoms."""

    size: int
    functions: list[tuple[str, int]]
    predicates: list[tuple[str, int]]
    cell_vars: dict[tuple[str, tuple[int, ...], int], int]
    atom_vars: dict[tuple[str, tuple[int, ...]], int]
    var_count: int


def _clause_symbols(
    clauses: Iterable[Clause],
    signature: Signature | None,
) -> tuple[list[tuple[str, int]], list[tuple[str, int]]]:
    """Function and predicate symbols with arities, in a stable order.

    Symbols declared in the signature come first in declaration order;
    anything else (Skolem symbols) follows in clause-scan order.
    """
    functions: dict[str, int] = {}
    predicates: dict[str, int] = {}
    if signature is not None:
        functions.update(signature.functions)
        predicates.update(signature.predicates)
    for clause in clauses:
        for lit in clause.literals:
            if lit.pred != EQ and lit.pred not in predicates:
                predicates[lit.pred] = len(lit.args)
            stack = list(lit.args)
            while stack:
                t = stack.pop()
                if isinstance(t, App):
                    if t.op not in functions:
                        functions[t.op] = len(t.args)
                    stack.extend(t.args)
    return list(functions.items()), list(predicates.items())


def _flatten_clause(
    clause: Clause,
) -> tuple[list[tuple], list[tuple[str, tuple[str, ...], str]], list[str]]:
    """Replace nested function terms by fresh clause-local variables.

    Returns (flat literals, cell requirements, ordered variable names).
    A flat literal is ("pred", positive, name, argvars) or
    ("eq", positive, lhsvar, rhsvar); each requirement (f, argvars, out)
    later grounds to a negated function-graph cell.
    """
    order: dict[str, None] = {}
    apps: dict[App, str] = {}
    reqs: list[tuple[str, tuple[str, ...], str]] = []

    def walk(t: Term) -> str:
        if isinstance(t, Var):
            order.setdefault(t.name, None)
            return t.name
        assert isinstance(t, App)
        known = apps.get(t)
        if known is not None:
            return known
        argnames = tuple(walk(a) for a in t.args)
        fresh = f"_val{len(apps)}"
        apps[t] = fresh
        order.setdefault(fresh, None)
        reqs.append((t.op, argnames, fresh))
        return fresh

    flat: list[tuple] = []
    for lit in clause.literals:
        names = tuple(walk(a) for a in lit.args)
        if lit.pred == EQ:
            flat.append(("eq", lit.positive, names[0], names[1]))
        else:
            flat.append(("pred", lit.positive, lit.pred, names))
    return flat, reqs, list(order)


def ground(
    clauses: Iterable[Clause],
    n: int,
    signature: Signature | None = None,
) -> tuple[PropClauseSet, GroundTable]:
    """Propositional encoding satisfiable iff the clauses have a size-n model.

    Every function cell gets exactly-one constraints up front, and the
    first 0-ary function in signature order is pinned to element 0 to
    break symmetry (models are closed under domain relabeling).
    """
    if n < 1:
        raise ValueError("domain size must be at least 1")
    clauses = list(clauses)
    functions, predicates = _clause_symbols(clauses, signature)

    counter = 0
    cell_vars: dict[tuple[str, tuple[int, ...], int], int] = {}
    atom_vars: dict[tuple[str, tuple[int, ...]], int] = {}
    out: list[list[int]] = []

    for fname, arity in functions:
        for args in product(range(n), repeat=arity):
            row = []
            for d in range(n):
                counter += 1
                cell_vars[(fname, args, d)] = counter
                row.append(counter)
            out.append(row)  # at least one value
            for i in range(n):
                for j in range(i + 1, n):
                    out.append([-row[i], -row[j]])  # at most one value

    for fname, arity in functions:
        if arity == 0:
            out.append([cell_vars[(fname, (), 0)]])
            break

    def atom_var(pred: str, args: tuple[int, ...]) -> int:
        nonlocal counter
        var = atom_vars.get((pred, args))
        if var is None:
            counter += 1
            var = counter
            atom_vars[(pred, args)] = var
        return var

    for clause in clauses:
        flat, reqs, names = _flatten_clause(clause)
        for values in product(range(n), repeat=len(names)):
            env = dict(zip(names, values))
            lits: list[int] = []
            satisfied = False
            for fname, argnames, res in reqs:
                key = (fname, tuple(env[a] for a in argnames), env[res])
                lits.append(-cell_vars[key])
            for entry in flat:
                if entry[0] == "eq":
                    _, positive, lhs, rhs = entry
                    if (env[lhs] == env[rhs]) == positive:
                        satisfied = True
                        break
                    continue  # literal is false here; drop it
                _, positive, pred, argnames = entry
                var = atom_var(pred, tuple(env[a] for a in argnames))
                lits.append(var if positive else -var)
            if satisfied:
                continue
            seen: set[int] = set()
            deduped: list[int] = []
            for lit in lits:
                if -lit in seen:
                    satisfied = True
                    break
                if lit not in seen:
                    seen.add(lit)
                    deduped.append(lit)
            if satisfied:
                continue
            out.append(deduped)

    table = GroundTable(n, functions, predicates, cell_vars, atom_vars, counter)
    return PropClauseSet(counter, out), table


def decode(table: GroundTable, assignment: Mapping[int, bool]) -> Interpretation:
    """Read an interpretation off a satisfying assignment."""
    interp = Interpretation(table.size)
    for fname, arity in table.functions:
        if arity == 0:
            for d in range(table.size):
                if assignment.get(table.cell_vars[(fname, (), d)], False):
                    interp.constants[fname] = d
                    break
        else:
            cells: dict[tuple[int, ...], int] = {}
            for args in product(range(table.size), repeat=arity):
                for d in range(table.size):
                    if assignment.get(table.cell_vars[(fname, args, d)], False):
                        cells[args] = d
                        break
            interp.functions[fname] = cells
    for pred, arity in table.predicates:
        holds = {
            args
            for args in product(range(table.size), repeat=arity)
            if assignment.get(table.atom_vars.get((pred, args), 0), False)
        }
        interp.predicates[pred] = holds
    return interp


# ---------------------------------------------------------------------------
# The size-iterating search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Model:
    interpretation: Interpretation


@dataclass(frozen=True)
class NoModelUpTo:
    size: int


@dataclass(frozen=True)
class ResourceOut:
    reason: str


ModelSearchResult = Union[Model, NoModelUpTo, ResourceOut]


class ModelSearch:
    """Resumable search for a finite model at sizes 1..max_size.

    step() runs a bounded number of solver conflicts and returns None
    while undecided, so callers can interleave model search with other
    work.  Verdicts are deterministic and come from the smallest size.
    """

    def __init__(self, units: Iterable[NamedFormula], max_size: int = 8):
        if max_size < 1:
            raise ValueError("max_size must be at least 1")
        self.units = list(units)
        self.max_size = max_size
        self.signature = signature_of(u.formula for u in self.units)
        self.clauses = clausify(self.units)
        self.size = 0
        self.solver: CdclSolver | None = None
        self.table: GroundTable | None = None
        self.sizes_tried: list[int] = []
        self.done: ModelSearchResult | None = None

    def _next_size(self) -> bool:
        if self.size >= self.max_size:
            return False
        self.size += 1
        self.sizes_tried.append(self.size)
        problem, self.table = ground(self.clauses, self.size, self.signature)
        solver = CdclSolver(problem.n)
        for clause in problem.clauses:
            solver.add_clause(clause)
        self.solver = solver
        return True

    def step(self, max_conflicts: int = 2000) -> ModelSearchResult | None:
        if self.done is not None:
            return self.done
        if self.solver is None and not self._next_size():
            self.done = NoModelUpTo(self.max_size)
            return self.done
        assert self.solver is not None
        verdict = self.solver.solve(max_conflicts=max_conflicts)
        if verdict is None:
            return None
        if verdict:
            interp = decode(self.table, self.solver.assignment())
            for unit in self.units:
                if not evaluate(interp, unit.formula):
                    raise RuntimeError(
                        f"decoded size-{self.size} model fails unit {unit.label}"
                    )
            self.done = Model(interp)
            return self.done
        self.solver = None
        if not self._next_size():
            self.done = NoModelUpTo(self.max_size)
            return self.done
        return None


def find_model(
    units: Iterable[NamedFormula],
    max_size: int = 8,
    limits: "Limits | None" = None,
) -> ModelSearchResult:
    """Search sizes 1..max_size for a model of the units."""
    search = ModelSearch(units, max_size)
    max_seconds = limits.max_seconds if limits is not None else None
    start = time.monotonic()
    while True:
        result = search.step(max_conflicts=4000)
        if result is not None:
            return result
        if max_seconds is not None and time.monotonic() - start > max_seconds:
            return ResourceOut("time-limit")


# ---------------------------------------------------------------------------
# Text output
# ---------------------------------------------------------------------------

def format_interpretation(
    interp: Interpretation, signature: Signature | None = None
) -> str:
    """The model block: domain size, then one line per table entry.

    Tables print in the interpretation's own (signature-first) order with
    argument tuples in lexicographic order.  Predicate arities come from
    the signature when given, otherwise from a satisfying tuple; an empty
    extension with no signature has unknown arity and prints nothing.
    """
    lines = [f"domain size {interp.size}"]
    for name, value in interp.constants.items():
        lines.append(f"{name} = {value}")
    for name, cells in interp.functions.items():
        for args in sorted(cells):
            shown = ",".join(str(a) for a in args)
            lines.append(f"{name}({shown}) = {cells[args]}")
    for name, holds in interp.predicates.items():
        if signature is not None and name in signature.predicates:
            arity = signature.predicates[name]
        elif holds:
            arity = len(next(iter(holds)))
        else:
            continue
        for args in product(range(interp.size), repeat=arity):
            shown = ",".join(str(a) for a in args)
            flag = "true" if args in holds else "false"
            lines.append(f"{name}({shown}) = {flag}")
    return "\n".join(lines) + "\n"
