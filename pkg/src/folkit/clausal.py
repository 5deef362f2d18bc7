"""Clausal form: literals, clauses, and the CNF transformation.

clausify() turns closed formulas into an equisatisfiable clause set via
simplification, negation normal form, rectification, Skolemization and
distribution.  Equality is handled by axiomatization (equality_axioms),
not by paramodulation.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .syntax import (
    And,
    App,
    Atom,
    Equal,
    Exists,
    FALSE,
    Falsity,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Signature,
    TRUE,
    Term,
    Truth,
    Var,
    apply_to_term,
    signature_of,
    term_str,
)

EQ = "="  # reserved predicate name for equality literals


def term_size(t: Term) -> int:
    return t.size if type(t) is App else 1


def _args_have_var(args: tuple[Term, ...]) -> bool:
    stack = list(args)
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            return True
        stack.extend(t.args)  # type: ignore[union-attr]
    return False


class Literal:
    """A possibly negated atom; pred == "=" marks equality literals."""

    __slots__ = ("positive", "pred", "args", "has_var", "_weight", "_hash")

    def __init__(self, positive: bool, pred: str, args: Sequence[Term] = ()):
        object.__setattr__(self, "positive", bool(positive))
        object.__setattr__(self, "pred", pred)
        object.__setattr__(self, "args", tuple(args))
        object.__setattr__(self, "has_var", _args_have_var(self.args))
        object.__setattr__(
            self, "_weight", 1 + sum(term_size(a) for a in self.args)
        )
        object.__setattr__(
            self, "_hash", hash((self.positive, self.pred, self.args))
        )

    def __setattr__(self, key, value):
        raise AttributeError("Literal is immutable")

    def __eq__(self, other):
        return (
            type(other) is Literal
            and self._hash == other._hash
            and self.positive == other.positive
            and self.pred == other.pred
            and self.args == other.args
        )

    def __hash__(self):
        return self._hash

    def negate(self) -> "Literal":
        return Literal(not self.positive, self.pred, self.args)

    def is_equality(self) -> bool:
        return self.pred == EQ

    @property
    def atom(self) -> Formula:
        if self.pred == EQ:
            return Equal(self.args[0], self.args[1])
        return Atom(self.pred, self.args)

    def substitute(self, mapping: Mapping[str, Term]) -> "Literal":
        if not self.has_var or not mapping:
            return self
        return Literal(
            self.positive, self.pred, tuple(apply_to_term(mapping, a) for a in self.args)
        )

    def weight(self) -> int:
        return self._weight

    def variables(self) -> set[str]:
        out: set[str] = set()
        stack = list(self.args)
        while stack:
            t = stack.pop()
            if isinstance(t, Var):
                out.add(t.name)
            else:
                stack.extend(t.args)  # type: ignore[union-attr]
        return out

    def __repr__(self):
        return f"Literal({literal_str(self)!r})"


def literal_str(lit: Literal) -> str:
    if lit.pred == EQ:
        op = "=" if lit.positive else "!="
        return f"{term_str(lit.args[0])} {op} {term_str(lit.args[1])}"
    body = lit.pred if not lit.args else f"{lit.pred}({','.join(term_str(a) for a in lit.args)})"
    return body if lit.positive else "~" + body


class Clause:
    """A disjunction of literals, implicitly universally quantified.

    Duplicate literals are removed on construction (first occurrence
    kept).  The empty clause denotes contradiction.  Equality ignores
    provenance labels.
    """

    __slots__ = ("literals", "labels", "lit_set", "ground", "_hash", "_weight")

    def __init__(self, literals: Iterable[Literal], labels: Sequence[str] = ()):
        seen: set[Literal] = set()
        kept: list[Literal] = []
        for lit in literals:
            if lit not in seen:
                seen.add(lit)
                kept.append(lit)
        object.__setattr__(self, "literals", tuple(kept))
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "lit_set", frozenset(kept))
        object.__setattr__(self, "ground", not any(l.has_var for l in kept))
        object.__setattr__(self, "_hash", hash(self.literals))
        object.__setattr__(self, "_weight", sum(l._weight for l in kept))

    def __setattr__(self, key, value):
        raise AttributeError("Clause is immutable")

    def __eq__(self, other):
        return type(other) is Clause and self.literals == other.literals

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.literals)

    def is_empty(self) -> bool:
        return not self.literals

    def is_tautology(self) -> bool:
        keys = {(l.positive, l.pred, l.args) for l in self.literals}
        for positive, pred, args in keys:
            if positive and pred == EQ and args[0] == args[1]:
                return True
            if (not positive, pred, args) in keys:
                return True
        return False

    def variables(self) -> set[str]:
        out: set[str] = set()
        for lit in self.literals:
            out |= lit.variables()
        return out

    def is_ground(self) -> bool:
        return self.ground

    def weight(self) -> int:
        return self._weight

    def substitute(self, mapping: Mapping[str, Term]) -> "Clause":
        if self.ground:
            return self
        return Clause((l.substitute(mapping) for l in self.literals), self.labels)

    def with_labels(self, labels: Sequence[str]) -> "Clause":
        return Clause(self.literals, tuple(labels))

    def __repr__(self):
        return f"Clause({clause_str(self)!r})"


def clause_str(c: Clause) -> str:
    if not c.literals:
        return "$false"
    return " | ".join(literal_str(l) for l in c.literals)


def dump_clauses(clauses: Iterable[Clause]) -> str:
    """One clause per line: `label: lit | lit | ...`."""
    lines = []
    for c in clauses:
        label = ",".join(c.labels) if c.labels else "-"
        lines.append(f"{label}: {clause_str(c)}")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# Renaming clauses apart
# ---------------------------------------------------------------------------

class VariableSupply:
    """Dispenses globally fresh variable names X0, X1, ..."""

    def __init__(self, start: int = 0):
        self.counter = start

    def fresh(self) -> str:
        name = f"X{self.counter}"
        self.counter += 1
        return name


def rename_clause(c: Clause, supply: VariableSupply) -> Clause:
    if c.ground:
        return c
    mapping: dict[str, Term] = {}
    for lit in c.literals:
        for t in lit.args:
            stack = [t]
            while stack:
                cur = stack.pop()
                if isinstance(cur, Var):
                    if cur.name not in mapping:
                        mapping[cur.name] = Var(supply.fresh())
                else:
                    stack.extend(reversed(cur.args))  # type: ignore[union-attr]
    return c.substitute(mapping)


def rename_clauses_apart(clauses: Iterable[Clause]) -> list[Clause]:
    """Rename so that no two clauses in the result share a variable."""
    supply = VariableSupply()
    return [rename_clause(c, supply) for c in clauses]


# ---------------------------------------------------------------------------
# Formula simplification and NNF
# ---------------------------------------------------------------------------

def simplify(f: Formula) -> Formula:
    """Evaluate away $true/$false subformulas."""
    if isinstance(f, Not):
        sub = simplify(f.sub)
        if isinstance(sub, Truth):
            return FALSE
        if isinstance(sub, Falsity):
            return TRUE
        return Not(sub)
    if isinstance(f, And):
        lhs, rhs = simplify(f.lhs), simplify(f.rhs)
        if isinstance(lhs, Falsity) or isinstance(rhs, Falsity):
            return FALSE
        if isinstance(lhs, Truth):
            return rhs
        if isinstance(rhs, Truth):
            return lhs
        return And(lhs, rhs)
    if isinstance(f, Or):
        lhs, rhs = simplify(f.lhs), simplify(f.rhs)
        if isinstance(lhs, Truth) or isinstance(rhs, Truth):
            return TRUE
        if isinstance(lhs, Falsity):
            return rhs
        if isinstance(rhs, Falsity):
            return lhs
        return Or(lhs, rhs)
    if isinstance(f, Implies):
        lhs, rhs = simplify(f.lhs), simplify(f.rhs)
        if isinstance(lhs, Falsity) or isinstance(rhs, Truth):
            return TRUE
        if isinstance(lhs, Truth):
            return rhs
        if isinstance(rhs, Falsity):
            return simplify(Not(lhs))
        return Implies(lhs, rhs)
    if isinstance(f, Iff):
        lhs, rhs = simplify(f.lhs), simplify(f.rhs)
        if isinstance(lhs, Truth):
            return rhs
        if isinstance(rhs, Truth):
            return lhs
        if isinstance(lhs, Falsity):
            return simplify(Not(rhs))
        if isinstance(rhs, Falsity):
            return simplify(Not(lhs))
        return Iff(lhs, rhs)
    if isinstance(f, (Forall, Exists)):
        body = simplify(f.body)
        if isinstance(body, (Truth, Falsity)):
            return body
        return type(f)(f.var, body)
    return f


def _nnf(f: Formula, positive: bool) -> Formula:
    if isinstance(f, (Atom, Equal)):
        return f if positive else Not(f)
    if isinstance(f, Truth):
        return TRUE if positive else FALSE
    if isinstance(f, Falsity):
        return FALSE if positive else TRUE
    if isinstance(f, Not):
        return _nnf(f.sub, not positive)
    if isinstance(f, And):
        ctor = And if positive else Or
        return ctor(_nnf(f.lhs, positive), _nnf(f.rhs, positive))
    if isinstance(f, Or):
        ctor = Or if positive else And
        return ctor(_nnf(f.lhs, positive), _nnf(f.rhs, positive))
    if isinstance(f, Implies):
        if positive:
            return Or(_nnf(f.lhs, False), _nnf(f.rhs, True))
        return And(_nnf(f.lhs, True), _nnf(f.rhs, False))
    if isinstance(f, Iff):
        if positive:
            return And(
                Or(_nnf(f.lhs, False), _nnf(f.rhs, True)),
                Or(_nnf(f.rhs, False), _nnf(f.lhs, True)),
            )
        return Or(
            And(_nnf(f.lhs, True), _nnf(f.rhs, False)),
            And(_nnf(f.lhs, False), _nnf(f.rhs, True)),
        )
    if isinstance(f, Forall):
        ctor = Forall if positive else Exists
        return ctor(f.var, _nnf(f.body, positive))
    assert isinstance(f, Exists)
    ctor = Exists if positive else Forall
    return ctor(f.var, _nnf(f.body, positive))


def nnf(f: Formula) -> Formula:
    """Negation normal form; Iff expands by polarity."""
    return _nnf(simplify(f), True)


def rectify(f: Formula) -> Formula:
    """Rename bound variables so every binder binds a distinct name."""
    used: set[str] = set()

    def fresh(base: str) -> str:
        if base not in used:
            used.add(base)
            return base
        i = 1
        while f"{base}_{i}" in used:
            i += 1
        name = f"{base}_{i}"
        used.add(name)
        return name

    def walk_term(t: Term, env: Mapping[str, str]) -> Term:
        if isinstance(t, Var):
            return Var(env.get(t.name, t.name))
        assert isinstance(t, App)
        if not t.args:
            return t
        return App(t.op, tuple(walk_term(a, env) for a in t.args))

    def walk(g: Formula, env: dict[str, str]) -> Formula:
        if isinstance(g, Atom):
            return Atom(g.pred, tuple(walk_term(a, env) for a in g.args))
        if isinstance(g, Equal):
            return Equal(walk_term(g.lhs, env), walk_term(g.rhs, env))
        if isinstance(g, Not):
            return Not(walk(g.sub, env))
        if isinstance(g, (And, Or, Implies, Iff)):
            return type(g)(walk(g.lhs, env), walk(g.rhs, env))
        if isinstance(g, (Forall, Exists)):
            new = fresh(g.var)
            inner = dict(env)
            inner[g.var] = new
            return type(g)(new, walk(g.body, inner))
        return g

    return walk(f, {})


# ---------------------------------------------------------------------------
# Skolemization
# ---------------------------------------------------------------------------

class SkolemSupply:
    """Dispenses Skolem function names sk0, sk1, ... fresh for a signature.

    Names are registered in the signature as they are handed out, so a
    supply shared across several formulas never reuses a name.
    """

    def __init__(self, sig: Signature):
        self.sig = sig
        self.counter = 0

    def fresh(self, arity: int) -> str:
        while True:
            name = f"sk{self.counter}"
            self.counter += 1
            if name not in self.sig:
                self.sig.add_function(name, arity)
                return name


def _skolemize(f: Formula, universals: tuple[Var, ...], env: dict[str, Term],
               supply: SkolemSupply) -> Formula:
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(apply_to_term(env, a) for a in f.args))
    if isinstance(f, Equal):
        return Equal(apply_to_term(env, f.lhs), apply_to_term(env, f.rhs))
    if isinstance(f, Not):
        return Not(_skolemize(f.sub, universals, env, supply))
    if isinstance(f, (And, Or)):
        return type(f)(
            _skolemize(f.lhs, universals, env, supply),
            _skolemize(f.rhs, universals, env, supply),
        )
    if isinstance(f, Forall):
        return Forall(f.var, _skolemize(f.body, universals + (Var(f.var),), env, supply))
    if isinstance(f, Exists):
        name = supply.fresh(len(universals))
        inner = dict(env)
        inner[f.var] = App(name, universals)
        return _skolemize(f.body, universals, inner, supply)
    return f  # Truth / Falsity


def skolemize(f: Formula, sig: Signature | None = None) -> Formula:
    """Replace each ∃y under universals x1..xn by a fresh sk_i(x1..xn).

    f must be closed and in NNF with distinct binders (see rectify).
    Fresh symbols never collide with symbols of sig (default: the
    symbols of f itself); sig is extended with the new functions.
    """
    if sig is None:
        sig = signature_of([f])
    return _skolemize(f, (), {}, SkolemSupply(sig))


# ---------------------------------------------------------------------------
# CNF distribution and the full pipeline
# ---------------------------------------------------------------------------

def _matrix_literal(f: Formula) -> Literal:
    if isinstance(f, Atom):
        return Literal(True, f.pred, f.args)
    if isinstance(f, Equal):
        return Literal(True, EQ, (f.lhs, f.rhs))
    if isinstance(f, Not):
        return _matrix_literal(f.sub).negate()
    raise ValueError(f"not a literal: {f!r}")


def _distribute(f: Formula) -> list[list[Literal]]:
    if isinstance(f, Truth):
        return []
    if isinstance(f, Falsity):
        return [[]]
    if isinstance(f, And):
        return _distribute(f.lhs) + _distribute(f.rhs)
    if isinstance(f, Or):
        left = _distribute(f.lhs)
        right = _distribute(f.rhs)
        return [a + b for a in left for b in right]
    return [[_matrix_literal(f)]]


def _strip_universals(f: Formula) -> Formula:
    while isinstance(f, Forall):
        f = f.body
    if isinstance(f, (And, Or)):
        return type(f)(_strip_universals(f.lhs), _strip_universals(f.rhs))
    return f


def clausify_formula(f: Formula, label: str, sig: Signature,
                     supply: SkolemSupply | None = None) -> list[Clause]:
    """CNF of one closed formula; clauses carry the given label."""
    if supply is None:
        supply = SkolemSupply(sig)
    g = rectify(nnf(f))
    g = _skolemize(g, (), {}, supply)
    g = _strip_universals(g)
    out: list[Clause] = []
    seen: set[Clause] = set()
    for lits in _distribute(g):
        c = Clause(lits, (label,))
        if c.is_tautology() or c in seen:
            continue
        seen.add(c)
        out.append(c)
    return out


def clausify(units) -> list[Clause]:
    """Clausify a list of NamedFormula; output clauses renamed apart.

    Roles are ignored: formulas are converted as stated.  Negating a
    conjecture is the caller's responsibility.  Skolem names are fresh
    across the whole unit list.
    """
    units = list(units)
    sig = signature_of(u.formula for u in units)
    supply = SkolemSupply(sig)
    out: list[Clause] = []
    for u in units:
        out.extend(clausify_formula(u.formula, u.label, sig, supply))
    return rename_clauses_apart(out)


# ---------------------------------------------------------------------------
# Equality axioms
# ---------------------------------------------------------------------------

def _eq(a: Term, b: Term) -> Literal:
    return Literal(True, EQ, (a, b))


def _neq(a: Term, b: Term) -> Literal:
    return Literal(False, EQ, (a, b))


def equality_axioms(sig: Signature) -> list[Clause]:
    """Reflexivity, symmetry, transitivity, and per-position congruence."""
    x, y, z = Var("X"), Var("Y"), Var("Z")
    out = [
        Clause([_eq(x, x)], ("eq_refl",)),
        Clause([_neq(x, y), _eq(y, x)], ("eq_sym",)),
        Clause([_neq(x, y), _neq(y, z), _eq(x, z)], ("eq_trans",)),
    ]
    for name, arity in sig.functions.items():
        for i in range(arity):
            xs = tuple(Var(f"A{j}") for j in range(arity))
            ys = tuple(Var("B") if j == i else xs[j] for j in range(arity))
            out.append(
                Clause(
                    [_neq(xs[i], ys[i]), _eq(App(name, xs), App(name, ys))],
                    (f"eq_{name}_{i + 1}",),
                )
            )
    for name, arity in sig.predicates.items():
        for i in range(arity):
            xs = tuple(Var(f"A{j}") for j in range(arity))
            ys = tuple(Var("B") if j == i else xs[j] for j in range(arity))
            out.append(
                Clause(
                    [_neq(xs[i], ys[i]), Literal(False, name, xs), Literal(True, name, ys)],
                    (f"eq_{name}_{i + 1}",),
                )
            )
    return rename_clauses_apart(out)


def uses_equality(clauses: Iterable[Clause]) -> bool:
    return any(l.is_equality() for c in clauses for l in c.literals)


def clause_signature(clauses: Iterable[Clause], base: Signature | None = None) -> Signature:
    """Collect every symbol occurring in the clauses, in first-use order.

    Starting from base (if given) picks up declared-but-unused symbols;
    the scan then adds anything the clauses mention on top, such as
    Skolem symbols that clausification introduced.
    """
    sig = base.copy() if base is not None else Signature()
    for c in clauses:
        for lit in c.literals:
            if not lit.is_equality():
                sig.add_predicate(lit.pred, len(lit.args))
            stack = list(reversed(lit.args))
            while stack:
                t = stack.pop()
                if isinstance(t, App):
                    sig.add_function(t.op, len(t.args))
                    stack.extend(reversed(t.args))
    return sig
