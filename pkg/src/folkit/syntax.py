"""Abstract syntax for first-order logic with equality.

Terms, formulas, signatures and substitutions.  Everything here is
immutable after construction and safe to share between threads; the
prover relies on that to reuse subtrees freely.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator, Mapping, Union


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------

class Term:
    """Base class for terms. Concrete terms are Var and App."""

    __slots__ = ()


class Var(Term):
    """A variable, identified by its (interned) name."""

    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        if not name:
            raise ValueError("variable name must be nonempty")
        object.__setattr__(self, "name", sys.intern(name))
        object.__setattr__(self, "_hash", hash(("var", self.name)))

    def __setattr__(self, key, value):
        raise AttributeError("Var is immutable")

    def __eq__(self, other):
        return self is other or (type(other) is Var and self.name == other.name)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Var({self.name!r})"


class App(Term):
    """A function application; constants are 0-ary applications."""

    __slots__ = ("op", "args", "size", "_hash")

    def __init__(self, op: str, args: tuple[Term, ...] = ()):
        if not op:
            raise ValueError("function symbol must be nonempty")
        object.__setattr__(self, "op", sys.intern(op))
        object.__setattr__(self, "args", tuple(args))
        object.__setattr__(
            self,
            "size",
            1 + sum(a.size if type(a) is App else 1 for a in self.args),
        )
        object.__setattr__(self, "_hash", hash(("app", self.op, self.args)))

    def __setattr__(self, key, value):
        raise AttributeError("App is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is App
            and self._hash == other._hash
            and self.op == other.op
            and self.args == other.args
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.args:
            return f"App({self.op!r})"
        return f"App({self.op!r}, {self.args!r})"


def const(name: str) -> App:
    """Shorthand for a constant (0-ary application)."""
    return App(name, ())


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Equal:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Not:
    sub: "Formula"


@dataclass(frozen=True)
class And:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Or:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Implies:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Iff:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Truth:
    pass


@dataclass(frozen=True)
class Falsity:
    pass


TRUE = Truth()
FALSE = Falsity()

Formula = Union[
    Atom, Equal, Not, And, Or, Implies, Iff, Forall, Exists, Truth, Falsity
]

BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (Forall, Exists)


# ---------------------------------------------------------------------------
# Signature
# ---------------------------------------------------------------------------

class SignatureError(Exception):
    """Arity clash or predicate/function namespace collision."""


class Signature:
    """Predicate and function symbols with arities.

    The two namespaces are disjoint; equality is built in and never
    listed.  Dicts preserve declaration order, which downstream code
    relies on (e.g. model output ordering and symmetry breaking).
    """

    def __init__(
        self,
        predicates: Mapping[str, int] | None = None,
        functions: Mapping[str, int] | None = None,
    ):
        self.predicates: dict[str, int] = {}
        self.functions: dict[str, int] = {}
        for name, arity in (predicates or {}).items():
            self.add_predicate(name, arity)
        for name, arity in (functions or {}).items():
            self.add_function(name, arity)

    def add_predicate(self, name: str, arity: int) -> None:
        if name in self.functions:
            raise SignatureError(f"{name!r} already declared as a function")
        old = self.predicates.get(name)
        if old is not None and old != arity:
            raise SignatureError(
                f"predicate {name!r} used with arity {arity}, expected {old}"
            )
        self.predicates[name] = arity

    def add_function(self, name: str, arity: int) -> None:
        if name in self.predicates:
            raise SignatureError(f"{name!r} already declared as a predicate")
        old = self.functions.get(name)
        if old is not None and old != arity:
            raise SignatureError(
                f"function {name!r} used with arity {arity}, expected {old}"
            )
        self.functions[name] = arity

    def constants(self) -> list[str]:
        return [name for name, arity in self.functions.items() if arity == 0]

    def copy(self) -> "Signature":
        sig = Signature()
        sig.predicates.update(self.predicates)
        sig.functions.update(self.functions)
        return sig

    def __contains__(self, name: str) -> bool:
        return name in self.predicates or name in self.functions

    def __eq__(self, other):
        return (
            isinstance(other, Signature)
            and self.predicates == other.predicates
            and self.functions == other.functions
        )

    def __repr__(self):
        return f"Signature(predicates={self.predicates}, functions={self.functions})"


def signature_of(formulas, base: Signature | None = None) -> Signature:
    """Collect the signature used by the given formulas.

    Raises SignatureError if a symbol is used at inconsistent arities or
    in both namespaces.
    """
    sig = base.copy() if base is not None else Signature()

    def walk_term(t: Term):
        if isinstance(t, App):
            sig.add_function(t.op, len(t.args))
            for a in t.args:
                walk_term(a)

    def walk(f: Formula):
        if isinstance(f, Atom):
            sig.add_predicate(f.pred, len(f.args))
            for a in f.args:
                walk_term(a)
        elif isinstance(f, Equal):
            walk_term(f.lhs)
            walk_term(f.rhs)
        elif isinstance(f, Not):
            walk(f.sub)
        elif isinstance(f, BINARY):
            walk(f.lhs)
            walk(f.rhs)
        elif isinstance(f, QUANTIFIERS):
            walk(f.body)

    for f in formulas:
        walk(f)
    return sig


# ---------------------------------------------------------------------------
# Free variables
# ---------------------------------------------------------------------------

def term_variables(t: Term) -> set[str]:
    out: set[str] = set()
    stack = [t]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Var):
            out.add(cur.name)
        else:
            stack.extend(cur.args)  # type: ignore[union-attr]
    return out


def free_variables(f: Formula) -> set[str]:
    """Variables of f occurring outside any binder."""
    if isinstance(f, Atom):
        out: set[str] = set()
        for a in f.args:
            out |= term_variables(a)
        return out
    if isinstance(f, Equal):
        return term_variables(f.lhs) | term_variables(f.rhs)
    if isinstance(f, Not):
        return free_variables(f.sub)
    if isinstance(f, BINARY):
        return free_variables(f.lhs) | free_variables(f.rhs)
    if isinstance(f, QUANTIFIERS):
        return free_variables(f.body) - {f.var}
    return set()


def is_closed(f: Formula) -> bool:
    return not free_variables(f)


# ---------------------------------------------------------------------------
# Substitutions
# ---------------------------------------------------------------------------

class Substitution(Mapping):
    """A finite map variable-name -> Term, applied simultaneously.

    Well-formed substitutions are idempotent: no bound variable occurs
    in any term of the range.  unify() always returns idempotent
    substitutions; hand-built ones are the caller's responsibility.
    """

    __slots__ = ("bindings",)

    def __init__(self, bindings: Mapping[str, Term] | None = None):
        self.bindings: dict[str, Term] = dict(bindings or {})

    def __getitem__(self, name: str) -> Term:
        return self.bindings[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self.bindings)

    def __len__(self) -> int:
        return len(self.bindings)

    def __repr__(self):
        inner = ", ".join(f"{v} -> {term_str(t)}" for v, t in self.bindings.items())
        return "{" + inner + "}"

    def is_idempotent(self) -> bool:
        range_vars: set[str] = set()
        for t in self.bindings.values():
            range_vars |= term_variables(t)
        return not (range_vars & self.bindings.keys())


EMPTY_SUBSTITUTION = Substitution()


def apply_to_term(s: Mapping[str, Term], t: Term) -> Term:
    """Simultaneous replacement: each variable is replaced exactly once."""
    if isinstance(t, Var):
        return s.get(t.name, t) if isinstance(s, dict) else (s[t.name] if t.name in s else t)
    assert isinstance(t, App)
    if not t.args:
        return t
    new_args = tuple(apply_to_term(s, a) for a in t.args)
    if new_args == t.args:
        return t
    return App(t.op, new_args)


def _fresh_name(base: str, avoid: set[str]) -> str:
    i = 0
    while f"{base}_{i}" in avoid:
        i += 1
    return f"{base}_{i}"


def apply_to_formula(s: Mapping[str, Term], f: Formula) -> Formula:
    """Capture-avoiding substitution on formulas.

    Bound variables are renamed on the fly whenever they would capture
    a variable free in the range of s.
    """
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(apply_to_term(s, a) for a in f.args))
    if isinstance(f, Equal):
        return Equal(apply_to_term(s, f.lhs), apply_to_term(s, f.rhs))
    if isinstance(f, Not):
        return Not(apply_to_formula(s, f.sub))
    if isinstance(f, BINARY):
        return type(f)(apply_to_formula(s, f.lhs), apply_to_formula(s, f.rhs))
    if isinstance(f, QUANTIFIERS):
        inner = {v: t for v, t in s.items() if v != f.var}
        if not inner:
            return f
        range_vars: set[str] = set()
        for t in inner.values():
            range_vars |= term_variables(t)
        if f.var in range_vars:
            avoid = range_vars | free_variables(f.body) | set(inner)
            fresh = _fresh_name(f.var, avoid)
            inner[f.var] = Var(fresh)
            return type(f)(fresh, apply_to_formula(inner, f.body))
        return type(f)(f.var, apply_to_formula(inner, f.body))
    return f


def apply_substitution(s, x):
    """Apply substitution s to a Term or a Formula."""
    mapping = s.bindings if isinstance(s, Substitution) else s
    if isinstance(x, Term):
        return apply_to_term(mapping, x)
    return apply_to_formula(mapping, x)


# ---------------------------------------------------------------------------
# Alpha equivalence
# ---------------------------------------------------------------------------

def alpha_equal(a: Formula, b: Formula) -> bool:
    """True iff a and b differ only in the names of bound variables."""

    def eq_term(s: Term, t: Term, env_a: dict[str, int], env_b: dict[str, int]) -> bool:
        if isinstance(s, Var):
            if not isinstance(t, Var):
                return False
            ia, ib = env_a.get(s.name), env_b.get(t.name)
            if ia is None and ib is None:
                return s.name == t.name  # both free
            return ia == ib and ia is not None
        if not isinstance(t, App) or not isinstance(s, App):
            return False
        return (
            s.op == t.op
            and len(s.args) == len(t.args)
            and all(eq_term(x, y, env_a, env_b) for x, y in zip(s.args, t.args))
        )

    def eq(f: Formula, g: Formula, env_a: dict[str, int], env_b: dict[str, int], depth: int) -> bool:
        if type(f) is not type(g):
            return False
        if isinstance(f, Atom):
            return (
                f.pred == g.pred
                and len(f.args) == len(g.args)
                and all(eq_term(x, y, env_a, env_b) for x, y in zip(f.args, g.args))
            )
        if isinstance(f, Equal):
            return eq_term(f.lhs, g.lhs, env_a, env_b) and eq_term(
                f.rhs, g.rhs, env_a, env_b
            )
        if isinstance(f, Not):
            return eq(f.sub, g.sub, env_a, env_b, depth)
        if isinstance(f, BINARY):
            return eq(f.lhs, g.lhs, env_a, env_b, depth) and eq(
                f.rhs, g.rhs, env_a, env_b, depth
            )
        if isinstance(f, QUANTIFIERS):
            ea = dict(env_a)
            eb = dict(env_b)
            ea[f.var] = depth
            eb[g.var] = depth
            return eq(f.body, g.body, ea, eb, depth + 1)
        return True  # Truth / Falsity

    return eq(a, b, {}, {}, 0)


# ---------------------------------------------------------------------------
# Plain-text rendering (diagnostics; TPTP printing lives in tptp.py)
# ---------------------------------------------------------------------------

def term_str(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    assert isinstance(t, App)
    if not t.args:
        return t.op
    return f"{t.op}({','.join(term_str(a) for a in t.args)})"


def formula_str(f: Formula) -> str:
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({','.join(term_str(a) for a in f.args)})"
    if isinstance(f, Equal):
        return f"{term_str(f.lhs)} = {term_str(f.rhs)}"
    if isinstance(f, Not):
        return f"~({formula_str(f.sub)})"
    if isinstance(f, And):
        return f"({formula_str(f.lhs)} & {formula_str(f.rhs)})"
    if isinstance(f, Or):
        return f"({formula_str(f.lhs)} | {formula_str(f.rhs)})"
    if isinstance(f, Implies):
        return f"({formula_str(f.lhs)} => {formula_str(f.rhs)})"
    if isinstance(f, Iff):
        return f"({formula_str(f.lhs)} <=> {formula_str(f.rhs)})"
    if isinstance(f, Forall):
        return f"(![{f.var}]: {formula_str(f.body)})"
    if isinstance(f, Exists):
        return f"(?[{f.var}]: {formula_str(f.body)})"
    if isinstance(f, Truth):
        return "$true"
    return "$false"
