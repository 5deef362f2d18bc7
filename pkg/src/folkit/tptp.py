"""TPTP FOF reader and writer.

Supports the first-order fragment: `fof(label, role, formula).` units
with roles axiom and conjecture, `%` line comments, quantifiers with
maximal right scope, and connectives `~  =  !=  &  |  =>  <=>` from
tightest to loosest.  `&` and `|` do not mix without parentheses;
`=>` and `<=>` are non-associative, so chains are syntax errors.
`$true`/`$false` (and bare `true`/`false`) are the logical constants;
output always uses the `$` forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

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
    SignatureError,
    TRUE,
    Term,
    Truth,
    Var,
    free_variables,
    signature_of,
)

ROLES = ("axiom", "conjecture")


class ParseError(Exception):
    """Syntax error with source position."""

    def __init__(self, message: str, line: int, col: int, expected: str | None = None):
        self.message = message
        self.line = line
        self.col = col
        self.expected = expected
        super().__init__(f"line {line}, column {col}: {message}")


class DuplicateLabelError(Exception):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"duplicate formula label {label!r}")


class FreeVariableError(Exception):
    def __init__(self, label: str, variables: set[str]):
        self.label = label
        self.variables = variables
        names = ", ".join(sorted(variables))
        super().__init__(f"formula {label!r} has free variables: {names}")


class ArityError(Exception):
    """A symbol is used at inconsistent arities or in both namespaces."""

    def __init__(self, message: str):
        super().__init__(message)


@dataclass(frozen=True)
class NamedFormula:
    label: str
    role: str
    formula: Formula

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r}")


@dataclass
class Problem:
    """An ordered list of named formulas with at most one conjecture."""

    units: list[NamedFormula] = field(default_factory=list)

    def __post_init__(self):
        seen: set[str] = set()
        conjectures = 0
        for nf in self.units:
            if nf.label in seen:
                raise DuplicateLabelError(nf.label)
            seen.add(nf.label)
            if nf.role == "conjecture":
                conjectures += 1
        if conjectures > 1:
            raise ValueError("a problem may contain at most one conjecture")

    def axioms(self) -> list[NamedFormula]:
        return [nf for nf in self.units if nf.role == "axiom"]

    def conjecture(self) -> NamedFormula | None:
        for nf in self.units:
            if nf.role == "conjecture":
                return nf
        return None

    def by_label(self, label: str) -> NamedFormula:
        for nf in self.units:
            if nf.label == label:
                return nf
        raise KeyError(label)

    def signature(self) -> Signature:
        try:
            return signature_of(nf.formula for nf in self.units)
        except SignatureError as exc:
            raise ArityError(str(exc)) from exc


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_PUNCT = ("(", ")", "[", "]", ",", ".", ":")
_OPS = ("<=>", "=>", "!=", "~", "&", "|", "=", "!", "?")


@dataclass(frozen=True)
class _Token:
    kind: str  # 'lower', 'upper', 'dollar', 'punct', 'op', 'eof'
    value: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    line = 1
    col = 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "upper" if word[0].isupper() or word[0] == "_" else "lower"
            tokens.append(_Token(kind, word, line, start_col))
            col += j - i
            i = j
            continue
        if c == "$":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("dollar", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        matched = None
        for op in _OPS:
            if text.startswith(op, i):
                matched = op
                break
        if matched is not None:
            tokens.append(_Token("op", matched, line, start_col))
            i += len(matched)
            col += len(matched)
            continue
        if c in _PUNCT:
            tokens.append(_Token("punct", c, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, expected: str, tok: _Token | None = None) -> ParseError:
        tok = tok or self.peek()
        found = repr(tok.value) if tok.kind != "eof" else "end of input"
        return ParseError(
            f"expected {expected}, found {found}", tok.line, tok.col, expected
        )

    def expect(self, value: str, expected: str | None = None) -> _Token:
        tok = self.peek()
        if tok.value != value or tok.kind == "eof":
            raise self.error(expected or repr(value))
        return self.next()

    # -- units --------------------------------------------------------------

    def parse_problem(self) -> Problem:
        units: list[NamedFormula] = []
        labels: set[str] = set()
        saw_conjecture = False
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.value != "fof":
                raise self.error("'fof'")
            self.next()
            self.expect("(")
            label_tok = self.peek()
            if label_tok.kind != "lower":
                raise self.error("formula label (lowercase word)", label_tok)
            label = self.next().value
            self.expect(",")
            role_tok = self.peek()
            if role_tok.kind != "lower" or role_tok.value not in ROLES:
                raise self.error("role 'axiom' or 'conjecture'", role_tok)
            role = self.next().value
            self.expect(",")
            formula = self.parse_formula()
            self.expect(")")
            self.expect(".")
            if label in labels:
                raise DuplicateLabelError(label)
            labels.add(label)
            if role == "conjecture":
                if saw_conjecture:
                    raise ParseError(
                        "a problem may contain at most one conjecture",
                        role_tok.line,
                        role_tok.col,
                    )
                saw_conjecture = True
            fv = free_variables(formula)
            if fv:
                raise FreeVariableError(label, fv)
            units.append(NamedFormula(label, role, formula))
        problem = Problem(units)
        problem.signature()  # reject inconsistent arities up front
        return problem

    # -- formulas -----------------------------------------------------------

    def parse_formula(self) -> Formula:
        lhs = self.parse_implication()
        if self.peek().value == "<=>":
            self.next()
            rhs = self.parse_implication()
            tok = self.peek()
            if tok.value == "<=>":
                raise ParseError(
                    "'<=>' is non-associative; use parentheses",
                    tok.line,
                    tok.col,
                )
            return Iff(lhs, rhs)
        return lhs

    def parse_implication(self) -> Formula:
        lhs = self.parse_or_and()
        if self.peek().value == "=>":
            self.next()
            rhs = self.parse_or_and()
            tok = self.peek()
            if tok.value == "=>":
                raise ParseError(
                    "'=>' is non-associative; use parentheses", tok.line, tok.col
                )
            return Implies(lhs, rhs)
        return lhs

    def parse_or_and(self) -> Formula:
        first = self.parse_unitary()
        tok = self.peek()
        if tok.value not in ("&", "|"):
            return first
        op = tok.value
        result = first
        while self.peek().value == op:
            self.next()
            operand = self.parse_unitary()
            result = And(result, operand) if op == "&" else Or(result, operand)
        tok = self.peek()
        if tok.value in ("&", "|"):
            raise ParseError(
                "'&' and '|' do not mix; use parentheses", tok.line, tok.col
            )
        return result

    def parse_unitary(self) -> Formula:
        tok = self.peek()
        if tok.value in ("!", "?"):
            self.next()
            self.expect("[")
            names: list[str] = []
            while True:
                var_tok = self.peek()
                if var_tok.kind != "upper":
                    raise self.error("variable (uppercase word)", var_tok)
                names.append(self.next().value)
                if self.peek().value == ",":
                    self.next()
                    continue
                break
            self.expect("]")
            self.expect(":")
            body = self.parse_formula()  # quantifiers reach maximally right
            ctor = Forall if tok.value == "!" else Exists
            for name in reversed(names):
                body = ctor(name, body)
            return body
        if tok.value == "~":
            self.next()
            return Not(self.parse_unitary())
        if tok.value == "(":
            self.next()
            inner = self.parse_formula()
            self.expect(")")
            return self.maybe_equality(inner, parenthesized=True)
        if tok.kind == "dollar":
            if tok.value == "$true":
                self.next()
                return TRUE
            if tok.value == "$false":
                self.next()
                return FALSE
            raise self.error("'$true' or '$false'", tok)
        if tok.kind in ("lower", "upper"):
            if tok.kind == "lower" and tok.value in ("true", "false"):
                nxt = self.tokens[self.pos + 1]
                if nxt.value in ("(", "=", "!="):
                    raise ParseError(
                        f"{tok.value!r} is reserved and cannot take arguments "
                        "or appear in a term",
                        tok.line,
                        tok.col,
                    )
                self.next()
                return TRUE if tok.value == "true" else FALSE
            term = self.parse_term()
            return self.finish_atomic(term, tok)
        raise self.error("a formula")

    def maybe_equality(self, inner: Formula, parenthesized: bool) -> Formula:
        # '(f(X)) = c' is not supported: parenthesized terms stay formulas
        tok = self.peek()
        if parenthesized and tok.value in ("=", "!="):
            raise ParseError(
                "equality operands must be unparenthesized terms", tok.line, tok.col
            )
        return inner

    def finish_atomic(self, term: Term, start: _Token) -> Formula:
        tok = self.peek()
        if tok.value in ("=", "!="):
            self.next()
            rhs = self.parse_term()
            eq = Equal(term, rhs)
            return eq if tok.value == "=" else Not(eq)
        if isinstance(term, Var):
            raise ParseError(
                f"variable {term.name!r} cannot be used as a formula",
                start.line,
                start.col,
            )
        assert isinstance(term, App)
        return Atom(term.op, term.args)

    # -- terms --------------------------------------------------------------

    def parse_term(self) -> Term:
        tok = self.peek()
        if tok.kind == "upper":
            self.next()
            return Var(tok.value)
        if tok.kind != "lower":
            raise self.error("a term", tok)
        if tok.value in ("true", "false"):
            raise ParseError(
                f"{tok.value!r} is reserved and cannot appear in a term",
                tok.line,
                tok.col,
            )
        self.next()
        args: list[Term] = []
        if self.peek().value == "(":
            self.next()
            while True:
                args.append(self.parse_term())
                if self.peek().value == ",":
                    self.next()
                    continue
                break
            self.expect(")")
        return App(tok.value, tuple(args))


def parse_tptp(text: str) -> Problem:
    """Parse a sequence of fof units into a Problem."""
    return _Parser(text).parse_problem()


def parse_fof_formula(text: str) -> Formula:
    """Parse a bare formula (no fof wrapper); must consume all input."""
    parser = _Parser(text)
    formula = parser.parse_formula()
    tok = parser.peek()
    if tok.kind != "eof":
        raise parser.error("end of input", tok)
    return formula


# ---------------------------------------------------------------------------
# Printer
# ---------------------------------------------------------------------------

def _term_out(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    assert isinstance(t, App)
    if not t.args:
        return t.op
    return f"{t.op}({','.join(_term_out(a) for a in t.args)})"


def _chain(f: Formula, op) -> list[Formula]:
    # flatten the left spine only, so reparsing rebuilds the same tree
    parts: list[Formula] = []
    while isinstance(f, op):
        parts.append(f.rhs)
        f = f.lhs
    parts.append(f)
    parts.reverse()
    return parts


def _unitary_out(f: Formula, tail: bool) -> str:
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({','.join(_term_out(a) for a in f.args)})"
    if isinstance(f, Equal):
        return f"{_term_out(f.lhs)} = {_term_out(f.rhs)}"
    if isinstance(f, Truth):
        return "$true"
    if isinstance(f, Falsity):
        return "$false"
    if isinstance(f, Not):
        if isinstance(f.sub, Equal):
            return f"{_term_out(f.sub.lhs)} != {_term_out(f.sub.rhs)}"
        if isinstance(f.sub, (Atom, Equal, Not, Truth, Falsity, Forall, Exists)):
            return "~" + _unitary_out(f.sub, tail)
        return f"~({_formula_out(f.sub, True)})"
    if isinstance(f, (Forall, Exists)):
        mark = "!" if isinstance(f, Forall) else "?"
        body = _formula_out(f.body, True)
        text = f"{mark}[{f.var}] : {body}"
        return text if tail else f"({text})"
    return f"({_formula_out(f, True)})"


def _orand_out(f: Formula, tail: bool) -> str:
    if isinstance(f, (And, Or)):
        op = And if isinstance(f, And) else Or
        sep = " & " if isinstance(f, And) else " | "
        parts = _chain(f, op)
        last = len(parts) - 1
        return sep.join(
            _unitary_out(p, tail and i == last) for i, p in enumerate(parts)
        )
    return _unitary_out(f, tail)


def _impl_out(f: Formula, tail: bool) -> str:
    if isinstance(f, Implies):
        return f"{_orand_out(f.lhs, False)} => {_orand_out(f.rhs, tail)}"
    return _orand_out(f, tail)


def _formula_out(f: Formula, tail: bool) -> str:
    if isinstance(f, Iff):
        return f"{_impl_out(f.lhs, False)} <=> {_impl_out(f.rhs, tail)}"
    return _impl_out(f, tail)


def format_formula(f: Formula) -> str:
    """Render a formula in fof syntax with minimal parentheses."""
    return _formula_out(f, True)


def print_tptp(problem: Problem) -> str:
    """Render a problem, one fof unit per line."""
    lines = [
        f"fof({nf.label}, {nf.role}, {format_formula(nf.formula)})."
        for nf in problem.units
    ]
    return "\n".join(lines) + ("\n" if lines else "")
