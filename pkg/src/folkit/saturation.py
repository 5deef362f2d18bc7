"""Given-clause refutation prover: binary resolution + factoring.

saturate() runs an Otter-style loop with forward subsumption and
tautology deletion, selecting clauses by weight with every fifth
selection by age.  Refutations come with a Derivation whose steps are
independently re-checkable by check_derivation().
"""

from __future__ import annotations

import heapq
import time
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Union

from .clausal import (
    Clause,
    Literal,
    VariableSupply,
    clause_str,
    rename_clause,
)
from .syntax import App, Substitution, Term, Var

# ---------------------------------------------------------------------------
# Unification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mgu:
    substitution: Substitution


@dataclass(frozen=True)
class Clash:
    pass


@dataclass(frozen=True)
class OccursCheckFailure:
    pass


UnificationResult = Union[Mgu, Clash, OccursCheckFailure]


def _walk(t: Term, s: dict[str, Term]) -> Term:
    while isinstance(t, Var):
        bound = s.get(t.name)
        if bound is None:
            return t
        t = bound
    return t


def _occurs(name: str, t: Term, s: dict[str, Term]) -> bool:
    stack = [t]
    while stack:
        cur = _walk(stack.pop(), s)
        if isinstance(cur, Var):
            if cur.name == name:
                return True
        else:
            stack.extend(cur.args)  # type: ignore[union-attr]
    return False


def _unify_into(a: Term, b: Term, s: dict[str, Term]) -> str | None:
    """Extend s to unify a and b; returns None, 'clash' or 'occurs'."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        x = _walk(x, s)
        y = _walk(y, s)
        if isinstance(x, Var):
            if isinstance(y, Var) and y.name == x.name:
                continue
            if _occurs(x.name, y, s):
                return "occurs"
            s[x.name] = y
            continue
        if isinstance(y, Var):
            if _occurs(y.name, x, s):
                return "occurs"
            s[y.name] = x
            continue
        assert isinstance(x, App) and isinstance(y, App)
        if x.op != y.op or len(x.args) != len(y.args):
            return "clash"
        stack.extend(zip(x.args, y.args))
    return None


def _resolve_term(t: Term, s: dict[str, Term]) -> Term:
    t = _walk(t, s)
    if isinstance(t, Var):
        return t
    assert isinstance(t, App)
    if not t.args:
        return t
    return App(t.op, tuple(_resolve_term(a, s) for a in t.args))


def _solved_form(s: dict[str, Term]) -> dict[str, Term]:
    return {v: _resolve_term(Var(v), s) for v in s}


def unify(a: Term, b: Term) -> UnificationResult:
    """Most general unifier of two terms, with occurs check."""
    s: dict[str, Term] = {}
    outcome = _unify_into(a, b, s)
    if outcome == "clash":
        return Clash()
    if outcome == "occurs":
        return OccursCheckFailure()
    return Mgu(Substitution(_solved_form(s)))


def _unify_args(xs: tuple[Term, ...], ys: tuple[Term, ...]) -> dict[str, Term] | None:
    """Unify argument tuples pairwise; returns the solved mgu or None."""
    if len(xs) != len(ys):
        return None
    s: dict[str, Term] = {}
    for x, y in zip(xs, ys):
        if _unify_into(x, y, s) is not None:
            return None
    return _solved_form(s)


# ---------------------------------------------------------------------------
# Matching (one-way) and subsumption
# ---------------------------------------------------------------------------

def _match_terms(pattern: Term, target: Term, s: dict[str, Term]) -> bool:
    stack = [(pattern, target)]
    while stack:
        p, t = stack.pop()
        if isinstance(p, Var):
            bound = s.get(p.name)
            if bound is None:
                s[p.name] = t
                continue
            if bound != t:
                return False
            continue
        if isinstance(t, Var):
            return False
        assert isinstance(p, App) and isinstance(t, App)
        if p.op != t.op or len(p.args) != len(t.args):
            return False
        stack.extend(zip(p.args, t.args))
    return True


def _match_args(
    pargs: tuple[Term, ...],
    targs: tuple[Term, ...],
    bindings: dict[str, Term],
    trail: list[str],
) -> bool:
    # failed matches may leave bindings behind; the caller unwinds trail
    stack = list(zip(pargs, targs))
    while stack:
        p, t = stack.pop()
        if type(p) is Var:
            bound = bindings.get(p.name)
            if bound is None:
                bindings[p.name] = t
                trail.append(p.name)
                continue
            if bound != t:
                return False
            continue
        if type(t) is not App or p.op != t.op or len(p.args) != len(t.args):
            return False
        stack.extend(zip(p.args, t.args))
    return True


def _embed(
    c_lits: tuple[Literal, ...],
    d_lits: tuple[Literal, ...],
    used: int,
    bindings: dict[str, Term],
    trail: list[str],
) -> bool:
    """Backtracking injective matcher mapping c_lits into unused d_lits."""
    n = len(c_lits)

    def extend(i: int, used: int) -> bool:
        if i == n:
            return True
        lit = c_lits[i]
        for j, cand in enumerate(d_lits):
            if used & (1 << j):
                continue
            if cand.positive != lit.positive or cand.pred != lit.pred:
                continue
            mark = len(trail)
            if _match_args(lit.args, cand.args, bindings, trail):
                if extend(i + 1, used | (1 << j)):
                    return True
            for k in range(len(trail) - 1, mark - 1, -1):
                del bindings[trail[k]]
            del trail[mark:]
        return False

    return extend(0, used)


def subsumes(c: Clause, d: Clause) -> bool:
    """True iff some instance of c is a sub-multiset of d.

    The length guard keeps subsumption compatible with completeness of
    resolution + factoring.
    """
    if len(c.literals) > len(d.literals):
        return False
    if c.ground:
        return c.lit_set <= d.lit_set
    return _embed(c.literals, d.literals, 0, {}, [])


# ---------------------------------------------------------------------------
# Inference rules
# ---------------------------------------------------------------------------

def resolve(c1: Clause, c2: Clause) -> list[tuple[Clause, tuple[int, int], Substitution]]:
    """All binary resolvents of c1, c2 (which must be renamed apart).

    Each result is (resolvent, (i, j), mgu) where i indexes the literal
    resolved upon in c1 and j the one in c2.
    """
    out = []
    for i, l1 in enumerate(c1.literals):
        for j, l2 in enumerate(c2.literals):
            if l1.positive == l2.positive or l1.pred != l2.pred:
                continue
            mgu = _unify_args(l1.args, l2.args)
            if mgu is None:
                continue
            lits = [l.substitute(mgu) for k, l in enumerate(c1.literals) if k != i]
            lits += [l.substitute(mgu) for k, l in enumerate(c2.literals) if k != j]
            labels = c1.labels + tuple(x for x in c2.labels if x not in c1.labels)
            out.append((Clause(lits, labels), (i, j), Substitution(mgu)))
    return out


def factor(c: Clause) -> list[tuple[Clause, tuple[int, int], Substitution]]:
    """All factors of c: unify two same-sign literals and merge."""
    out = []
    for i in range(len(c.literals)):
        for j in range(i + 1, len(c.literals)):
            l1, l2 = c.literals[i], c.literals[j]
            if l1.positive != l2.positive or l1.pred != l2.pred:
                continue
            mgu = _unify_args(l1.args, l2.args)
            if mgu is None:
                continue
            out.append((c.substitute(mgu), (i, j), Substitution(mgu)))
    return out


# ---------------------------------------------------------------------------
# Derivations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Input:
    label: str


@dataclass(frozen=True)
class Resolution:
    parents: tuple[int, int]
    positions: tuple[int, int]
    mgu: Substitution


@dataclass(frozen=True)
class Factoring:
    parent: int
    positions: tuple[int, int]
    mgu: Substitution


Rule = Union[Input, Resolution, Factoring]


@dataclass(frozen=True)
class Step:
    id: int
    clause: Clause
    rule: Rule


@dataclass
class Derivation:
    steps: list[Step] = field(default_factory=list)

    def is_refutation(self) -> bool:
        return bool(self.steps) and self.steps[-1].clause.is_empty()


@dataclass
class Refutation:
    derivation: Derivation
    generated: int = 0


@dataclass
class Saturated:
    generated: int = 0


@dataclass
class ResourceOut:
    reason: str  # 'clause-limit' | 'time-limit' | 'memory-limit'
    generated: int = 0


SaturationResult = Union[Refutation, Saturated, ResourceOut]


@dataclass
class Limits:
    max_clauses: int | None = 10**6
    max_seconds: float | None = 60.0


def _variant_map(a: Clause, b: Clause) -> bool:
    """True iff b is a (literal-order-preserving) variable renaming of a."""
    if len(a.literals) != len(b.literals):
        return False
    fwd: dict[str, str] = {}
    bwd: dict[str, str] = {}

    def terms(x: Term, y: Term) -> bool:
        stack = [(x, y)]
        while stack:
            s, t = stack.pop()
            if isinstance(s, Var):
                if not isinstance(t, Var):
                    return False
                if fwd.setdefault(s.name, t.name) != t.name:
                    return False
                if bwd.setdefault(t.name, s.name) != s.name:
                    return False
                continue
            if isinstance(t, Var):
                return False
            assert isinstance(s, App) and isinstance(t, App)
            if s.op != t.op or len(s.args) != len(t.args):
                return False
            stack.extend(zip(s.args, t.args))
        return True

    for la, lb in zip(a.literals, b.literals):
        if la.positive != lb.positive or la.pred != lb.pred:
            return False
        if len(la.args) != len(lb.args):
            return False
        if not all(terms(x, y) for x, y in zip(la.args, lb.args)):
            return False
    return True


def _prime_copy(c: Clause) -> Clause:
    # deterministic renaming for resolving a clause against itself
    mapping = {v: Var(v + "_p") for v in c.variables()}
    return c.substitute(mapping)


def _eligible_indices(c: Clause) -> tuple[int, ...]:
    """Literal positions the search may resolve on.

    A clause with a negative literal resolves only on its first negative
    literal; an all-positive clause resolves on any literal.  Restricting
    resolution to a selected negative literal this way is refutationally
    complete and prunes the search space by orders of magnitude, since
    every resolution then pairs a selected negative literal with a literal
    of an all-positive clause.
    """
    for i, lit in enumerate(c.literals):
        if not lit.positive:
            return (i,)
    return tuple(range(len(c.literals)))


# ---------------------------------------------------------------------------
# The given-clause loop
# ---------------------------------------------------------------------------

class _ClauseQueue:
    """Unprocessed clauses, retrievable by lowest weight or lowest id."""

    def __init__(self):
        self.by_weight: list[tuple[int, int]] = []
        self.by_age: list[int] = []
        self.alive: set[int] = set()

    def push(self, cid: int, weight: int) -> None:
        heapq.heappush(self.by_weight, (weight, cid))
        heapq.heappush(self.by_age, cid)
        self.alive.add(cid)

    def __bool__(self) -> bool:
        return bool(self.alive)

    def pop_lightest(self) -> int:
        while True:
            _, cid = heapq.heappop(self.by_weight)
            if cid in self.alive:
                self.alive.discard(cid)
                return cid

    def pop_oldest(self) -> int:
        while True:
            cid = heapq.heappop(self.by_age)
            if cid in self.alive:
                self.alive.discard(cid)
                return cid


class _SubsumptionIndex:
    """Forward-subsumption retrieval over the kept clause set.

    Ground clauses are bucketed under their first-seen least literal, so
    a query only probes buckets keyed by its own literals.  Non-ground
    clauses are bucketed by a (sign, predicate) bitmask and prefiltered
    by packed occurrence counts before the full matcher runs.

    The count prefilter packs, for every feature key, a 4-bit counter
    (clamped at 7) into one big integer.  A candidate c can only subsume
    d if every per-key count of c is covered by the count in d, which a
    single subtraction checks: each nibble of (d | high_bits) - c keeps
    its high bit exactly when the count in c fits into the count in d,
    and clamping only ever lets extra candidates through to the matcher.
    Two feature families are packed separately: literal (sign, predicate)
    pairs, and rigid argument heads (sign, predicate, position, function).
    """

    def __init__(self):
        self.ground_exact: set = set()
        self.ground_buckets: dict = {}
        self.lit_rank: dict = {}
        self.mask_buckets: dict[int, list] = {}
        self.slot: dict = {}
        self.high_all = 0

    def _rank(self, lit) -> int:
        rank = self.lit_rank.get(lit)
        if rank is None:
            rank = len(self.lit_rank)
            self.lit_rank[lit] = rank
        return rank

    def _pack(self, c: Clause) -> tuple[int, int, int]:
        """Bitmask plus packed counts and their high-bit mask."""
        slot = self.slot
        counts: dict = {}
        for lit in c.literals:
            key = (lit.positive, lit.pred)
            counts[key] = counts.get(key, 0) + 1
            for pos, arg in enumerate(lit.args):
                if type(arg) is App:
                    rkey = (lit.positive, lit.pred, pos, arg.op)
                    counts[rkey] = counts.get(rkey, 0) + 1
        mask = 0
        packed = 0
        high = 0
        for key, n in counts.items():
            idx = slot.get(key)
            if idx is None:
                idx = len(slot)
                slot[key] = idx
                self.high_all |= 8 << (4 * idx)
            shift = 4 * idx
            if len(key) == 2:
                mask |= 1 << idx
            packed |= (n if n < 8 else 7) << shift
            high |= 8 << shift
        return mask, packed, high

    def add(self, c: Clause) -> None:
        if not c.literals:
            return
        if c.ground:
            self.ground_exact.add(c.lit_set)
            key = min(c.literals, key=self._rank)
            self.ground_buckets.setdefault(key, []).append(c)
            return
        mask, packed, high = self._pack(c)
        ground_part = frozenset(l for l in c.literals if not l.has_var)
        var_part = tuple(
            sorted(
                (l for l in c.literals if l.has_var),
                key=lambda l: -l._weight,
            )
        )
        entry = (c.weight(), packed, high, ground_part, var_part)
        lens, entries = self.mask_buckets.setdefault(mask, ([], []))
        clen = len(c.literals)
        at = bisect_right(lens, clen)
        lens.insert(at, clen)
        entries.insert(at, entry)

    def subsumed(self, d: Clause) -> bool:
        dlen = len(d.literals)
        dset = d.lit_set
        if d.ground and dset in self.ground_exact:
            return True
        get_ground = self.ground_buckets.get
        for lit in d.literals:
            for c in get_ground(lit, ()):
                if len(c.literals) <= dlen and c.lit_set <= dset:
                    return True
        dmask, dpacked, _ = self._pack(d)
        dweight = d.weight()
        dlifted = dpacked | self.high_all
        d_lits = d.literals
        for mask, (lens, entries) in self.mask_buckets.items():
            if mask & ~dmask:
                continue
            for at in range(bisect_right(lens, dlen)):
                cweight, packed, high, ground_part, var_part = entries[at]
                if cweight > dweight:
                    continue
                if (dlifted - packed) & high != high:
                    continue
                used = 0
                if ground_part:
                    if not ground_part <= dset:
                        continue
                    # ground literals can only sit on their own copies, so
                    # claim those positions before matching the rest
                    for j, dl in enumerate(d_lits):
                        if dl in ground_part:
                            used |= 1 << j
                if _embed(var_part, d_lits, used, {}, []):
                    return True
        return False


class _Saturation:
    def __init__(self, clauses: Iterable[Clause], limits: Limits):
        self.limits = limits
        self.start = time.monotonic()
        self.supply = VariableSupply()
        self.steps: dict[int, Step] = {}
        self.clauses: dict[int, Clause] = {}
        self.processed: list[int] = []
        self.queue = _ClauseQueue()
        self.next_id = 1
        self.generated = 0
        self.selections = 0
        self.taken_in = False
        self.inputs = list(clauses)
        self.subsumption = _SubsumptionIndex()
        # (sign, pred) -> [(clause id, literal index)] over processed clauses
        self.occurrences: dict[tuple[bool, str], list[tuple[int, int]]] = {}

    def out_of_time(self) -> bool:
        limit = self.limits.max_seconds
        return limit is not None and time.monotonic() - self.start > limit

    def over_clause_limit(self) -> bool:
        limit = self.limits.max_clauses
        return limit is not None and self.generated > limit

    def is_redundant(self, c: Clause) -> bool:
        # forward subsumption only, so every stored clause is still live
        if c.is_tautology():
            return True
        return self.subsumption.subsumed(c)

    def keep(self, c: Clause, rule: Rule) -> Step:
        cid = self.next_id
        self.next_id += 1
        stored = rename_clause(c, self.supply)
        step = Step(cid, stored, rule)
        self.steps[cid] = step
        self.clauses[cid] = stored
        self.queue.push(cid, stored.weight())
        self.subsumption.add(stored)
        return step

    def extract(self, root: int) -> Derivation:
        needed: set[int] = set()
        stack = [root]
        while stack:
            cur = stack.pop()
            if cur in needed:
                continue
            needed.add(cur)
            rule = self.steps[cur].rule
            if isinstance(rule, Resolution):
                stack.extend(rule.parents)
            elif isinstance(rule, Factoring):
                stack.append(rule.parent)
        order = sorted(needed)
        renumber = {old: new for new, old in enumerate(order, start=1)}
        out: list[Step] = []
        for old in order:
            step = self.steps[old]
            rule = step.rule
            if isinstance(rule, Resolution):
                rule = Resolution(
                    (renumber[rule.parents[0]], renumber[rule.parents[1]]),
                    rule.positions,
                    rule.mgu,
                )
            elif isinstance(rule, Factoring):
                rule = Factoring(renumber[rule.parent], rule.positions, rule.mgu)
            out.append(Step(renumber[old], step.clause, rule))
        return Derivation(out)

    def intake(self) -> SaturationResult | None:
        """Load the input clauses; reports a refutation if one is empty."""
        if self.taken_in:
            return None
        self.taken_in = True
        for c in self.inputs:
            label = ",".join(c.labels) if c.labels else "input"
            if c.is_empty():
                step = self.keep(c, Input(label))
                return Refutation(self.extract(step.id), self.generated)
            if not self.is_redundant(c):
                self.keep(c, Input(label))
        return None

    def advance(self, max_selections: int | None = None) -> SaturationResult | None:
        """Process up to max_selections given clauses; None means call again."""
        early = self.intake()
        if early is not None:
            return early
        done = 0
        while self.queue:
            if self.out_of_time():
                return ResourceOut("time-limit", self.generated)
            if max_selections is not None and done >= max_selections:
                return None
            done += 1
            self.selections += 1
            if self.selections % 5 == 0:
                given_id = self.queue.pop_oldest()
            else:
                given_id = self.queue.pop_lightest()
            given = self.clauses[given_id]

            # rule payload: (is_factoring, parents, positions, mgu mapping)
            # only eligible literals take part in resolution, and the
            # occurrence index holds only eligible positions, so a clause
            # with a selected negative literal always meets an all-positive
            # partner; a clause never resolves with its own copy
            results: list[tuple[Clause, tuple]] = []
            for i in _eligible_indices(given):
                lit = given.literals[i]
                lit_ground = not lit.has_var
                for pid, j in self.occurrences.get((not lit.positive, lit.pred), ()):
                    partner = self.clauses[pid]
                    plit = partner.literals[j]
                    if lit_ground and not plit.has_var:
                        if lit.args != plit.args:
                            continue
                        mgu: dict = {}
                    else:
                        found = _unify_args(lit.args, plit.args)
                        if found is None:
                            continue
                        mgu = found
                    if mgu:
                        lits = [
                            l.substitute(mgu)
                            for k, l in enumerate(given.literals)
                            if k != i
                        ]
                        lits += [
                            l.substitute(mgu)
                            for k, l in enumerate(partner.literals)
                            if k != j
                        ]
                    else:
                        lits = [l for k, l in enumerate(given.literals) if k != i]
                        lits += [
                            l for k, l in enumerate(partner.literals) if k != j
                        ]
                    labels = given.labels + tuple(
                        x for x in partner.labels if x not in given.labels
                    )
                    results.append(
                        (
                            Clause(lits, labels),
                            (False, (given_id, pid), (i, j), mgu),
                        )
                    )
            for factored, (i, j), mgu in factor(given):
                results.append((factored, (True, given_id, (i, j), mgu)))

            self.processed.append(given_id)
            for i in _eligible_indices(given):
                lit = given.literals[i]
                self.occurrences.setdefault((lit.positive, lit.pred), []).append(
                    (given_id, i)
                )

            for clause, payload in results:
                self.generated += 1
                if self.over_clause_limit():
                    return ResourceOut("clause-limit", self.generated)
                if self.generated % 256 == 0 and self.out_of_time():
                    return ResourceOut("time-limit", self.generated)
                if not clause.is_empty() and self.is_redundant(clause):
                    continue
                is_factoring, parents, positions, mgu = payload
                if is_factoring:
                    rule: Rule = Factoring(parents, positions, Substitution(mgu))
                else:
                    rule = Resolution(parents, positions, Substitution(mgu))
                step = self.keep(clause, rule)
                if clause.is_empty():
                    return Refutation(self.extract(step.id), self.generated)
        return Saturated(self.generated)

    def run(self) -> SaturationResult:
        while True:
            result = self.advance()
            if result is not None:
                return result


def saturate(clauses: Iterable[Clause], limits: Limits | None = None) -> SaturationResult:
    """Saturate a clause set; inputs are renamed apart on intake."""
    return _Saturation(clauses, limits or Limits()).run()


# ---------------------------------------------------------------------------
# Derivation checking
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    ok: bool
    failed_step: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _apply_mgu(c: Clause, mgu: Substitution) -> list[Literal]:
    mapping = dict(mgu.bindings)
    return [l.substitute(mapping) for l in c.literals]


def check_derivation(d: Derivation, inputs: Iterable[Clause]) -> CheckResult:
    """Re-derive every step; True only if all of them check out."""
    inputs = list(inputs)
    by_id: dict[int, Step] = {}
    for step in d.steps:
        rule = step.rule
        if step.id in by_id:
            return CheckResult(False, step.id, f"duplicate step id {step.id}")
        if isinstance(rule, Input):
            if not any(_variant_map(c, step.clause) for c in inputs):
                return CheckResult(
                    False, step.id, "input clause not among the given inputs"
                )
        elif isinstance(rule, Resolution):
            pid1, pid2 = rule.parents
            if pid1 not in by_id or pid2 not in by_id:
                return CheckResult(False, step.id, "parent id out of range")
            c1 = by_id[pid1].clause
            c2 = by_id[pid2].clause
            if pid1 == pid2:
                c2 = _prime_copy(c2)
            i, j = rule.positions
            if i >= len(c1.literals) or j >= len(c2.literals):
                return CheckResult(False, step.id, "literal position out of range")
            l1, l2 = c1.literals[i], c2.literals[j]
            if l1.positive == l2.positive or l1.pred != l2.pred:
                return CheckResult(
                    False, step.id, "resolved literals are not complementary"
                )
            mapping = dict(rule.mgu.bindings)
            if l1.substitute(mapping) != l2.substitute(mapping).negate():
                return CheckResult(
                    False, step.id, "recorded substitution does not unify the pair"
                )
            lits = [
                l.substitute(mapping) for k, l in enumerate(c1.literals) if k != i
            ]
            lits += [
                l.substitute(mapping) for k, l in enumerate(c2.literals) if k != j
            ]
            rebuilt = Clause(lits)
            if not _variant_map(rebuilt, step.clause):
                return CheckResult(
                    False, step.id, "recorded clause is not the derived resolvent"
                )
        elif isinstance(rule, Factoring):
            if rule.parent not in by_id:
                return CheckResult(False, step.id, "parent id out of range")
            c = by_id[rule.parent].clause
            i, j = rule.positions
            if i >= len(c.literals) or j >= len(c.literals) or i == j:
                return CheckResult(False, step.id, "literal positions out of range")
            l1, l2 = c.literals[i], c.literals[j]
            if l1.positive != l2.positive or l1.pred != l2.pred:
                return CheckResult(
                    False, step.id, "factored literals have different sign or symbol"
                )
            mapping = dict(rule.mgu.bindings)
            if l1.substitute(mapping) != l2.substitute(mapping):
                return CheckResult(
                    False, step.id, "recorded substitution does not unify the pair"
                )
            rebuilt = Clause(_apply_mgu(c, rule.mgu))
            if not _variant_map(rebuilt, step.clause):
                return CheckResult(
                    False, step.id, "recorded clause is not the derived factor"
                )
        else:
            return CheckResult(False, step.id, f"unknown rule {rule!r}")
        by_id[step.id] = step
    return CheckResult(True)


# ---------------------------------------------------------------------------
# Proof text
# ---------------------------------------------------------------------------

def _rule_str(rule: Rule) -> str:
    if isinstance(rule, Input):
        return f"input {rule.label}"
    if isinstance(rule, Resolution):
        return f"resolution {rule.parents[0]} {rule.parents[1]}"
    return f"factoring {rule.parent}"


def format_derivation(d: Derivation) -> str:
    """One line per step; a refutation ends with the `0. $false` line."""
    lines = []
    for step in d.steps:
        shown = 0 if step.clause.is_empty() else step.id
        lines.append(f"{shown}. {clause_str(step.clause)} [{_rule_str(step.rule)}]")
    return "\n".join(lines) + ("\n" if lines else "")
