"""Ground analytic tableau with equality and degree arithmetic.

Formulas are put in negation normal form. Conjunctions and existentials are
expanded eagerly (Skolem constants for existentials), disjunctions are kept
pending and simplified against the branch, and universals are instantiated
in rounds over the ground terms of the branch. A branch closes on
complementary literals modulo congruence closure, on a violated
disequality, or when its degree comparisons have no rational model.

Trace lines have the form ``<step> <branch> <rule> <text>`` separated by
tabs, where rule is one of ``init``, ``alpha``, ``delta``, ``split``,
``gamma``, ``close`` or ``open``. Branch ids are dotted paths from ``0``.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ..logic.ops import UnitMismatch
from .arith import arith_satisfiable
from .formula import FALSE, TRUE, ground_terms, is_literal, negate, nnf, show, show_term, subst, term_sort


class Status(str, Enum):
    PROVED = "Proved"
    SATURATED = "Saturated"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class Budget:
    max_steps: int = 10_000
    max_seconds: float = 10.0
    max_rounds: int = 5  # instantiation rounds per branch


@dataclass
class ProofTask:
    axioms: list
    premises: list
    goal: object
    budget: Budget = field(default_factory=Budget)


@dataclass
class ProofResult:
    status: Status
    trace: list[str]
    steps: int = 0
    branches: int = 0
    arith_checks: int = 0

    @property
    def proved(self) -> bool:
        return self.status == Status.PROVED


class _OutOfBudget(Exception):
    pass


# --------------------------------------------------------------------------
# congruence closure

class _Classes:
    """Equivalence classes of ground terms under equalities and congruence."""

    def __init__(self, terms, eqs):
        self.parent = {}
        for t in terms:
            self._register(t)
        for a, b in eqs:
            self._register(a)
            self._register(b)
            self._union(a, b)
        self._congruence()
        self.rep = {}
        for t in self.parent:
            r = self.find(t)
            cur = self.rep.get(r)
            if cur is None or _rank(t) < _rank(cur):
                self.rep[r] = t
        self.conflict = self._numeral_conflict()

    def _register(self, t):
        if t in self.parent:
            return
        self.parent[t] = t
        if t[0] == "f":
            for a in t[2]:
                self._register(a)

    def find(self, t):
        p = self.parent
        while p[t] != t:
            p[t] = p[p[t]]
            t = p[t]
        return t

    def _union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def _congruence(self):
        changed = True
        apps = [t for t in self.parent if t[0] == "f"]
        while changed:
            changed = False
            table = {}
            for t in apps:
                key = (t[1], tuple(self.find(a) for a in t[2]))
                other = table.setdefault(key, t)
                if self.find(other) != self.find(t):
                    self._union(other, t)
                    changed = True

    def _numeral_conflict(self):
        seen = {}
        for t in self.parent:
            if t[0] == "n":
                r = self.find(t)
                if r in seen and seen[r][1] != t[1]:
                    return (seen[r], t)
                seen.setdefault(r, t)
        return None

    def canon(self, t):
        if t in self.parent:
            return self.rep[self.find(t)]
        if t[0] == "f":
            args = tuple(self.canon(a) for a in t[2])
            for u in self.parent:
                if u[0] == "f" and u[1] == t[1] and tuple(self.canon(a) for a in u[2]) == args:
                    return self.rep[self.find(u)]
            return ("f", t[1], args, t[3])
        return t

    def same(self, a, b) -> bool:
        return self.canon(a) == self.canon(b)


def _rank(t):
    order = {"n": 0, "c": 1, "f": 2}
    return (order[t[0]], len(str(t)), str(t))


# --------------------------------------------------------------------------
# branches

class _Branch:
    def __init__(self):
        self.path = "0"
        self.pos: list = []
        self.neg: list = []
        self.eqs: list = []
        self.neqs: list = []
        self.ariths: list = []
        self.pending: list = []
        self.universals: list = []
        self.done: set = set()
        self.terms: set = set()
        self.rounds = 0
        self._cc: Optional[_Classes] = None
        self._canon_cache = None

    def copy(self, suffix) -> "_Branch":
        b = _Branch.__new__(_Branch)
        b.path = f"{self.path}.{suffix}"
        for name in ("pos", "neg", "eqs", "neqs", "ariths", "pending", "universals"):
            setattr(b, name, list(getattr(self, name)))
        b.done = set(self.done)
        b.terms = set(self.terms)
        b.rounds = self.rounds
        b._cc = self._cc
        b._canon_cache = self._canon_cache
        return b

    # derived views, rebuilt lazily
    def cc(self) -> _Classes:
        if self._cc is None:
            self._cc = _Classes(self.terms, self.eqs)
            self._canon_cache = None
        return self._cc

    def canon_atoms(self):
        if self._canon_cache is None:
            cc = self.cc()
            pos = {_canon_atom(cc, a) for a in self.pos}
            neg = {_canon_atom(cc, a) for a in self.neg}
            neqs = {_pair(cc.canon(a), cc.canon(b)) for a, b in self.neqs}
            ariths = {(op, cc.canon(a), cc.canon(b)) for op, a, b in self.ariths}
            self._canon_cache = (pos, neg, neqs, ariths)
        return self._canon_cache

    def invalidate(self):
        self._cc = None
        self._canon_cache = None


def _canon_atom(cc, atom):
    return (atom[1], tuple(cc.canon(a) for a in atom[2]))


def _pair(a, b):
    return (a, b) if str(a) <= str(b) else (b, a)


class _Prover:
    def __init__(self, task: ProofTask):
        self.task = task
        self.budget = task.budget
        self.trace: list[str] = []
        self.steps = 0
        self.branches = 0
        self.arith_checks = 0
        self.skolems = 0
        self.start = time.monotonic()
        self.numerals: set = set()

    # bookkeeping
    def log(self, branch, rule, text):
        self.trace.append(f"{self.steps}\t{branch.path}\t{rule}\t{text}")

    def tick(self):
        self.steps += 1
        if self.steps > self.budget.max_steps:
            raise _OutOfBudget()
        if self.steps % 64 == 0 and time.monotonic() - self.start > self.budget.max_seconds:
            raise _OutOfBudget()

    # arithmetic
    def integral_terms(self, branch):
        cc = branch.cc()
        out = set()
        for atom in branch.pos + branch.neg:
            if atom[1] == "many" and len(atom[2]) == 2:
                out.add(cc.canon(atom[2][1]))
        return out

    def arith_ok(self, branch, extra=None) -> bool:
        cc = branch.cc()
        atoms = [(op, cc.canon(a), cc.canon(b)) for op, a, b in branch.ariths]
        if extra is not None:
            atoms.append((extra[0], cc.canon(extra[1]), cc.canon(extra[2])))
        if not atoms:
            return True
        self.arith_checks += 1
        try:
            return arith_satisfiable(atoms, self.integral_terms(branch))
        except UnitMismatch:
            return True  # incomparable scales never close a branch

    # literal status
    def closed_if_added(self, branch, lit, arithmetic=True) -> bool:
        tag = lit[0]
        if tag == "false":
            return True
        if tag == "true":
            return False
        cc = branch.cc()
        pos, neg, neqs, _ = branch.canon_atoms()
        if tag == "atom":
            return _canon_atom(cc, lit) in neg
        if tag == "not" and lit[1][0] == "atom":
            return _canon_atom(cc, lit[1]) in pos
        if tag == "eq":
            a, b = cc.canon(lit[1]), cc.canon(lit[2])
            if a[0] == "n" and b[0] == "n" and a[1] != b[1]:
                return True
            return _pair(a, b) in neqs
        if tag == "not":
            return cc.same(lit[1][1], lit[1][2])
        if not arithmetic:
            return False
        return not self.arith_ok(branch, lit)

    def satisfied(self, branch, lit) -> bool:
        tag = lit[0]
        if tag == "true":
            return True
        if tag == "false":
            return False
        cc = branch.cc()
        pos, neg, neqs, ariths = branch.canon_atoms()
        if tag == "atom":
            return _canon_atom(cc, lit) in pos
        if tag == "not" and lit[1][0] == "atom":
            return _canon_atom(cc, lit[1]) in neg
        if tag == "eq":
            return cc.same(lit[1], lit[2])
        if tag == "not":
            a, b = cc.canon(lit[1][1]), cc.canon(lit[1][2])
            if a[0] == "n" and b[0] == "n" and a[1] != b[1]:
                return True
            return _pair(a, b) in neqs
        a, b = cc.canon(lit[1]), cc.canon(lit[2])
        if a[0] == "n" and b[0] == "n" and (a[2] == b[2] or None in (a[2], b[2])):
            return a[1] < b[1] if tag == "lt" else a[1] <= b[1]
        return (tag, a, b) in ariths

    # adding literals; returns a closure reason or None
    def add_literal(self, branch, lit) -> Optional[str]:
        tag = lit[0]
        if tag == "true":
            return None
        if tag == "false":
            return "false"
        new_terms = ground_terms(lit) - branch.terms
        if new_terms:
            branch.terms |= new_terms
            branch.invalidate()
        if self.closed_if_added(branch, lit, arithmetic=False):
            return f"complement of {show(lit)}"
        if tag == "atom":
            branch.pos.append(lit)
            branch._canon_cache = None
        elif tag == "not" and lit[1][0] == "atom":
            branch.neg.append(lit[1])
            branch._canon_cache = None
        elif tag == "eq":
            branch.eqs.append((lit[1], lit[2]))
            branch.invalidate()
            return self.check_all(branch)
        elif tag == "not":
            branch.neqs.append((lit[1][1], lit[1][2]))
            branch._canon_cache = None
        else:
            branch.ariths.append((tag, lit[1], lit[2]))
            branch._canon_cache = None
            if not self.arith_ok(branch):
                return f"arithmetic after {show(lit)}"
            return None
        atom = lit if tag == "atom" else lit[1]
        if atom[0] == "atom" and atom[1] == "many" and branch.ariths and not self.arith_ok(branch):
            return "arithmetic over counts"
        return None

    def check_all(self, branch) -> Optional[str]:
        cc = branch.cc()
        if cc.conflict:
            a, b = cc.conflict
            return f"distinct numerals {show_term(a)} = {show_term(b)}"
        pos, neg, neqs, _ = branch.canon_atoms()
        clash = pos & neg
        if clash:
            return f"complementary {sorted(clash, key=str)[0][0]}"
        for a, b in branch.neqs:
            if cc.same(a, b):
                return f"{show_term(a)} != {show_term(b)}"
        if not self.arith_ok(branch):
            return "arithmetic"
        return None

    # expansion
    def expand(self, branch, agenda):
        """Run one branch until it closes, splits or saturates."""
        while True:
            while agenda:
                f = agenda.pop(0)
                self.tick()
                tag = f[0]
                if is_literal(f):
                    reason = self.add_literal(branch, f)
                    if reason:
                        self.log(branch, "close", reason)
                        return "closed", None
                elif tag == "and":
                    agenda[:0] = list(f[1])
                    self.log(branch, "alpha", show(f))
                elif tag == "or":
                    branch.pending.append(f[1])
                elif tag == "ex":
                    env = {}
                    for v in f[1]:
                        self.skolems += 1
                        env[v] = ("c", f"{v[1]}_{self.skolems}", v[2])
                    body = subst(f[2], env)
                    self.log(branch, "delta", f"{show(f)} => {', '.join(c[1] for c in env.values())}")
                    agenda.append(body)
                elif tag == "all":
                    branch.universals.append(f)
            # simplify pending disjunctions against the branch
            remaining = []
            for parts in branch.pending:
                self.tick()
                live, sat = [], False
                for p in parts:
                    if is_literal(p):
                        if self.satisfied(branch, p):
                            sat = True
                            break
                        if self.closed_if_added(branch, p):
                            continue
                    live.append(p)
                if sat:
                    continue
                if not live:
                    self.log(branch, "close", f"all disjuncts refuted in {show(('or', parts))}")
                    return "closed", None
                if len(live) == 1:
                    agenda.append(live[0])
                else:
                    remaining.append(tuple(live))
            branch.pending = remaining
            if agenda:
                continue
            if branch.pending:
                best = min(range(len(branch.pending)), key=lambda i: len(branch.pending[i]))
                parts = branch.pending.pop(best)
                children = []
                for i, p in enumerate(parts):
                    child = branch.copy(i)
                    child_agenda = [p] + [negate(q) for q in parts[:i] if is_literal(q)]
                    children.append((child, child_agenda))
                self.log(branch, "split", show(("or", parts)))
                return "split", children
            if branch.rounds >= self.budget.max_rounds:
                return "open", None
            branch.rounds += 1
            new = self.instantiate(branch)
            if not new:
                return "open", None
            agenda.extend(new)

    def domain(self, branch, sort):
        cc = branch.cc()
        reps = {cc.canon(t) for t in branch.terms if term_sort(t) == sort}
        if sort == "d":
            reps |= {cc.canon(n) for n in self.numerals}
        if not reps:
            reps = {("c", f"any_{sort}", sort)}
            branch.terms |= reps
            branch.invalidate()
        return sorted(reps, key=_rank)

    def instantiate(self, branch):
        out, skipped = [], []
        for ui, u in enumerate(branch.universals):
            variables, body = u[1], u[2]
            domains = [self.domain(branch, v[2]) for v in variables]
            for combo in itertools.product(*domains):
                key = (ui, combo)
                if key in branch.done:
                    continue
                self.tick()
                inst = subst(body, dict(zip(variables, combo)))
                verdict = self.relevance(branch, inst)
                if verdict == "skip":
                    skipped.append((key, inst, u, combo))
                    continue
                branch.done.add(key)
                if verdict == "keep":
                    out.append(inst)
                    self.log(branch, "gamma", f"{show(u)} / {', '.join(show_term(c) for c in combo)}")
        if not out:
            # nothing looked relevant: fall back to every pending instance
            for key, inst, u, combo in skipped:
                branch.done.add(key)
                out.append(inst)
                self.log(branch, "gamma", f"{show(u)} / {', '.join(show_term(c) for c in combo)}")
        return out

    def relevance(self, branch, inst):
        """'keep', 'useless' (satisfied) or 'skip' (unconnected for now)."""
        if is_literal(inst):
            return "useless" if self.satisfied(branch, inst) else "keep"
        if inst[0] != "or":
            return "keep"
        lits = [p for p in inst[1] if is_literal(p)]
        if any(self.satisfied(branch, p) for p in lits):
            return "useless"
        plain = [p for p in lits if p[0] not in ("lt", "le")]
        if not plain:
            return "keep" if len(lits) == len(inst[1]) else "skip"
        if any(self.closed_if_added(branch, p, arithmetic=False) for p in plain):
            return "keep"
        return "skip"

    def run(self) -> ProofResult:
        formulas = [nnf(a) for a in self.task.axioms] + [nnf(p) for p in self.task.premises]
        formulas.append(nnf(self.task.goal, positive=False))
        for f in formulas:
            self.numerals |= {t for t in ground_terms(f) if t[0] == "n"}
        root = _Branch()
        for f in formulas:
            self.trace.append(f"0\t0\tinit\t{show(f)}")
        stack = [(root, list(formulas))]
        try:
            while stack:
                branch, agenda = stack.pop()
                self.branches += 1
                outcome, children = self.expand(branch, agenda)
                if outcome == "open":
                    self.log(branch, "open", "saturated")
                    return self._result(Status.SATURATED)
                if outcome == "split":
                    stack.extend(reversed(children))
        except _OutOfBudget:
            return self._result(Status.BUDGET_EXHAUSTED)
        return self._result(Status.PROVED)

    def _result(self, status):
        return ProofResult(status, self.trace, self.steps, self.branches, self.arith_checks)


def prove(task: ProofTask) -> ProofResult:
    """Refute axioms + premises + negated goal; deterministic for a fixed task."""
    return _Prover(task).run()


__all__ = ["Status", "Budget", "ProofTask", "ProofResult", "prove"]
