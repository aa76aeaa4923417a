"""Independent checkers used to certify the prover and its arithmetic.

Neither oracle shares code with the system under test beyond the term
classes: the model oracle evaluates formulas directly over small finite
interpretations, and the arithmetic oracle enumerates orderings instead of
running shortest paths.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from ccgnli.logic import (
    And,
    App,
    Cmp,
    Const,
    D,
    E,
    Eq,
    Exists,
    Forall,
    Iff,
    Imp,
    Not,
    Num,
    Or,
    T,
    V,
    Var,
    unapply,
)
from ccgnli.logic.terms import BOTTOM, TOP
from ccgnli.logic.types import Arrow, unarrow
from ccgnli.prover.background import signature

DEGREE_CHAIN = 5

# --------------------------------------------------------------------------
# finite models


@dataclass
class Model:
    sizes: dict
    interp: dict = field(default_factory=dict)

    def domain(self, sort):
        if sort == D:
            return range(DEGREE_CHAIN)
        return range(self.sizes[sort])


class OutsideFragment(ValueError):
    """The formula uses something the enumerator cannot interpret faithfully."""


def evaluate(t, model: Model, env=None):
    env = env or {}
    if t == TOP:
        return True
    if t == BOTTOM:
        return False
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Num):
        raise OutsideFragment("numeric literal")
    if isinstance(t, Const):
        return model.interp[t.name]
    if isinstance(t, Not):
        return not evaluate(t.body, model, env)
    if isinstance(t, And):
        return evaluate(t.left, model, env) and evaluate(t.right, model, env)
    if isinstance(t, Or):
        return evaluate(t.left, model, env) or evaluate(t.right, model, env)
    if isinstance(t, Imp):
        return (not evaluate(t.left, model, env)) or evaluate(t.right, model, env)
    if isinstance(t, Iff):
        return evaluate(t.left, model, env) == evaluate(t.right, model, env)
    if isinstance(t, (Exists, Forall)):
        test = any if isinstance(t, Exists) else all
        return test(evaluate(t.body, model, {**env, t.var.name: v}) for v in model.domain(t.var.type))
    if isinstance(t, Eq):
        return evaluate(t.left, model, env) == evaluate(t.right, model, env)
    if isinstance(t, Cmp):
        a, b = evaluate(t.left, model, env), evaluate(t.right, model, env)
        return a < b if t.op == "<" else a <= b
    head, args = unapply(t)
    if isinstance(head, Const) and args:
        table = model.interp[head.name]
        return table[tuple(evaluate(a, model, env) for a in args)]
    raise OutsideFragment(f"cannot evaluate {t!r}")


def _monotone_sets(n):
    """Prefixes and suffixes of the degree chain: the scale-closed extensions."""
    sets = {frozenset(range(k)) for k in range(n + 1)} | {frozenset(range(k, n)) for k in range(n + 1)}
    return sorted(sets, key=sorted)


def _options(name, ty, sizes):
    """All interpretations of one symbol, as a list."""
    def dom(s):
        return list(range(DEGREE_CHAIN)) if s == D else list(range(sizes[s]))

    args, res = unarrow(ty)
    if not args:
        return [False, True] if res == T else dom(res)
    points = list(itertools.product(*(dom(a) for a in args)))
    if res == T and len(args) == 2 and args[1] == D and args[0] != D:
        # a degree predicate: one monotone degree set per bearer
        per_bearer = _monotone_sets(DEGREE_CHAIN)
        out = []
        for choice in itertools.product(per_bearer, repeat=len(dom(args[0]))):
            out.append({(b, d): d in choice[b] for b in dom(args[0]) for d in range(DEGREE_CHAIN)})
        return out
    values = [False, True] if res == T else dom(res)
    return [dict(zip(points, combo)) for combo in itertools.product(values, repeat=len(points))]


def model_count(sig, sizes) -> int:
    total = 1
    for name, ty in sig.items():
        if name in ("true", "false"):
            continue
        args, res = unarrow(ty)
        doms = [DEGREE_CHAIN if a == D else sizes[a] for a in args]
        if not args:
            total *= 2 if res == T else (DEGREE_CHAIN if res == D else sizes[res])
        elif res == T and len(args) == 2 and args[1] == D and args[0] != D:
            total *= len(_monotone_sets(DEGREE_CHAIN)) ** doms[0]
        else:
            total *= (2 if res == T else (DEGREE_CHAIN if res == D else sizes[res])) ** math.prod(doms)
    return total


def models(sig, sizes) -> Iterator[Model]:
    names = sorted(n for n in sig if n not in ("true", "false"))
    choices = [_options(n, sig[n], sizes) for n in names]
    for combo in itertools.product(*choices):
        yield Model(dict(sizes), dict(zip(names, combo)))


def _sorts(sig):
    sorts = set()
    for ty in sig.values():
        args, res = unarrow(ty)
        sorts.update(s for s in args + [res] if s in (E, V))
    return sorts


def _size_grid(sorts, max_size):
    sorts = sorted(sorts, key=str)
    for sizes in itertools.product(range(1, max_size + 1), repeat=len(sorts)):
        yield dict(zip(sorts, sizes))


def checkable(formulas, max_size=3, cap=200_000) -> bool:
    """Whether the exhaustive search is affordable and faithful for these formulas."""
    from ccgnli.logic import subterms

    for f in formulas:
        if any(isinstance(s, Num) for s in subterms(f)):
            return False
    sig = signature(formulas)
    sorts = _sorts(sig) | {E}
    return sum(model_count(sig, s) for s in _size_grid(sorts, max_size)) <= cap


def _symbols(f):
    from ccgnli.logic import subterms

    return {s.name for s in subterms(f) if isinstance(s, Const) and s.name not in ("true", "false")}


def countermodel(premises, goal, max_size=3) -> Optional[Model]:
    """A model of every premise falsifying ``goal``, searching domains up to ``max_size``.

    Symbols are assigned one at a time and each formula is tested as soon as
    all of its symbols are fixed, so hopeless partial models are cut early.
    """
    formulas = list(premises) + [goal]
    sig = signature(formulas)
    names = sorted(n for n in sig if n not in ("true", "false"))
    needs = [_symbols(f) for f in formulas]
    # symbols of small formulas first, so checks fire early
    order = []
    for i in sorted(range(len(formulas)), key=lambda i: len(needs[i])):
        order += sorted(needs[i] - set(order))
    order += [n for n in names if n not in order]
    ready = {k: [] for k in range(len(order))}
    for i, need in enumerate(needs):
        k = max((order.index(n) for n in need), default=0)
        ready[k].append(i)
    goal_index = len(formulas) - 1
    sorts = _sorts(sig) | {E}
    for sizes in _size_grid(sorts, max_size):
        model = Model(dict(sizes), {})
        choices = [_options(n, sig[n], sizes) for n in order]

        def search(k):
            if k == len(order):
                return True
            for value in choices[k]:
                model.interp[order[k]] = value
                if all(evaluate(formulas[i], model) != (i == goal_index) for i in ready[k]):
                    if search(k + 1):
                        return True
            del model.interp[order[k]]
            return False

        if not order:
            if all(evaluate(p, model) for p in premises) and not evaluate(goal, model):
                return model
            continue
        if search(0):
            return model
    return None


def valid(premises, goal, max_size=3) -> bool:
    return countermodel(premises, goal, max_size) is None


# --------------------------------------------------------------------------
# random monadic sequents

ENT = ("a", "b")
PREDS = ("P", "Q")
PROPS = ("p", "q")


def _atom(rng, x=None):
    if rng.random() < 0.2:
        return Const(rng.choice(PROPS), T)
    arg = x if x is not None and rng.random() < 0.8 else Const(rng.choice(ENT), E)
    return App(Const(rng.choice(PREDS), Arrow(E, T)), arg)


def random_formula(rng: random.Random, depth: int = 3, x: Optional[Var] = None):
    if depth <= 0 or rng.random() < 0.25:
        return _atom(rng, x)
    k = rng.random()
    if k < 0.2:
        return Not(random_formula(rng, depth - 1, x))
    if k < 0.6:
        cls = rng.choice((And, Or, Imp, Iff))
        return cls(random_formula(rng, depth - 1, x), random_formula(rng, depth - 1, x))
    if x is not None:
        return random_formula(rng, depth - 1, x)
    v = Var("x", E)
    cls = rng.choice((Exists, Forall))
    return cls(v, random_formula(rng, depth - 1, v))


def random_sequent(rng: random.Random, max_premises: int = 3):
    premises = [random_formula(rng) for _ in range(rng.randint(0, max_premises))]
    return premises, random_formula(rng)


def monadic_valid(premises, goal) -> bool:
    """Exact validity for the random monadic fragment (no equality).

    A monadic model is determined up to equivalence by which predicate
    combinations ("types") are inhabited and which type each constant has,
    so one element per inhabited type suffices.
    """
    types = list(itertools.product((False, True), repeat=len(PREDS)))
    for k in range(1, len(types) + 1):
        for inhabited in itertools.combinations(types, k):
            for consts in itertools.product(range(k), repeat=len(ENT)):
                for props in itertools.product((False, True), repeat=len(PROPS)):
                    interp = {c: i for c, i in zip(ENT, consts)}
                    interp.update(zip(PROPS, props))
                    for j, pred in enumerate(PREDS):
                        interp[pred] = {(i,): inhabited[i][j] for i in range(k)}
                    m = Model({E: k}, interp)
                    if all(evaluate(p, m) for p in premises) and not evaluate(goal, m):
                        return False
    return True


# --------------------------------------------------------------------------
# arithmetic: enumerate weak orders of the unknowns, place blocks greedily


def _weak_orders(items):
    """Ordered set partitions of ``items``, as lists of blocks."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for order in _weak_orders(rest):
        for i in range(len(order)):
            yield order[:i] + [order[i] | {first}] + order[i + 1:]
        for i in range(len(order) + 1):
            yield order[:i] + [{first}] + order[i:]


def brute_force_satisfiable(constraints, integral=False) -> bool:
    """Constraints are (op, a, b) with op in <, <=, = and a, b names or ints.

    A rational solution exists iff some weak order of the named unknowns can
    be realized inside the literal bounds; candidate values carry an
    infinitesimal component so strict bounds need no epsilon guess.
    """
    names = sorted({x for _, a, b in constraints for x in (a, b) if isinstance(x, str)})
    lits = [c for c in constraints if all(isinstance(x, int) for x in c[1:])]
    for op, a, b in lits:
        if not {"<": a < b, "<=": a <= b, "=": a == b}[op]:
            return False
    step = 1 if integral else 0
    for order in _weak_orders(names):
        rank = {x: i for i, block in enumerate(order) for x in block}
        ok = True
        lower = [(-math.inf, 0)] * len(order)
        upper = [(math.inf, 0)] * len(order)
        for op, a, b in constraints:
            if isinstance(a, str) and isinstance(b, str):
                ra, rb = rank[a], rank[b]
                if (op == "<" and not ra < rb) or (op == "<=" and not ra <= rb) or (op == "=" and ra != rb):
                    ok = False
                    break
            elif isinstance(a, str):  # a op k : upper bound
                k, r = b, rank[a]
                bound = (k, -1) if op == "<" else (k, 0)
                upper[r] = min(upper[r], bound)
                if op == "=":
                    lower[r] = max(lower[r], (k, 0))
            elif isinstance(b, str):  # k op b : lower bound
                k, r = a, rank[b]
                bound = (k, 1) if op == "<" else (k, 0)
                lower[r] = max(lower[r], bound)
                if op == "=":
                    upper[r] = min(upper[r], (k, 0))
        if not ok:
            continue
        prev = None
        for r in range(len(order)):
            lo = lower[r]
            if integral and lo[0] != -math.inf:
                lo = (lo[0] + (1 if lo[1] > 0 else 0), 0)
            if prev is not None:
                nxt = (prev[0] + step, 0) if integral else (prev[0], prev[1] + 1)
                lo = max(lo, nxt)
            if lo[0] == -math.inf:
                # unbounded below: sit far under the upper bound
                up = upper[r]
                lo = ((up[0] if up[0] != math.inf else 0) - 100, 0)
            up = upper[r]
            if integral and up[0] != math.inf:
                up = (up[0] - (1 if up[1] < 0 else 0), 0)
            if lo > up:
                ok = False
                break
            prev = lo
        if ok:
            return True
    return False


def random_difference_system(rng: random.Random, max_names: int = 6, max_constraints: int = 7):
    names = [f"c{i}" for i in range(rng.randint(1, max_names))]
    out = []
    for _ in range(rng.randint(1, max_constraints)):
        op = rng.choice(("<", "<=", "="))
        kind = rng.random()
        if kind < 0.5 and len(names) > 1:
            a, b = rng.sample(names, 2)
        elif kind < 0.75:
            a, b = rng.choice(names), rng.randint(-2, 2)
        else:
            a, b = rng.randint(-2, 2), rng.choice(names)
        out.append((op, a, b))
    return out


def to_solver_input(system):
    """The same system in the solver's own atom format."""
    def term(x):
        return ("c", x) if isinstance(x, str) else Fraction(x)

    return [(op, term(a), term(b)) for op, a, b in system]
