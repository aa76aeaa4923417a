"""Satisfiability of difference constraints over rational degrees.

Constraints ``a < b``, ``a <= b`` and ``a = b`` relate degree constants and
rational literals. Each becomes an edge of a constraint graph whose weights
are pairs ``(bound, strict)`` ordered lexicographically; the set is
satisfiable iff the graph has no negative cycle. Literals are tied to a
zero node. Terms declared integral (counting degrees) get their bounds
rounded until a fixpoint, which keeps the test exact for mixed systems.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from ..logic import Cmp, Eq, Num
from ..logic.ops import UnitMismatch
from .formula import convert_term

ZERO = ("zero",)
_INF = None


def _is_num(t) -> bool:
    return isinstance(t, tuple) and t and t[0] == "n"


def _normalize(constraint):
    """Accept prover tuples or core-logic Cmp/Eq terms."""
    if isinstance(constraint, Cmp):
        op = "lt" if constraint.op == "<" else "le"
        return op, convert_term(constraint.left), convert_term(constraint.right)
    if isinstance(constraint, Eq):
        return "eq", convert_term(constraint.left), convert_term(constraint.right)
    op, a, b = constraint
    op = {"<": "lt", "<=": "le", "=": "eq"}.get(op, op)
    if isinstance(a, Num):
        a = ("n", a.value, a.unit)
    if isinstance(b, Num):
        b = ("n", b.value, b.unit)
    if isinstance(a, (int, Fraction)):
        a = ("n", Fraction(a), None)
    if isinstance(b, (int, Fraction)):
        b = ("n", Fraction(b), None)
    return op, a, b


def _check_units(atoms) -> None:
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, a, b in atoms:
        parent[find(a)] = find(b)
    units: dict = {}
    for node in list(parent):
        if _is_num(node) and node[2] is not None:
            root = find(node)
            if units.setdefault(root, node[2]) != node[2]:
                raise UnitMismatch(f"cannot compare {units[root]} with {node[2]}")


def _add(w1, w2):
    return (w1[0] + w2[0], max(-1, w1[1] + w2[1]))


def arith_satisfiable(constraints: Iterable, integral: Iterable = ()) -> bool:
    """True iff the conjunction of ``constraints`` has a rational model.

    Terms in ``integral`` must take integer values.
    """
    atoms = [_normalize(c) for c in constraints]
    _check_units(atoms)
    nodes = [ZERO]
    index = {ZERO: 0}

    def node(t):
        if t not in index:
            index[t] = len(nodes)
            nodes.append(t)
        return index[t]

    edges = []  # (u, v, w) meaning v - u <= w
    for op, a, b in atoms:
        i, j = node(a), node(b)
        if op == "lt":
            edges.append((j, i, (Fraction(0), -1)))
        elif op == "le":
            edges.append((j, i, (Fraction(0), 0)))
        elif op == "eq":
            edges.append((j, i, (Fraction(0), 0)))
            edges.append((i, j, (Fraction(0), 0)))
        else:
            raise ValueError(f"unknown comparison {op!r}")
    for t in list(index):
        if _is_num(t):
            k = index[t]
            edges.append((0, k, (t[1], 0)))
            edges.append((k, 0, (-t[1], 0)))
    integral = set(integral)
    ints = [k for k, t in enumerate(nodes)
            if t == ZERO or t in integral or (_is_num(t) and t[1].denominator == 1)]
    n = len(nodes)
    dist = [[_INF] * n for _ in range(n)]
    for k in range(n):
        dist[k][k] = (Fraction(0), 0)
    for u, v, w in edges:
        if dist[u][v] is _INF or w < dist[u][v]:
            dist[u][v] = w
    while True:
        for k in range(n):
            dk = dist[k]
            for i in range(n):
                dik = dist[i][k]
                if dik is _INF:
                    continue
                di = dist[i]
                for j in range(n):
                    if dk[j] is _INF:
                        continue
                    w = _add(dik, dk[j])
                    if di[j] is _INF or w < di[j]:
                        di[j] = w
        if any(dist[k][k] < (0, 0) for k in range(n)):
            return False
        changed = False
        for i in ints:
            for j in ints:
                w = dist[i][j]
                if i == j or w is _INF:
                    continue
                bound = math.floor(w[0]) if w[1] == 0 else math.ceil(w[0]) - 1
                tight = (Fraction(bound), 0)
                if tight < w:
                    dist[i][j] = tight
                    changed = True
        if not changed:
            return True


__all__ = ["arith_satisfiable", "UnitMismatch"]
