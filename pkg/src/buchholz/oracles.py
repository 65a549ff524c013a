"""Brute-force reference implementations.

These are deliberately naive and share no code paths with the fast routines
they check: relations are recomputed from the raw links, orders are evaluated
clause by clause, and searches enumerate every candidate map.
"""

from __future__ import annotations

import itertools
import re

from buchholz.term import D, Sum, Term, Zero

__all__ = [
    "prec_by_clauses", "token_norm", "g_set_scan", "relations",
    "covering_bruteforce", "isomorphic_bruteforce",
]


def prec_by_clauses(a: Term, b: Term) -> bool:
    """Strict order evaluated clause by clause, without the sequence view."""
    if isinstance(a, Zero):
        return not isinstance(b, Zero)
    if isinstance(b, Zero):
        return False
    if isinstance(a, D) and isinstance(b, D):
        return a.index < b.index or (a.index == b.index and prec_by_clauses(a.arg, b.arg))
    if isinstance(a, D) and isinstance(b, Sum):
        return prec_by_clauses(a, b.parts[0]) or a == b.parts[0]
    if isinstance(a, Sum) and isinstance(b, D):
        return prec_by_clauses(a.parts[0], b)
    xs, ys = a.parts, b.parts
    m, n = len(xs), len(ys)
    if m < n and all(xs[i] == ys[i] for i in range(m)):
        return True
    for i in range(min(m, n)):
        if all(xs[j] == ys[j] for j in range(i)) and prec_by_clauses(xs[i], ys[i]):
            return True
    return False


def token_norm(text: str) -> int:
    """Count 0 and D symbols in printed term text."""
    return len(re.findall(r"D(?:\d+|w)|0", text))


def _subterm_paths(a: Term, path=()):
    yield a, path
    if isinstance(a, D):
        yield from _subterm_paths(a.arg, path + (a.index,))
    elif isinstance(a, Sum):
        for p in a.parts:
            yield from _subterm_paths(p, path)


def g_set_scan(u, a: Term) -> set:
    """Arguments of every D_v with v >= u that is not under a D_w with w < u."""
    out = set()
    for t, path in _subterm_paths(a):
        if isinstance(t, D) and t.index >= u and all(w >= u for w in path):
            out.add(t.arg)
    return out


def relations(f):
    """Both orders as explicit sets of pairs, closed from the raw links."""
    le1 = {(x, x) for x in f.nodes}
    le2 = set(le1)
    for x in f.nodes:
        y = f.le1_parent[x]
        while y is not None:
            le1.add((y, x))
            y = f.le1_parent[y]
        y = f.le2_pred[x]
        while y is not None:
            le2.add((y, x))
            y = f.le2_pred[y]
    return le1, le2


def _preserves(h, s, t, rs, rt) -> bool:
    s1, s2 = rs
    t1, t2 = rt
    if any(s.delta[x] > t.delta[h[x]] for x in s.nodes):
        return False
    return (all((h[x], h[y]) in t1 for x, y in s1)
            and all((h[x], h[y]) in t2 for x, y in s2))


def covering_bruteforce(s, t):
    """First covering found among all injections, or None."""
    rs, rt = relations(s), relations(t)
    for image in itertools.permutations(t.nodes, len(s.nodes)):
        h = dict(zip(s.nodes, image))
        if _preserves(h, s, t, rs, rt):
            return h
    return None


def isomorphic_bruteforce(s, t) -> bool:
    if len(s.nodes) != len(t.nodes):
        return False
    rs, rt = relations(s), relations(t)
    for image in itertools.permutations(t.nodes):
        h = dict(zip(s.nodes, image))
        if any(s.delta[x] != t.delta[h[x]] for x in s.nodes):
            continue
        if ({(h[x], h[y]) for x, y in rs[0]} == rt[0]
                and {(h[x], h[y]) for x, y in rs[1]} == rt[1]):
            return True
    return False

