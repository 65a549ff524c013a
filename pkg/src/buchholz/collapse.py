"""Collapsing constructions on monotone double trees and the map from
principal ordinal terms to monotone double trees.

Every construction copies its inputs under component-tagged ids (component
``i`` gets the prefix ``"i."``) and names the new root ``"r"``, so results are
deterministic and inputs never need to be disjoint.
"""

from __future__ import annotations

import functools
from typing import Sequence

from buchholz.forest import DoubleForest, relabel, singleton
from buchholz.ot import is_ot
from buchholz.term import D, OMEGA, Term, Zero, order as term_order, parts, show, subscripts

__all__ = ["coll", "exp", "psi", "rho", "translate", "translate_sum", "CollapseError"]

ROOT = "r"


class CollapseError(ValueError):
    pass


def _adjoin_root(ts: Sequence[DoubleForest], root_delta: int, clip=None, le2_root=None) -> DoubleForest:
    nodes, parent, pred, delta = [ROOT], {ROOT: None}, {ROOT: None}, {ROOT: root_delta}
    for i, t in enumerate(ts):
        c = relabel(t, f"{i}.")
        for x in c.nodes:
            nodes.append(x)
            parent[x] = c.le1_parent[x] if c.le1_parent[x] is not None else ROOT
            pred[x] = c.le2_pred[x]
            if pred[x] is None and le2_root is not None and le2_root(c.delta[x]):
                pred[x] = ROOT
            delta[x] = c.delta[x] if clip is None else min(c.delta[x], clip)
    return DoubleForest(nodes, parent, pred, delta)


def coll(ts: Sequence[DoubleForest]) -> DoubleForest:
    """Add a root one order lower below trees all of order ``u + 1``.

    The new root sits second-order below exactly the nodes labelled ``u + 1``;
    all labels are clipped to ``u``.
    """
    if not ts:
        raise CollapseError("coll needs at least one tree")
    orders = {t.order for t in ts}
    if len(orders) != 1:
        raise CollapseError(f"coll needs trees of equal order, got {sorted(orders)}")
    top = orders.pop()
    if top < 1:
        raise CollapseError("coll needs trees of positive order")
    u = top - 1
    return _adjoin_root(ts, u, clip=u, le2_root=lambda d: d == top)


def exp(u: int, ts: Sequence[DoubleForest]) -> DoubleForest:
    """Add a root labelled ``u`` below trees of order at most ``u``; the root is
    second-order related only to itself."""
    for t in ts:
        if t.order > u:
            raise CollapseError(f"exp_{u} got a tree of order {t.order}")
    return _adjoin_root(ts, u)


def _check_descending(ts):
    orders = [t.order for t in ts]
    if any(x < y for x, y in zip(orders, orders[1:])):
        raise CollapseError(f"orders {orders} are not descending")


def psi(u: int, ts: Sequence[DoubleForest]) -> DoubleForest:
    """Collapse an order-descending sequence of trees down to order ``u``."""
    ts = list(ts)
    if not ts:
        raise CollapseError("psi needs a nonempty sequence")
    _check_descending(ts)
    if ts[-1].order > u:
        i = sum(1 for t in ts if t.order > u + 1)
        head = [psi(u + 1, ts[:i])] if i else []
        return coll(head + ts[i:])
    i = sum(1 for t in ts if t.order > u)
    head = [psi(u, ts[:i])] if i else []
    return exp(u, head + ts[i:])


def rho(fs: Sequence[DoubleForest]) -> DoubleForest:
    """Add a root below everything in both orders.  Labels are dropped."""
    nodes, parent, pred = [ROOT], {ROOT: None}, {ROOT: None}
    for i, f in enumerate(fs):
        c = relabel(f, f"{i}.")
        for x in c.nodes:
            nodes.append(x)
            parent[x] = c.le1_parent[x] if c.le1_parent[x] is not None else ROOT
            pred[x] = c.le2_pred[x] if c.le2_pred[x] is not None else ROOT
    return DoubleForest(nodes, parent, pred)


@functools.lru_cache(maxsize=None)
def _translate(a: D) -> DoubleForest:
    if isinstance(a.arg, Zero):
        return singleton(a.index, ROOT)
    return psi(a.index, [_translate(p) for p in parts(a.arg)])


def _check_finite_ot(a: Term):
    if OMEGA in subscripts(a):
        raise CollapseError(f"{show(a)} has an omega subscript")
    if not is_ot(a):
        raise CollapseError(f"{show(a)} is not an ordinal term")


def translate(a: Term) -> DoubleForest:
    """The monotone double tree of a principal ordinal term with finite subscripts."""
    if not isinstance(a, D):
        raise CollapseError(f"{show(a)} is not principal")
    _check_finite_ot(a)
    return _translate(a)


def translate_sum(a: Term) -> DoubleForest:
    """The double tree of a nonzero order-0 ordinal term: a common root below
    the trees of its parts."""
    if isinstance(a, Zero):
        raise CollapseError("translate_sum is undefined for 0")
    if term_order(a) != 0:
        raise CollapseError(f"{show(a)} has order {term_order(a)}, not 0")
    _check_finite_ot(a)
    return rho([_translate(p) for p in parts(a)])
