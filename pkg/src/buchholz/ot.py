"""Ordinal terms: the sets G_u a, membership in OT and OT(u), u-subterms, and
bounded enumeration."""

from __future__ import annotations

import functools
from typing import Optional

from buchholz.order import lt, sorted_terms
from buchholz.term import D, Index, Sum, Term, ZERO, Zero, make_sum, order, show, subscripts

__all__ = [
    "ResourceLimitExceeded", "g_set", "is_ot", "ot_violation", "in_ot_restricted",
    "u_subterms", "all_terms", "ot_terms_of_norm", "enumerate_ot", "DEFAULT_ENUM_LIMIT",
]

DEFAULT_ENUM_LIMIT = 200_000


class ResourceLimitExceeded(RuntimeError):
    """A configured cap on instances or time was hit."""


@functools.lru_cache(maxsize=None)
def g_set(u: Index, a: Term) -> frozenset:
    if isinstance(a, Zero):
        return frozenset()
    if isinstance(a, Sum):
        return frozenset().union(*(g_set(u, p) for p in a.parts))
    if a.index < u:
        return frozenset()
    return frozenset({a.arg}) | g_set(u, a.arg)


@functools.lru_cache(maxsize=None)
def ot_violation(a: Term) -> Optional[tuple]:
    """``None`` if ``a`` is in OT, else ``(clause, subterm)`` for the first
    failing clause found (innermost first)."""
    if isinstance(a, Zero):
        return None
    if isinstance(a, Sum):
        for p in a.parts:
            bad = ot_violation(p)
            if bad:
                return bad
        for x, y in zip(a.parts, a.parts[1:]):
            if lt(x, y):
                return ("OT2", a)
        return None
    bad = ot_violation(a.arg)
    if bad:
        return bad
    if not all(lt(c, a.arg) for c in g_set(a.index, a.arg)):
        return ("OT3", a)
    return None


def is_ot(a: Term) -> bool:
    return ot_violation(a) is None


def in_ot_restricted(a: Term, u: Index) -> bool:
    """Membership in OT(u): an ordinal term all of whose subscripts are < u."""
    return all(v < u for v in subscripts(a)) and is_ot(a)


def u_subterms(u: Index, a: Term) -> frozenset:
    if isinstance(a, Zero):
        return frozenset({a})
    if isinstance(a, D):
        if a.index < u:
            return frozenset({a})
        return frozenset({a}) | u_subterms(u, a.arg)
    return frozenset({a}).union(*(u_subterms(u, p) for p in a.parts))


@functools.lru_cache(maxsize=None)
def _principals(n: int, k: int) -> tuple:
    if n < 2:
        return ()
    return tuple(D(u, t) for u in range(k + 1) for t in _terms(n - 1, k))


@functools.lru_cache(maxsize=None)
def _sequences(n: int, k: int) -> tuple:
    # nonempty sequences of principal terms with total norm n
    out = list((p,) for p in _principals(n, k))
    for first in range(2, n - 1):
        for p in _principals(first, k):
            for rest in _sequences(n - first, k):
                out.append((p,) + rest)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _terms(n: int, k: int) -> tuple:
    if n == 1:
        return (ZERO,)
    return tuple(make_sum(s) for s in _sequences(n, k))


def ot_terms_of_norm(max_subscript: int, n: int) -> list:
    """Ordinal terms of norm exactly ``n``, in generation order."""
    return [a for a in _terms(n, max_subscript) if is_ot(a)] if n >= 1 else []


def all_terms(max_subscript: int, max_norm: int, limit: int = DEFAULT_ENUM_LIMIT) -> list:
    """Every formal term with finite subscripts <= ``max_subscript`` and norm
    <= ``max_norm``, in order of norm."""
    out = []
    for n in range(1, max_norm + 1):
        out.extend(_terms(n, max_subscript))
        if len(out) > limit:
            raise ResourceLimitExceeded(
                f"more than {limit} terms with subscripts <= {max_subscript} and norm <= {max_norm}")
    return out


def enumerate_ot(max_subscript: int, max_norm: int, order_zero_only: bool = False,
                 limit: int = DEFAULT_ENUM_LIMIT) -> list:
    """All ordinal terms with subscripts <= ``max_subscript`` and norm <=
    ``max_norm``, sorted increasingly."""
    if max_norm < 1:
        raise ValueError("max_norm must be at least 1")
    found = [a for a in all_terms(max_subscript, max_norm, limit) if is_ot(a)]
    if order_zero_only:
        found = [a for a in found if order(a) == 0]
    return sorted_terms(found)


def describe_violation(a: Term) -> str:
    bad = ot_violation(a)
    if bad is None:
        return "OT"
    clause, where = bad
    if clause == "OT2":
        return f"{clause}: parts of {show(where)} are not descending"
    return f"{clause}: some element of G_{where.index}({show(where.arg)}) is not below the argument"
