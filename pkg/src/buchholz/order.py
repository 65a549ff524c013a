"""The linear ordering of formal terms.

Principal terms compare by subscript and then by argument; every other term is
read as its sequence of principal parts and compared lexicographically, a
proper prefix being smaller.  This is the clause-by-clause definition with
0 as the empty sequence and ``D_u a`` as the one-element sequence.
"""

from __future__ import annotations

import enum
import functools

from buchholz.term import D, Term, parts

__all__ = ["Comparison", "compare", "leq", "lt", "sort_key", "sorted_terms"]


class Comparison(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    def __str__(self):
        return self.name


def _cmp_principal(a: D, b: D) -> int:
    if a.index != b.index:
        return -1 if a.index < b.index else 1
    return _cmp(a.arg, b.arg)


@functools.lru_cache(maxsize=1 << 18)
def _cmp(a: Term, b: Term) -> int:
    if a is b:
        return 0
    xs, ys = parts(a), parts(b)
    for x, y in zip(xs, ys):
        c = _cmp_principal(x, y)
        if c:
            return c
    return (len(xs) > len(ys)) - (len(xs) < len(ys))


def compare(a: Term, b: Term) -> Comparison:
    return Comparison(_cmp(a, b))


def lt(a: Term, b: Term) -> bool:
    return _cmp(a, b) < 0


def leq(a: Term, b: Term) -> bool:
    return _cmp(a, b) <= 0


sort_key = functools.cmp_to_key(_cmp)


def sorted_terms(terms, reverse: bool = False) -> list:
    return sorted(terms, key=sort_key, reverse=reverse)
