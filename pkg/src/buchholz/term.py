"""Formal terms built from 0, the symbols D_u and finite sums of principal terms.

A term is one of

* ``Zero()``            the symbol 0,
* ``D(u, a)``           a principal term, ``u`` a natural number or ``OMEGA``,
* ``Sum((p0, ..., pn))`` a sequence of at least two principal terms.

A one-element sequence is always the principal term itself, so every term has
exactly one representation and equality is structural.  Use :func:`make_sum`
to build sequences of arbitrary length.

Text syntax::

    term      := "0" | principal | "(" principal ("," principal)+ ")"
    principal := "D" idx "(" term ")"
    idx       := digits | "w"
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

__all__ = [
    "OMEGA", "Index", "Zero", "D", "Sum", "Term", "ZERO", "ParseError",
    "make_sum", "parts", "order", "norm", "subscripts", "max_subscript",
    "is_principal", "parse", "show", "MAX_SUBSCRIPT",
]

#: Largest finite subscript the parser accepts.
MAX_SUBSCRIPT = 10**6


@functools.total_ordering
class _Omega:
    """The top subscript: larger than every natural number."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("omega")

    def __repr__(self):
        return "OMEGA"

    def __str__(self):
        return "w"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()
Index = Union[int, _Omega]


@dataclass(frozen=True, slots=True)
class Zero:
    def __str__(self):
        return "0"


@dataclass(frozen=True, slots=True)
class D:
    index: Index
    arg: "Term"

    def __post_init__(self):
        if not (self.index is OMEGA or (isinstance(self.index, int) and not isinstance(self.index, bool)
                                            and self.index >= 0)):
            raise ValueError(f"bad subscript {self.index!r}")
        if not isinstance(self.arg, (Zero, D, Sum)):
            raise TypeError(f"argument of D must be a term, got {type(self.arg).__name__}")

    def __str__(self):
        return show(self)


@dataclass(frozen=True, slots=True)
class Sum:
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("a sum needs at least two parts; use make_sum")
        if not all(isinstance(p, D) for p in self.parts):
            raise TypeError("sum parts must be principal terms")

    def __str__(self):
        return show(self)


Term = Union[Zero, D, Sum]
ZERO = Zero()


def make_sum(items: Iterable[D]) -> Term:
    """The term identified with the sequence ``items`` (0 for the empty one)."""
    items = tuple(items)
    if not items:
        return ZERO
    if len(items) == 1:
        if not isinstance(items[0], D):
            raise TypeError("sequence items must be principal terms")
        return items[0]
    return Sum(items)


def parts(a: Term) -> tuple:
    """The sequence of principal terms identified with ``a``."""
    if isinstance(a, Zero):
        return ()
    if isinstance(a, D):
        return (a,)
    return a.parts


def is_principal(a: Term) -> bool:
    return isinstance(a, D)


def order(a: Term) -> Index:
    if isinstance(a, Zero):
        return 0
    if isinstance(a, D):
        return a.index
    return a.parts[0].index


@functools.lru_cache(maxsize=None)
def norm(a: Term) -> int:
    """Number of 0 and D symbols in ``a``."""
    if isinstance(a, Zero):
        return 1
    if isinstance(a, D):
        return 1 + norm(a.arg)
    return sum(norm(p) for p in a.parts)


def _walk(a: Term) -> Iterator[Term]:
    stack = [a]
    while stack:
        t = stack.pop()
        yield t
        if isinstance(t, D):
            stack.append(t.arg)
        elif isinstance(t, Sum):
            stack.extend(t.parts)


def subscripts(a: Term) -> set:
    return {t.index for t in _walk(a) if isinstance(t, D)}


def max_subscript(a: Term):
    """Largest subscript occurring in ``a``, or None for 0."""
    subs = subscripts(a)
    return max(subs) if subs else None


def _show_index(u: Index) -> str:
    return "w" if u is OMEGA else str(u)


def show(a: Term) -> str:
    """Canonical text of ``a`` (no whitespace)."""
    if isinstance(a, Zero):
        return "0"
    if isinstance(a, D):
        return f"D{_show_index(a.index)}({show(a.arg)})"
    return "(" + ",".join(show(p) for p in a.parts) + ")"


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def term(self) -> Term:
        ch = self.peek()
        if ch == "0":
            self.pos += 1
            return ZERO
        if ch == "D":
            return self.principal()
        if ch == "(":
            start = self.pos
            self.pos += 1
            items = [self.principal()]
            while self.peek() == ",":
                self.pos += 1
                items.append(self.principal())
            self.expect(")")
            if len(items) < 2:
                raise ParseError("a parenthesised sum needs at least two parts", start)
            return Sum(tuple(items))
        found = repr(ch) if ch else "end of input"
        raise ParseError(f"expected a term, found {found}", self.pos)

    def principal(self) -> D:
        self.expect("D")
        index = self.index()
        self.expect("(")
        arg = self.term()
        self.expect(")")
        return D(index, arg)

    def index(self) -> Index:
        # no whitespace allowed between D and its subscript
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "w":
            self.pos += 1
            return OMEGA
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits:
            raise ParseError("expected a subscript (digits or 'w')", start)
        value = int(digits)
        if value > MAX_SUBSCRIPT:
            raise ParseError(f"subscript {value} exceeds {MAX_SUBSCRIPT}", start)
        return value


def parse(text: str) -> Term:
    p = _Parser(text)
    result = p.term()
    if p.peek():
        raise ParseError(f"unexpected trailing input {p.peek()!r}", p.pos)
    return result
