import functools

import pytest
from hypothesis import given

from buchholz.oracles import _subterm_paths, g_set_scan, prec_by_clauses
from buchholz.order import leq, lt
from buchholz.ot import (
    ResourceLimitExceeded, all_terms, describe_violation, enumerate_ot, g_set, in_ot_restricted,
    is_ot, ot_violation, u_subterms,
)
from buchholz.term import D, OMEGA, Sum, ZERO, order, parse, show

from conftest import terms

P = parse


# -- independent oracles -------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _strings(n, k):
    """Printed terms of norm exactly ``n``, built from the grammar as text."""
    if n == 1:
        return frozenset({"0"})
    return frozenset(_principal_strings(n, k) | _sum_strings(n, k, 2))


@functools.lru_cache(maxsize=None)
def _principal_strings(n, k):
    return frozenset(f"D{u}({s})" for u in range(k + 1) for s in _strings(n - 1, k)) if n > 1 else frozenset()


@functools.lru_cache(maxsize=None)
def _seq_strings(n, k, min_len):
    # comma-joined lists of principal strings with total norm n and length >= min_len
    out = set()
    if min_len <= 1:
        out |= _principal_strings(n, k)
    for first in range(2, n):
        for p in _principal_strings(first, k):
            for rest in _seq_strings(n - first, k, max(1, min_len - 1)):
                out.add(p + "," + rest)
    return frozenset(out)


def _sum_strings(n, k, min_len):
    return {f"({s})" for s in _seq_strings(n, k, min_len)}


def ot_oracle(a):
    for t, _ in _subterm_paths(a):
        if isinstance(t, Sum) and any(prec_by_clauses(x, y) for x, y in zip(t.parts, t.parts[1:])):
            return False
        if isinstance(t, D) and not all(prec_by_clauses(c, t.arg) for c in g_set_scan(t.index, t.arg)):
            return False
    return True


# -- examples ------------------------------------------------------------------

def test_g_set_examples():
    assert g_set(0, ZERO) == frozenset()
    assert g_set(1, P("D0(0)")) == frozenset()
    assert g_set(0, P("D1(D0(0))")) == {P("D0(0)"), ZERO}


def test_is_ot_examples():
    assert is_ot(ZERO)
    assert is_ot(P("D0(D0(0))"))
    assert not is_ot(P("(D0(0),D1(0))"))
    assert ot_violation(P("(D0(0),D1(0))"))[0] == "OT2"


def test_argument_condition_failure():
    # G_1 of D0(D1(0)) is empty
    assert is_ot(P("D1(D0(D1(0)))"))
    # G_0 of D0(D1(0)) contains D1(0), which is above D0(D1(0))
    b = P("D0(D0(D1(0)))")
    assert ot_violation(b) == ("OT3", b)
    assert describe_violation(b).startswith("OT3")
    assert describe_violation(P("D0(0)")) == "OT"


def test_in_ot_restricted_examples():
    assert in_ot_restricted(ZERO, 1)
    assert not in_ot_restricted(P("D0(D1(0))"), 1)
    assert in_ot_restricted(P("D0(D1(0))"), OMEGA)
    assert not in_ot_restricted(P("D0(Dw(0))"), OMEGA)


def test_u_subterm_examples():
    assert u_subterms(0, ZERO) == {ZERO}
    assert u_subterms(1, P("D0(0)")) == {P("D0(0)")}
    assert u_subterms(0, P("D1(D0(0))")) == {P("D1(D0(0))"), P("D0(0)"), ZERO}


def test_enumerate_examples():
    assert enumerate_ot(0, 3) == [ZERO, P("D0(0)"), P("D0(D0(0))")]
    assert enumerate_ot(0, 1) == [ZERO]
    # 0 has order 0, so it stays in the order-0 listing
    assert enumerate_ot(1, 2, order_zero_only=True) == [ZERO, P("D0(0)")]


def test_enumeration_limit():
    with pytest.raises(ResourceLimitExceeded):
        all_terms(2, 8, limit=1000)
    with pytest.raises(ValueError):
        enumerate_ot(1, 0)


@pytest.mark.parametrize("k, n", [(0, 5), (1, 5), (2, 5), (2, 6)])
def test_generator_matches_textual_grammar(k, n):
    expected = {s for m in range(1, n + 1) for s in _strings(m, k)}
    got = [show(a) for a in all_terms(k, n)]
    assert len(got) == len(set(got))
    assert set(got) == expected


@pytest.mark.parametrize("k, n", [(1, 5), (2, 5), (2, 6)])
def test_ot_filter_matches_oracle(k, n):
    expected = [a for a in all_terms(k, n) if ot_oracle(a)]
    assert set(enumerate_ot(k, n)) == set(expected)


# frozen counts (raw terms, ordinal terms, principal ordinal terms), produced by
# the textual grammar generator and the clause-level membership oracle above
@pytest.mark.parametrize("k, n, raw, ot, principal", [
    (1, 4, 19, 17, 13), (2, 5, 211, 144, 110), (2, 6, 967, 516, 358),
])
def test_frozen_counts(k, n, raw, ot, principal):
    assert sum(len(_strings(m, k)) for m in range(1, n + 1)) == raw
    xs = enumerate_ot(k, n)
    assert len(xs) == ot
    assert sum(isinstance(a, D) for a in xs) == principal


@given(terms)
def test_g_set_matches_scan(a):
    for u in (0, 1, 2, 3, OMEGA):
        assert g_set(u, a) == g_set_scan(u, a)


@given(terms)
def test_is_ot_matches_oracle(a):
    assert is_ot(a) == ot_oracle(a)


@given(terms)
def test_g_set_elements_are_arguments_of_u_subterms(a):
    for u in (0, 1, 2):
        args = {t.arg for t in u_subterms(u, a) if isinstance(t, D) and t.index >= u}
        assert g_set(u, a) == args


@given(terms)
def test_u_subterm_bound(a):
    if isinstance(a, D) and is_ot(a):
        for b in u_subterms(a.index, a):
            if order(b) == a.index:
                assert leq(b, a)


@given(terms)
def test_ot_closed_under_subterms(a):
    if is_ot(a):
        for t, _ in _subterm_paths(a):
            assert is_ot(t)
