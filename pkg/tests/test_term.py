import pickle

import pytest
from hypothesis import given

from buchholz.oracles import token_norm
from buchholz.term import (
    D, MAX_SUBSCRIPT, OMEGA, ParseError, Sum, ZERO, Zero, make_sum, max_subscript, norm, order,
    parse, parts, show, subscripts,
)

from conftest import terms


def test_parse_examples():
    assert parse("0") == Zero()
    assert parse("D0(D1(0))") == D(0, D(1, ZERO))
    assert parse("(D0(0),D1(0))") == Sum((D(0, ZERO), D(1, ZERO)))


def test_show_examples():
    assert show(ZERO) == "0"
    assert show(D(OMEGA, ZERO)) == "Dw(0)"
    assert show(Sum((D(0, ZERO), D(0, ZERO)))) == "(D0(0),D0(0))"


def test_order_examples():
    assert order(ZERO) == 0
    assert order(D(3, ZERO)) == 3
    assert order(Sum((D(2, ZERO), D(1, ZERO)))) == 2


def test_norm_examples():
    assert norm(parse("D0(D2(0))")) == 3
    assert norm(ZERO) == 1
    assert norm(parse("(D0(0),D0(D1(0)))")) == 5


def test_whitespace_is_ignored_between_tokens():
    assert parse(" ( D0( 0 ) , D1(0) ) ") == parse("(D0(0),D1(0))")


@pytest.mark.parametrize("text, pos", [
    ("", 0), ("D", 1), ("D0(", 3), ("(D0(0))", 0), ("D0(0))", 5), ("Dx(0)", 1), ("1", 0),
    ("(0,D0(0))", 1),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos


def test_subscript_overflow():
    assert parse(f"D{MAX_SUBSCRIPT}(0)").index == MAX_SUBSCRIPT
    with pytest.raises(ParseError, match="exceeds"):
        parse(f"D{MAX_SUBSCRIPT + 1}(0)")


def test_singleton_sequence_is_the_principal_term():
    p = D(0, ZERO)
    assert make_sum([p]) is p
    assert make_sum([]) == ZERO
    with pytest.raises(ValueError):
        Sum((p,))
    with pytest.raises(TypeError):
        Sum((p, ZERO))


def test_invalid_subscripts_rejected():
    for bad in (-1, 1.5, "1", True):
        with pytest.raises((TypeError, ValueError)):
            D(bad, ZERO)


def test_omega_above_every_natural():
    assert all(n < OMEGA for n in (0, 1, 10**9))
    assert OMEGA > 5 and not OMEGA < 5 and OMEGA == OMEGA
    assert pickle.loads(pickle.dumps(OMEGA)) is OMEGA


def test_subscript_helpers():
    a = parse("(D2(D0(0)),D1(Dw(0)))")
    assert subscripts(a) == {0, 1, 2, OMEGA}
    assert max_subscript(a) is OMEGA
    assert max_subscript(ZERO) is None
    assert parts(a) == a.parts and parts(ZERO) == ()


@given(terms)
def test_print_parse_roundtrip(a):
    assert parse(show(a)) == a


@given(terms)
def test_norm_matches_token_count(a):
    assert norm(a) == token_norm(show(a))


@given(terms)
def test_sums_never_nest_or_degenerate(a):
    stack = [a]
    while stack:
        t = stack.pop()
        if isinstance(t, Sum):
            assert len(t.parts) >= 2 and all(isinstance(p, D) for p in t.parts)
            stack.extend(t.parts)
        elif isinstance(t, D):
            stack.append(t.arg)
