"""Parsing, printing, and elaboration of the surface language."""

import pytest
from hypothesis import given, settings, strategies as st

from gweng.frontend import (
    Elaborator,
    Node,
    SyntaxProblem,
    TypingProblem,
    elaborate,
    parse,
    print_judgment,
)

ROUND_TRIP_CASES = [
    "|- ctx",
    "x : N, y : Bool |- ctx",
    "|- Pi (x : N) Id N x x type",
    "|- Sigma (x : Bool) N type",
    "x : N |- x : N",
    "|- lam (x : N) x : Pi (x : N) N",
    "|- pair(0, tt) : Sigma (x : N) Bool",
    "p : Sigma (x : N) N |- fst p : N",
    "p : Sigma (x : N) N |- snd p : N",
    "x : N |- refl x : Id N x x",
    "x : N, y : N, p : Id N x y |- rid(a b q. N, z. z, p) : N",
    "|- star : Unit",
    "f : Pi (x : N) N |- f 2 : N",
]


@pytest.mark.parametrize("src", ROUND_TRIP_CASES)
def test_parse_print_roundtrip(src):
    j = parse(src)
    assert parse(print_judgment(j)) == j


def _types(depth):
    base = st.sampled_from(
        [Node("N"), Node("Unit"), Node("Bool"), Node("Empty")]
    )
    if depth == 0:
        return base
    sub = _types(depth - 1)
    return st.one_of(
        base,
        st.tuples(st.sampled_from(["Pi", "Sigma"]), sub, sub).map(
            lambda t: Node(t[0], t[1], t[2])
        ),
    )


@given(_types(2))
@settings(max_examples=40, deadline=None)
def test_printed_types_reparse(ty):
    j = Node("JTy", (), ty)
    assert parse(print_judgment(j)) == j


def test_unbound_variable_rejected():
    with pytest.raises(SyntaxProblem):
        parse("|- y : N")


def test_garbage_rejected():
    with pytest.raises(SyntaxProblem):
        parse("|- lam lam : N")
    with pytest.raises(SyntaxProblem):
        parse("x : N |-")


@pytest.fixture(scope="module")
def el():
    return Elaborator(k=2)


def test_numerals_are_values_of_n(el):
    zero = el.judgment(parse("|- 0 : N"))["value"]
    one = el.judgment(parse("|- 1 : N"))["value"]
    assert zero != one


def test_numeral_out_of_range(el):
    with pytest.raises(TypingProblem):
        el.judgment(parse("|- 2 : N"))


def test_bool_elaborates_to_two_proof_groupoid(el):
    ty = el.judgment(parse("|- Bool type"))["value"]
    fib = ty.ob(ty.base.objects[0])
    assert len(fib.objects) == 1
    pt = fib.objects[0]
    assert len(fib.hom(pt, pt)) == 2


def test_beta_holds_semantically(el):
    lhs = el.judgment(parse("|- (lam (x : N) x) 1 : N"))["value"]
    rhs = el.judgment(parse("|- 1 : N"))["value"]
    assert lhs == rhs


def test_pair_projections(el):
    fst = el.judgment(parse("|- fst pair(0, 1) : N"))["value"]
    snd = el.judgment(parse("|- snd pair(0, 1) : N"))["value"]
    zero = el.judgment(parse("|- 0 : N"))["value"]
    one = el.judgment(parse("|- 1 : N"))["value"]
    assert fst == zero and snd == one


def test_rid_computes_on_refl(el):
    lhs = el.judgment(parse("|- rid(a b q. N, z. z, refl 1) : N"))["value"]
    rhs = el.judgment(parse("|- 1 : N"))["value"]
    assert lhs == rhs


def test_rid_open_proof(el):
    r = el.judgment(
        parse("x : N, y : N, p : Id N x y |- rid(a b q. N, z. z, p) : N")
    )
    assert r["kind"] == "term"


def test_type_mismatch_rejected(el):
    with pytest.raises(TypingProblem):
        el.judgment(parse("|- tt : N"))
    with pytest.raises(TypingProblem):
        el.judgment(parse("|- lam (x : N) x : N"))
    with pytest.raises(TypingProblem):
        el.judgment(parse("|- fst 1 : N"))


def test_id_endpoints_must_match_index_type(el):
    with pytest.raises(TypingProblem):
        el.judgment(parse("|- Id N tt tt type"))


def test_elaborate_convenience():
    assert elaborate("|- ctx", k=2)["kind"] == "context"
