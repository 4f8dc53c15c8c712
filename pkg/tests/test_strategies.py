"""Strategy constructions, composition, constraints."""

from hypothesis import given, settings, strategies as st

from gweng.budget import Budget
from gweng.demos import flat_function_strategy
from gweng.gwe import bang_compose
from gweng.kernel import EMPTY, flat
from gweng.predicative import value_strategy
from gweng.strategies import (
    Strategy,
    apply_strategy,
    constraint_report,
    copycat,
    deterministic_violation,
    enumerate_strategies,
    exponential,
    as_strategy_loose,
    is_innocent,
    is_total,
    is_well_bracketed,
    linear_implication,
    tensor,
    product,
)


def answer_of(out):
    vals = {s.move(1).payload for s in out.positions if len(s) == 2}
    assert len(vals) == 1
    return vals.pop()


def test_enumerate_flat_strategy_count():
    # the bottom strategy plus one per value
    assert len(enumerate_strategies(flat([0, 1, 2]))) == 4
    assert len(enumerate_strategies(flat([0]))) == 2


def test_deterministic_violation_detected():
    q, a, b = flat([0, 1]).moves, None, None
    g = flat([0, 1])
    q = [m for m in g.moves if g.labeling[m] == "OQ"][0]
    answers = [m for m in g.moves if g.labeling[m] == "PA"]
    pos = {EMPTY.snoc(q, None)}
    for ans in answers:
        pos.add(EMPTY.snoc(q, None).snoc(ans, 0))
    assert deterministic_violation(
        Strategy(pos, g.labeling, check=False)
    ) is not None


def test_copycat_identity_for_composition():
    f3 = flat([0, 1, 2])
    sigma = flat_function_strategy(lambda v: (v + 1) % 3, 3)
    cc = copycat(f3)
    assert bang_compose(cc, sigma) == sigma
    assert bang_compose(sigma, cc) == sigma


def test_succ_then_double():
    k = 10
    succ = flat_function_strategy(lambda v: v + 1, k)
    double = flat_function_strategy(lambda v: 2 * v, k)
    comp = bang_compose(double, succ)
    nk = flat(list(range(k)))
    for n in range(4):
        out = apply_strategy(comp, value_strategy(nk, n))
        assert answer_of(out) == 2 * (n + 1)


def test_composition_is_associative():
    k = 17
    f = flat_function_strategy(lambda v: v + 1, k)
    g = flat_function_strategy(lambda v: 2 * v, k)
    h = flat_function_strategy(lambda v: v + 3, k)
    assert bang_compose(h, bang_compose(g, f)) == bang_compose(
        bang_compose(h, g), f
    )


@given(st.integers(0, 3), st.integers(1, 3))
@settings(max_examples=15, deadline=None)
def test_function_strategy_computes(n, mult):
    k = 3 * mult + 4
    phi = flat_function_strategy(lambda v: (mult * v) % k, k)
    out = apply_strategy(phi, value_strategy(flat(list(range(k))), n))
    assert answer_of(out) == (mult * n) % k


def test_constraints_hold_for_function_strategies():
    k = 5
    phi = flat_function_strategy(lambda v: (v + 2) % k, k)
    nk = flat(list(range(k)))
    arrow = linear_implication(
        as_strategy_loose(exponential(nk, Budget(6, 1, 200000))),
        nk,
        Budget(6, 1, 200000),
    )
    rep = constraint_report(phi, arrow)
    assert all(rep.values()), rep


def test_value_strategy_is_innocent_total_wb():
    g = flat([7, 8])
    v = value_strategy(g, 7)
    assert is_innocent(v, g) and is_total(v, g) and is_well_bracketed(v, g)


def test_tensor_and_product_label_sides():
    a, b = flat([0]), flat([1])
    t = tensor(a, b)
    p = product(a, b)
    assert any(m.tags and m.tags[0] == ("L",) for m in t.moves)
    assert any(m.tags and m.tags[0] == ("R",) for m in p.moves)
