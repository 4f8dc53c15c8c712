"""Strategy collections, completeness, names, universes."""

from gweng.demos import nine_strategies
from gweng.kernel import flat
from gweng.predicative import (
    PredGame,
    Registry,
    check_rank_guard,
    completeness_closure,
    consistent,
    el,
    enumerate_strategies,
    games_as_collections_check,
    is_complete,
    name_strategy,
    pred_of_game,
    universe,
    value_strategy,
)


def test_closure_of_two_generators_is_nine():
    rep = nine_strategies()
    assert rep["count"] == 9
    assert rep["collections_check"]


def test_all_strategies_on_flat_are_complete():
    g = flat([0, 1])
    strats = enumerate_strategies(g)
    assert is_complete(strats)
    assert games_as_collections_check(g)


def test_consistency_of_values_on_one_game():
    g = flat([0, 1, 2])
    assert consistent([value_strategy(g, 0), value_strategy(g, 1)])


def test_closure_is_idempotent():
    g = flat([0, 1])
    once = completeness_closure(enumerate_strategies(g))
    twice = completeness_closure(once.strategies)
    assert once == twice


def test_rank_of_flat_games():
    assert pred_of_game(flat([0])).rank() == 1
    assert pred_of_game(flat([0], rank=3)).rank() == 4


def test_el_after_name_is_identity():
    reg = Registry()
    for vals in ([0], [0, 1], ["a", "b", "c"]):
        pg = pred_of_game(flat(vals))
        reg.register(pg)
    for pg in list(reg.objects.values()):
        n = name_strategy(pg, reg)
        assert el(reg, n) == pg


def test_universe_membership_is_rank_bounded():
    reg = Registry()
    low = pred_of_game(flat([0]))            # rank 1
    high = pred_of_game(flat([0], rank=5))   # rank 6
    reg.register(low)
    reg.register(high)
    u0 = universe(reg, 0)
    assert name_strategy(low, reg) in set(u0.strategies)
    assert name_strategy(high, reg) not in set(u0.strategies)
    u5 = universe(reg, 5)
    assert name_strategy(high, reg) in set(u5.strategies)


def test_universe_hierarchy():
    reg = Registry()
    reg.register(pred_of_game(flat([0])))
    u0 = universe(reg, 0)
    reg.register(u0)
    for j in range(1, 4):
        uj = universe(reg, j)
        assert name_strategy(u0, reg) in set(uj.strategies)


def test_rank_guard():
    assert check_rank_guard(pred_of_game(flat([0])))
