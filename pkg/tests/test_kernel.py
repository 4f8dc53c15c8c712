"""Moves, justified sequences, views, legality, games, serialization."""

import json

from hypothesis import given, settings, strategies as st

from gweng.kernel import (
    EMPTY,
    Game,
    JSeq,
    Move,
    check_game,
    flat,
    game_from_json,
    game_to_json,
    is_legal,
    pview,
    oview,
    terminal_game,
    well_founded,
    well_opened,
)


def chain_play(moves):
    s = EMPTY
    for i, m in enumerate(moves):
        s = s.snoc(m, None if i == 0 else i - 1)
    return s


def test_move_tagging_roundtrip():
    m = Move("q", 2)
    t = m.tagged(("L",))
    assert t.tags == (("L",),)
    assert t.untagged() == m
    assert t != m


@given(st.text(min_size=1, max_size=6), st.integers(0, 5))
def test_move_tag_untag_inverse(payload, rank):
    m = Move(payload, rank)
    assert m.tagged(("T", 0)).untagged() == m


def test_jseq_prefix_and_snoc():
    a, b = Move("a"), Move("b")
    s = EMPTY.snoc(a, None).snoc(b, 0)
    assert len(s) == 2
    assert s.prefix(1) == EMPTY.snoc(a, None)
    assert s.move(0) == a and s.just(1) == 0


def test_flat_game_positions():
    g = flat([0, 1, 2])
    # empty, the question, one answer per value
    assert len(g.positions) == 5
    rep = check_game(g)
    assert rep.valid and rep.well_opened and rep.well_founded


def test_terminal_game():
    g = terminal_game()
    assert g.positions == frozenset({EMPTY})
    assert check_game(g).valid


def test_check_game_rejects_bad_labels():
    q, a = Move("q"), Move("a")
    s = EMPTY.snoc(q, None).snoc(a, 0)
    g = Game({s}, {q: "OQ", a: "PQ"})
    # an answer enabled by the question but labeled as a question is
    # fine by the arena axioms; opposite-polarity enabling must hold
    bad = Game({s}, {q: "OQ", a: "OA"})
    assert not check_game(bad).enabling_ok


def test_legality_rejects_nonalternating():
    q1, q2 = Move("q1"), Move("q2")
    lab = {q1: "OQ", q2: "OQ"}
    s = EMPTY.snoc(q1, None).snoc(q2, None)
    assert not is_legal(s, lab, {(None, q1), (None, q2)})


def test_pview_of_chain_is_whole_chain():
    ms = [Move("m%d" % i) for i in range(4)]
    lab = {ms[0]: "OQ", ms[1]: "PQ", ms[2]: "OQ", ms[3]: "PQ"}
    s = chain_play(ms)
    g = Game({s.prefix(i) for i in range(5)}, lab)
    assert pview(s, g.labeling) == s
    assert len(oview(s, g.labeling)) >= 1


def test_game_json_roundtrip():
    g = flat(["x", "y"])
    data = json.loads(json.dumps(game_to_json(g)))
    h = game_from_json(data)
    assert h.positions == g.positions
    assert h.labeling == g.labeling
    assert h.digest() == g.digest()


@given(st.lists(st.integers(0, 50), min_size=1, max_size=6, unique=True))
@settings(max_examples=30, deadline=None)
def test_flat_json_roundtrip_any_values(values):
    g = flat(values)
    h = game_from_json(game_to_json(g))
    assert h.digest() == g.digest()


def test_well_opened_and_founded_flags():
    g = flat([1])
    assert well_opened(g)
    assert well_founded(g)
