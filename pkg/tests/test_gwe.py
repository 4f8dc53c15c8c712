"""Groupoids of strategies and their equality-preserving maps."""

import pytest

from gweng.cwf import bool_gwe, nat_gwe, unit_gwe
from gweng.gwe import (
    AmbiguousWitness,
    bang_compose,
    check_ep,
    check_groupoid,
    compose_ep,
    discrete_gwe,
    fun_of,
    gwe_from_witnesses,
    identity_ep,
    pge_law_suite,
)
from gweng.kernel import flat
from gweng.predicative import pred_of_game
from gweng.suites import discrete_context, point_map


def test_bool_groupoid_laws():
    b = bool_gwe()
    rep = check_groupoid(b)
    assert all(rep.values()), rep


def test_bool_has_two_distinct_proofs():
    b = bool_gwe()
    pt = b.objects[0]
    proofs = b.hom(pt, pt)
    assert len(proofs) == 2
    w1, w2 = (m.witness for m in proofs)
    assert w1.positions != w2.positions


def test_bool_proof_composition_table():
    b = bool_gwe()
    pt = b.objects[0]
    der = b.identity(pt)
    rv = [m for m in b.hom(pt, pt) if m.witness != der.witness][0]
    assert b.compose(rv, rv).witness == der.witness
    assert b.compose(der, rv).witness == rv.witness
    assert b.inverse(rv).witness == rv.witness


def test_discrete_groupoid_laws():
    g = discrete_gwe(pred_of_game(flat([0, 1, 2])))
    rep = check_groupoid(g)
    assert all(rep.values()), rep
    assert all(len(g.hom(x, x)) == 1 for x in g.objects)


def test_gwe_from_witnesses_rejects_ambiguity():
    b = bool_gwe()
    pt = b.objects[0]
    w = b.identity(pt).witness
    with pytest.raises(AmbiguousWitness):
        gwe_from_witnesses(b.game, [(pt, pt, w), (pt, pt, w)])


def test_identity_ep_laws():
    g = nat_gwe(3)
    ide = identity_ep(g)
    assert check_ep(ide)
    assert compose_ep(ide, ide) == ide


def test_point_map_is_ep():
    src = discrete_context(["s0"])
    dst = bool_gwe()
    pm = point_map(src, dst, dst.objects[0])
    assert check_ep(pm)
    f = fun_of(pm)
    assert set(f["objects"].values()) == {dst.objects[0].digest()}


def test_ep_composition_acts_functorially():
    a = discrete_context(["x"])
    b = discrete_context(["y", "z"])
    c = bool_gwe()
    f = point_map(a, b, sorted(b.objects, key=lambda s: s.digest())[0])
    g = point_map(b, c, c.objects[0])
    gf = compose_ep(g, f)
    assert check_ep(gf)
    for m in a.morphisms():
        assert gf.apply_mor(m) == g.apply_mor(f.apply_mor(m))


def test_pge_law_suite_clean_on_small_instances():
    gwes = [bool_gwe(), unit_gwe(), discrete_context(["a", "b"])]
    eps = [identity_ep(g) for g in gwes]
    eps.append(point_map(gwes[2], gwes[0], gwes[0].objects[0]))
    violations = pge_law_suite(gwes, eps)
    assert violations == []
