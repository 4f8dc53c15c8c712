"""Dependent groupoids and the product, sum, and equality groupoids."""

from gweng.budget import Budget
from gweng.cwf import bool_gwe, nat_gwe, unit_gwe
from gweng.dependent import (
    check_dgwe,
    check_pi_obj,
    constant_dgwe,
    idhat,
    pihat,
    sigmahat,
)
from gweng.gwe import check_groupoid
from gweng.isom import PosBij, NotInvertible
from gweng.kernel import EMPTY, Move

import pytest


def test_constant_family_is_dependent_groupoid():
    g = bool_gwe()
    assert check_dgwe(constant_dgwe(g, nat_gwe(2)))


def test_pihat_unit_unit_has_three_interrogation_styles():
    u = unit_gwe()
    pg = pihat(u, constant_dgwe(u, u))
    assert len(pg.objects) == 3
    assert all(check_pi_obj(po) for po in pg.piobs.values())
    rep = check_groupoid(pg)
    assert all(rep.values()), rep


def test_pihat_counts_scale_with_fiber():
    # single-threaded short plays: one lazy and one interrogating
    # style at fiber size one, then one value choice per style branch
    b = Budget(8, 1, 200000)
    n1 = nat_gwe(1, b)
    n2 = nat_gwe(2, b)
    assert len(pihat(n1, constant_dgwe(n1, n1, b), b).objects) == 2
    assert len(pihat(n2, constant_dgwe(n2, n2, b), b).objects) == 6


def test_sigmahat_over_bool():
    b = bool_gwe()
    sg = sigmahat(b, constant_dgwe(b, b))
    assert len(sg.objects) == 1
    # two base proofs times two fibre proofs
    assert len(sg.hom(sg.objects[0], sg.objects[0])) == 4
    rep = check_groupoid(sg)
    assert all(rep.values()), rep


def test_idhat_bool_two_objects_no_crossings():
    b = bool_gwe()
    pt = b.objects[0]
    idty = idhat(b, pt, pt)
    assert len(idty.objects) == 2
    for x in idty.objects:
        for y in idty.objects:
            homs = idty.hom(x, y)
            if x.digest() == y.digest():
                assert len(homs) == 1
            else:
                assert len(homs) == 0
    rep = check_groupoid(idty)
    assert all(rep.values()), rep


def test_idhat_discrete_point_is_contractible():
    n = nat_gwe(1)
    pt = n.objects[0]
    idty = idhat(n, pt, pt)
    assert len(idty.objects) == 1


def test_posbij_rejects_nonfunctional_pairs():
    a, b, c = Move("a"), Move("b"), Move("c")
    x = EMPTY.snoc(a, None)
    y = EMPTY.snoc(b, None)
    z = EMPTY.snoc(c, None)
    with pytest.raises(NotInvertible):
        PosBij([(x, y), (x, z)])
    with pytest.raises(NotInvertible):
        PosBij([(x, y.snoc(c, 0))])


def test_posbij_then_and_inverse():
    a, b = Move("a"), Move("b")
    x = EMPTY.snoc(a, None)
    y = EMPTY.snoc(b, None)
    f = PosBij([(EMPTY, EMPTY), (x, y)])
    assert f.then(f.inverse()) == PosBij([(EMPTY, EMPTY), (x, x)])
