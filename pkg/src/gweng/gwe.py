"""Groupoids whose objects are strategies.

A groupoid-of-strategies keeps its underlying predicative game, a hom
table of morphisms (each with explicit domain, codomain and a witness
strategy), and composition/identity/inverse tables.  Witnesses must
identify morphisms uniquely; ambiguous tables are rejected when the
groupoid is built.  The equality game of two objects is the
predicative game of the witnesses between them.
"""

from __future__ import annotations

import hashlib
import json

from .budget import DEFAULT, Budget
from .plimap import PliMap, compose_maps, identity_map, constraint_report_map
from .predicative import PredGame
from .kernel import initial_indices
from .strategies import (
    LEFT,
    Strategy,
    as_strategy_loose,
    compose,
    copycat,
    exponential,
    lift_to_arrow,
    restrict_side,
)


class AmbiguousWitness(Exception):
    pass


class Morphism:
    __slots__ = ("dom", "cod", "witness", "data")

    def __init__(self, dom, cod, witness, data=None):
        self.dom = dom
        self.cod = cod
        self.witness = witness
        self.data = data

    def key(self):
        return (self.dom.digest(), self.cod.digest(), self.witness.digest())

    def __eq__(self, other):
        return isinstance(other, Morphism) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "<Mor %s: %s -> %s>" % (
            self.witness.digest()[:8],
            self.dom.digest()[:8],
            self.cod.digest()[:8],
        )


class GwE:
    """A groupoid of strategies with explicit tables."""

    def __init__(self, game, morphisms, compose_fn, identity_fn, inverse_fn):
        self.game = game
        self._homs = {}
        self._by_witness = {}
        mors = list(morphisms)
        for m in mors:
            self._homs.setdefault((m.dom.digest(), m.cod.digest()), []).append(m)
            wd = m.witness.digest()
            if wd in self._by_witness and self._by_witness[wd].key() != m.key():
                raise AmbiguousWitness(wd)
            self._by_witness[wd] = m
        for v in self._homs.values():
            v.sort(key=lambda m: m.key())
        self._ids = {}
        for obj in game.strategies:
            i = identity_fn(obj)
            self._ids[obj.digest()] = self._resolve(i)
        self._comp = {}
        for m2 in mors:
            for m1 in mors:
                if m1.cod.digest() == m2.dom.digest():
                    c = compose_fn(m2, m1)
                    self._comp[(m2.key(), m1.key())] = self._resolve(c)
        self._inv = {}
        for m in mors:
            self._inv[m.key()] = self._resolve(inverse_fn(m))

    def _resolve(self, m):
        got = self._by_witness.get(m.witness.digest())
        if got is None or got.key() != m.key():
            raise KeyError("morphism not in the table: %r" % (m,))
        return got

    @property
    def objects(self):
        return self.game.strategies

    def morphisms(self):
        out = []
        for v in self._homs.values():
            out.extend(v)
        return sorted(out, key=lambda m: m.key())

    def hom(self, a, b):
        return tuple(self._homs.get((a.digest(), b.digest()), ()))

    def compose(self, m2, m1):
        return self._comp[(m2.key(), m1.key())]

    def identity(self, obj):
        return self._ids[obj.digest()]

    def inverse(self, m):
        return self._inv[m.key()]

    def by_witness(self, witness_digest):
        return self._by_witness[witness_digest]

    def eq_game(self, a=None, b=None):
        """The equality game: witnesses of hom(a, b) (of everything if
        no objects are given) as a predicative game."""
        if a is None:
            ws = [m.witness for m in self.morphisms()]
        else:
            ws = [m.witness for m in self.hom(a, b)]
        return PredGame(ws)

    def digest(self):
        blob = json.dumps(
            [self.game.digest(), [list(m.key()) for m in self.morphisms()]]
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def __eq__(self, other):
        return (
            isinstance(other, GwE)
            and self.game == other.game
            and {m.key() for m in self.morphisms()}
            == {m.key() for m in other.morphisms()}
        )

    def __hash__(self):
        return hash(self.digest())

    def __repr__(self):
        return "<GwE %s: %d objects, %d morphisms>" % (
            self.digest()[:8],
            len(self.objects),
            len(self.morphisms()),
        )


def check_groupoid(g):
    """Category and groupoid laws over the finite tables."""
    mors = g.morphisms()
    report = {
        "identity_typing": True,
        "unit_laws": True,
        "associativity": True,
        "inverse_laws": True,
        "composition_typing": True,
    }
    for obj in g.objects:
        i = g.identity(obj)
        if i.dom != obj or i.cod != obj:
            report["identity_typing"] = False
    for m in mors:
        if g.compose(m, g.identity(m.dom)) != m:
            report["unit_laws"] = False
        if g.compose(g.identity(m.cod), m) != m:
            report["unit_laws"] = False
        inv = g.inverse(m)
        if inv.dom != m.cod or inv.cod != m.dom:
            report["inverse_laws"] = False
        elif (
            g.compose(inv, m) != g.identity(m.dom)
            or g.compose(m, inv) != g.identity(m.cod)
        ):
            report["inverse_laws"] = False
    for m2 in mors:
        for m1 in mors:
            if m1.cod.digest() != m2.dom.digest():
                continue
            c = g.compose(m2, m1)
            if c.dom != m1.dom or c.cod != m2.cod:
                report["composition_typing"] = False
            for m3 in mors:
                if m2.cod.digest() != m3.dom.digest():
                    continue
                if g.compose(m3, g.compose(m2, m1)) != g.compose(
                    g.compose(m3, m2), m1
                ):
                    report["associativity"] = False
    return report


# ---------------------------------------------------------------------------
# constructors

def bang_compose(w2, w1, budget=DEFAULT):
    """Composition of strategies seen as maps: w2 after the promotion
    of w1.  The promotion budget is clamped to the number of source
    threads w2 actually opens in any of its plays."""
    from .strategies import _memo_get

    key = (
        "bang",
        w2.digest(),
        w1.digest(),
        budget.max_play_length,
        budget.max_threads,
    )
    return _memo_get(key, lambda: _bang_compose(w2, w1, budget))


def _bang_compose(w2, w1, budget):
    wid = 0
    for s in w2.positions:
        wid = max(wid, len(initial_indices(restrict_side(s, LEFT))))
    b = Budget(
        min(budget.max_play_length, max(1, wid) * w1.max_length()),
        max(1, wid),
        budget.max_enum,
    )
    return compose(as_strategy_loose(exponential(w1, b)), w2, budget)


def discrete_gwe(pg, budget=DEFAULT):
    """Only identity morphisms (witnessed by copy-cats)."""
    mors = [Morphism(s, s, copycat(s, budget)) for s in pg.strategies]
    by_obj = {m.dom.digest(): m for m in mors}

    def comp(m2, m1):
        return m1

    def ident(obj):
        return by_obj[obj.digest()]

    def inv(m):
        return m

    return GwE(pg, mors, comp, ident, inv)


def gwe_from_witnesses(pg, homs, budget=DEFAULT):
    """Build a groupoid from witness strategies on !dom -o cod, with
    composition by interaction and inverses found in the table.

    homs: iterable of (dom, cod, witness).
    """
    mors = [Morphism(d, c, w) for (d, c, w) in homs]
    have = {m.key() for m in mors}
    for s in pg.strategies:
        k = (s.digest(), s.digest(), copycat(s, budget).digest())
        if k not in have:
            mors.append(Morphism(s, s, copycat(s, budget)))
            have.add(k)
    by_witness = {}
    for m in mors:
        if m.witness.digest() in by_witness:
            raise AmbiguousWitness(m.witness.digest())
        by_witness[m.witness.digest()] = m

    def comp(m2, m1):
        w = bang_compose(m2.witness, m1.witness, budget)
        return Morphism(m1.dom, m2.cod, w)

    def ident(obj):
        return Morphism(obj, obj, copycat(obj, budget))

    def inv(m):
        for cand in mors:
            if cand.dom != m.cod or cand.cod != m.dom:
                continue
            if (
                bang_compose(cand.witness, m.witness, budget)
                == copycat(m.dom, budget)
                and bang_compose(m.witness, cand.witness, budget)
                == copycat(m.cod, budget)
            ):
                return cand
        raise KeyError("no inverse for %r" % (m,))

    return GwE(pg, mors, comp, ident, inv)


def lazy_component(cod_witness):
    """The equality-map component that ignores its source proof and
    plays the target witness on the codomain."""
    return lift_to_arrow(cod_witness)


# ---------------------------------------------------------------------------
# ep-strategies

class EpMap:
    """A morphism of groupoids-of-strategies: a family on the games
    plus a family on the equality games."""

    __slots__ = ("src", "dst", "base", "eq")

    def __init__(self, src, dst, base, eq):
        self.src = src
        self.dst = dst
        self.base = base  # PliMap src.game -> dst.game
        self.eq = eq      # PliMap src.eq_game() -> dst.eq_game()

    def apply_obj(self, sigma):
        return self.base.apply(sigma)

    def apply_mor(self, m):
        w2 = self.dst.game  # unused; resolution goes through the table
        wd = self.eq.proj[m.witness.digest()]
        return self.dst.by_witness(wd)

    def digest(self):
        blob = json.dumps([self.base.digest(), sorted(self.eq.proj.items())])
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def __eq__(self, other):
        """Equality compares the strategy family on the games and the
        assignment on equality proofs; the component strategies of the
        equality part are a replay device and carry no extra data."""
        return (
            isinstance(other, EpMap)
            and self.src == other.src
            and self.dst == other.dst
            and self.base == other.base
            and self.eq.proj == other.eq.proj
        )

    def __hash__(self):
        return hash(self.digest())

    def __repr__(self):
        return "<EpMap %s>" % self.digest()[:8]


def identity_ep(g, budget=DEFAULT):
    return EpMap(
        g,
        g,
        identity_map(g.game, budget),
        identity_map(g.eq_game(), budget),
    )


def compose_ep(g2, g1, budget=DEFAULT):
    if g1.dst is not g2.src and g1.dst != g2.src:
        raise ValueError("not composable")
    return EpMap(
        g1.src,
        g2.dst,
        compose_maps(g2.base, g1.base, budget),
        compose_maps(g2.eq, g1.eq, budget),
    )


def check_ep(ep):
    """The three conditions on an equality-preserving map: typing of
    the equality action, functoriality, identity preservation."""
    A, B = ep.src, ep.dst
    for m in A.morphisms():
        try:
            img = ep.apply_mor(m)
        except KeyError:
            return False
        if img.dom != ep.apply_obj(m.dom) or img.cod != ep.apply_obj(m.cod):
            return False
    for m2 in A.morphisms():
        for m1 in A.morphisms():
            if m1.cod.digest() != m2.dom.digest():
                continue
            lhs = ep.apply_mor(A.compose(m2, m1))
            rhs = B.compose(ep.apply_mor(m2), ep.apply_mor(m1))
            if lhs != rhs:
                return False
    for obj in A.objects:
        if ep.apply_mor(A.identity(obj)) != B.identity(ep.apply_obj(obj)):
            return False
    return True


def fun_of(ep):
    """The extensional functor of an ep-map: object and arrow tables."""
    ob = {s.digest(): ep.apply_obj(s).digest() for s in ep.src.objects}
    ar = {
        m.key(): ep.apply_mor(m).key() for m in ep.src.morphisms()
    }
    return {"objects": ob, "arrows": ar}


def check_pge_morphism(ep, budget=DEFAULT):
    """Constraint report for a morphism of the category of well-founded
    groupoids-of-strategies."""
    rep = constraint_report_map(ep.base, budget)
    rep["ep"] = check_ep(ep)
    return rep


def pge_law_suite(gwes, eps, budget=DEFAULT):
    """Category laws of groupoids-of-strategies and their maps.

    Checks each groupoid, each map's equality preservation, the unit
    laws against identities, associativity on composable triples, and
    preservation of equality actions under composition.  Returns a
    list of violation descriptions (empty when everything holds).
    """
    bad = []
    for g in gwes:
        rep = check_groupoid(g)
        for law, ok in rep.items():
            if not ok:
                bad.append({"law": law, "object": g.digest()})
    for ep in eps:
        if not check_ep(ep):
            bad.append({"law": "equality_preservation", "object": ep.digest()})
        if compose_ep(ep, identity_ep(ep.src, budget), budget) != ep:
            bad.append({"law": "right_unit", "object": ep.digest()})
        if compose_ep(identity_ep(ep.dst, budget), ep, budget) != ep:
            bad.append({"law": "left_unit", "object": ep.digest()})
    for f in eps:
        for g in eps:
            if g.src != f.dst:
                continue
            gf = compose_ep(g, f, budget)
            if not check_ep(gf):
                bad.append({
                    "law": "ep_closed_under_composition",
                    "object": gf.digest(),
                })
            for m in f.src.morphisms():
                if gf.apply_mor(m) != g.apply_mor(f.apply_mor(m)):
                    bad.append({
                        "law": "composite_equality_action",
                        "object": gf.digest(),
                    })
            for h in eps:
                if h.src != g.dst:
                    continue
                if compose_ep(h, gf, budget) != compose_ep(
                    compose_ep(h, g, budget), f, budget
                ):
                    bad.append({
                        "law": "associativity",
                        "object": (h.digest(), g.digest(), f.digest()),
                    })
    return bad
