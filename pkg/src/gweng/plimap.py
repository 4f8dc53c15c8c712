"""Pointwise families of strategies between predicative games.

A map between predicative games A and B is a family: for each
strategy sigma of A, a component strategy on !sigma -o pi(sigma),
where pi is the induced map on strategies.  Composition is pointwise
(compose with the promotion of the first component); the identity is
the family of copy-cats.  Uniformity ties the components together:
on a shared odd prefix all components extend the same way.
"""

from __future__ import annotations

import hashlib
import json

from .budget import DEFAULT
from .kernel import Game, move_key
from .strategies import (
    LEFT,
    RIGHT,
    Strategy,
    as_strategy_loose,
    compose,
    copycat,
    exponential,
    is_innocent,
    is_noetherian,
    is_on,
    is_total,
    is_well_bracketed,
    linear_implication,
    pairing,
    _side,
    project,
)


class PliMap:
    """A pointwise strategy family from A to B (both PredGame)."""

    __slots__ = ("dom", "cod", "comp", "proj", "_digest")

    def __init__(self, dom, cod, comp, proj):
        self.dom = dom
        self.cod = cod
        self.comp = dict(comp)
        self.proj = dict(proj)
        self._digest = None
        for d in (s.digest() for s in dom.strategies):
            if d not in self.proj:
                raise ValueError("family not total on the domain")
            if self.proj[d] not in {s.digest() for s in cod.strategies}:
                raise ValueError("image strategy not in the codomain")

    def apply(self, sigma):
        """The action on objects."""
        return self.cod.lookup(self.proj[sigma.digest()])

    def component(self, sigma):
        return self.comp[sigma.digest()]

    def digest(self):
        if self._digest is None:
            blob = json.dumps(
                sorted(
                    (d, self.proj[d], self.comp[d].digest()) for d in self.proj
                )
            )
            self._digest = hashlib.sha256(blob.encode()).hexdigest()[:16]
        return self._digest

    def __eq__(self, other):
        """Equality as maps: same domain and the same assignment; the
        codomain is a typing annotation and may be any game containing
        the images."""
        return (
            isinstance(other, PliMap)
            and self.dom == other.dom
            and self.proj == other.proj
            and self.comp == other.comp
        )

    def __hash__(self):
        return hash((self.dom, self.digest()))

    def __repr__(self):
        return "<PliMap %s: %d components>" % (self.digest()[:8], len(self.comp))

    def to_strategy(self):
        """Materialize the family as one strategy: domain moves are
        tagged with the index strategy, codomain moves with its image."""
        pos = set()
        lab = {}
        for d, c in self.comp.items():
            dt = ("Sd", d)
            ct = ("Sc", self.proj[d])

            def fn(m, dt=dt, ct=ct):
                if _side(m) == LEFT:
                    return m.untagged().tagged(dt).tagged(LEFT)
                return m.untagged().tagged(ct).tagged(RIGHT)

            for s in c.positions:
                pos.add(project(s, fn))
            for m in c.moves:
                lab[fn(m)] = c.labeling[m]
        return as_strategy_loose(Game(pos, lab))


def uniform_pair(p1, p2):
    """Shared odd prefixes extend identically in both play sets."""
    for s in p1:
        if len(s) % 2 or len(s) == 0:
            continue
        stem = s.prefix(len(s) - 1)
        if stem in p2 and s not in p2:
            # the other component knows the odd prefix; it must either
            # answer the same way or this is a violation
            return False
    return True


def is_uniform(strategies):
    strategies = list(strategies)
    for i, a in enumerate(strategies):
        for b in strategies[i + 1:]:
            if not uniform_pair(a.positions, b.positions) or not uniform_pair(
                b.positions, a.positions
            ):
                return False
    return True


def check_pli(pm, budget=DEFAULT):
    """Components are strategies on !sigma -o pi(sigma); the family is
    uniform."""
    for sigma in pm.dom.strategies:
        c = pm.component(sigma)
        tau = pm.apply(sigma)
        arrow = linear_implication(
            as_strategy_loose(exponential(sigma, budget)), tau, budget
        )
        if not is_on(c, arrow):
            return False
    return is_uniform([pm.component(s) for s in pm.dom.strategies])


def identity_map(pg, budget=DEFAULT):
    """The dereliction family: copy-cat at every strategy."""
    comp = {}
    proj = {}
    for s in pg.strategies:
        comp[s.digest()] = copycat(s, budget)
        proj[s.digest()] = s.digest()
    return PliMap(pg, pg, comp, proj)


def compose_maps(g, f, budget=DEFAULT):
    """g after f (pointwise: compose g's component at the image with
    the promotion of f's component)."""
    from .gwe import bang_compose

    comp = {}
    proj = {}
    for s in f.dom.strategies:
        d = s.digest()
        mid = f.proj[d]
        comp[d] = bang_compose(g.comp[mid], f.comp[d], budget)
        proj[d] = g.proj[mid]
    return PliMap(f.dom, g.cod, comp, proj)


def pair_maps(f, g, paired_cod):
    """Pairing of families with a common domain; the image of sigma is
    the paired strategy of the two images."""
    from .strategies import product

    comp = {}
    proj = {}
    for s in f.dom.strategies:
        d = s.digest()
        both = pairing(f.comp[d], g.comp[d])
        comp[d] = both
        target = product(f.apply(s), g.apply(s))
        proj[d] = as_strategy_loose(target).digest()
    return PliMap(f.dom, paired_cod, comp, proj)


def constraint_report_map(pm, budget=DEFAULT):
    """Aggregate constraint report over the components."""
    out = {"innocent": True, "well_bracketed": True, "total": True, "noetherian": True}
    for sigma in pm.dom.strategies:
        c = pm.component(sigma)
        tau = pm.apply(sigma)
        arrow = linear_implication(
            as_strategy_loose(exponential(sigma, budget)), tau, budget
        )
        out["innocent"] &= is_innocent(c, arrow)
        out["well_bracketed"] &= is_well_bracketed(c, arrow)
        out["total"] &= is_total(c, arrow)
        out["noetherian"] &= is_noetherian(c, arrow, budget)
    return out
